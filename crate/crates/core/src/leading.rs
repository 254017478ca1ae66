//! Leading forms with respect to the diagonal grading `i - j`.
//!
//! For `P = sum a_ij X^i Y^j` the `Plus` side looks at the maximal value of
//! `i - j` over the support and, on that diagonal, at the largest `i`. The
//! `Bar` side is the mirror image: maximal `j - i`, then largest `j`. Both
//! weights are reported as exponent pairs `(i, j)` of the monomial they pick.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Result, WeylError};
use crate::scalar::Scalar;
use crate::weyl::{Monomial, WeylElement};

/// Which of the two mirror-symmetric leading-form calculi to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    /// `v(P) = max(i - j)`, ties broken by the larger `i`.
    Plus,
    /// `vbar(P) = max(j - i)`, ties broken by the larger `j`.
    Bar,
}

impl Side {
    pub fn diag(self, m: Monomial) -> i64 {
        match self {
            Side::Plus => m.i as i64 - m.j as i64,
            Side::Bar => m.j as i64 - m.i as i64,
        }
    }

    fn tiebreak(self, m: Monomial) -> u32 {
        match self {
            Side::Plus => m.i,
            Side::Bar => m.j,
        }
    }

    /// Total order on monomials whose maximum over a support is the weight.
    pub fn key(self, m: Monomial) -> (i64, u32) {
        (self.diag(m), self.tiebreak(m))
    }
}

/// An exponent pair `(a, b)` standing for the monomial `X^a Y^b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Weight {
    pub a: u32,
    pub b: u32,
}

impl Weight {
    pub const fn new(a: u32, b: u32) -> Self {
        Weight { a, b }
    }

    pub fn monomial(self) -> Monomial {
        Monomial::new(self.a, self.b)
    }

    pub fn scaled(self, l: u32) -> Self {
        Weight::new(self.a * l, self.b * l)
    }

    /// `true` iff `self` and `other` lie on a common ray: `a*d = b*c`.
    pub fn aligned_with(self, other: Weight) -> bool {
        self.a as u64 * other.b as u64 == self.b as u64 * other.a as u64
    }

    /// If `self = l * dir`, returns `l`.
    pub fn multiple_of(self, dir: Weight) -> Option<u32> {
        let l = self.a.checked_div(dir.a).or(self.b.checked_div(dir.b))?;
        (dir.scaled(l) == self).then_some(l)
    }
}

impl From<Monomial> for Weight {
    fn from(m: Monomial) -> Self {
        Weight::new(m.i, m.j)
    }
}

impl std::ops::Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        Weight::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

fn nonzero<F: Scalar>(p: &WeylElement<F>, what: &'static str) -> Result<()> {
    if p.is_zero() {
        Err(WeylError::ZeroElement(what))
    } else {
        Ok(())
    }
}

fn top_monomial<F: Scalar>(p: &WeylElement<F>, side: Side) -> Option<Monomial> {
    p.terms().map(|(m, _)| m).max_by_key(|m| side.key(*m))
}

pub fn supp<F: Scalar>(p: &WeylElement<F>) -> BTreeSet<Monomial> {
    p.terms().map(|(m, _)| m).collect()
}

pub fn v_side<F: Scalar>(p: &WeylElement<F>, side: Side) -> Result<i64> {
    nonzero(p, "v")?;
    Ok(p.terms().map(|(m, _)| side.diag(m)).max().unwrap())
}

pub fn v<F: Scalar>(p: &WeylElement<F>) -> Result<i64> {
    v_side(p, Side::Plus)
}

pub fn vbar<F: Scalar>(p: &WeylElement<F>) -> Result<i64> {
    v_side(p, Side::Bar)
}

/// Sum of the terms on the leading diagonal.
pub fn ell_side<F: Scalar>(p: &WeylElement<F>, side: Side) -> Result<WeylElement<F>> {
    let top = v_side(p, side)?;
    Ok(WeylElement::from_monomials(
        p.terms()
            .filter(|(m, _)| side.diag(*m) == top)
            .map(|(m, c)| (m, c.clone())),
    ))
}

pub fn ell<F: Scalar>(p: &WeylElement<F>) -> Result<WeylElement<F>> {
    ell_side(p, Side::Plus)
}

pub fn ellbar<F: Scalar>(p: &WeylElement<F>) -> Result<WeylElement<F>> {
    ell_side(p, Side::Bar)
}

pub fn w_side<F: Scalar>(p: &WeylElement<F>, side: Side) -> Result<Weight> {
    nonzero(p, "w")?;
    Ok(top_monomial(p, side).unwrap().into())
}

pub fn w<F: Scalar>(p: &WeylElement<F>) -> Result<Weight> {
    w_side(p, Side::Plus)
}

pub fn wbar<F: Scalar>(p: &WeylElement<F>) -> Result<Weight> {
    w_side(p, Side::Bar)
}

pub fn ell_c_side<F: Scalar>(p: &WeylElement<F>, side: Side) -> Result<F> {
    nonzero(p, "ell_c")?;
    Ok(p.coeff(top_monomial(p, side).unwrap()))
}

pub fn ell_t_side<F: Scalar>(p: &WeylElement<F>, side: Side) -> Result<WeylElement<F>> {
    nonzero(p, "ell_t")?;
    let m = top_monomial(p, side).unwrap();
    Ok(WeylElement::term(p.coeff(m), m))
}

pub fn ell_t<F: Scalar>(p: &WeylElement<F>) -> Result<WeylElement<F>> {
    ell_t_side(p, Side::Plus)
}

pub fn ell_c<F: Scalar>(p: &WeylElement<F>) -> Result<F> {
    ell_c_side(p, Side::Plus)
}

pub fn is_monic_side<F: Scalar>(p: &WeylElement<F>, side: Side) -> Result<bool> {
    Ok(ell_c_side(p, side)?.is_one())
}

pub fn is_monic<F: Scalar>(p: &WeylElement<F>) -> Result<bool> {
    is_monic_side(p, Side::Plus)
}

/// Scales `p` so that its leading coefficient on `side` is one.
pub fn make_monic<F: Scalar>(p: &WeylElement<F>, side: Side) -> Result<WeylElement<F>> {
    let c = ell_c_side(p, side)?;
    Ok(p.scalar_mul(&(F::one() / c)))
}

/// The alignment test `k*m = j*l` for `w(P) = (k, j)`, `w(Q) = (l, m)`.
///
/// Not transitive: everything is aligned with an element of weight `(0, 0)`.
pub fn aligned_side<F: Scalar>(p: &WeylElement<F>, q: &WeylElement<F>, side: Side) -> Result<bool> {
    Ok(w_side(p, side)?.aligned_with(w_side(q, side)?))
}

pub fn aligned<F: Scalar>(p: &WeylElement<F>, q: &WeylElement<F>) -> Result<bool> {
    aligned_side(p, q, Side::Plus)
}

pub fn in_wplus<F: Scalar>(p: &WeylElement<F>) -> Result<bool> {
    Ok(v(p)? > 0)
}

pub fn in_wbarplus<F: Scalar>(p: &WeylElement<F>) -> Result<bool> {
    Ok(vbar(p)? > 0)
}

/// The side on which `p` has positive degree, preferring `Plus`.
/// `None` means `v(p) <= 0` and `vbar(p) <= 0`, i.e. `p` lies in `k[XY]`.
pub fn sector<F: Scalar>(p: &WeylElement<F>) -> Result<Option<Side>> {
    if in_wplus(p)? {
        Ok(Some(Side::Plus))
    } else if in_wbarplus(p)? {
        Ok(Some(Side::Bar))
    } else {
        Ok(None)
    }
}

/// Splits `w(P) = r * (i, j)` with `gcd(i, j) = 1`, `r > 0`.
pub fn primitive_direction_side<F: Scalar>(
    p: &WeylElement<F>,
    side: Side,
) -> Result<(Weight, u32)> {
    if v_side(p, side)? <= 0 {
        return Err(WeylError::WrongSector(format!(
            "primitive direction needs positive degree on the {side:?} side"
        )));
    }
    let wt = w_side(p, side)?;
    let r = wt.a.gcd(&wt.b);
    Ok((Weight::new(wt.a / r, wt.b / r), r))
}

pub fn primitive_direction<F: Scalar>(p: &WeylElement<F>) -> Result<(Weight, u32)> {
    primitive_direction_side(p, Side::Plus)
}

/// Everything the leading-form calculus says about one element.
#[derive(Debug, Clone)]
pub struct LeadingData<F: Scalar> {
    pub v: i64,
    pub vbar: i64,
    pub w: Weight,
    pub wbar: Weight,
    pub ell: WeylElement<F>,
    pub ellbar: WeylElement<F>,
    pub ell_t: WeylElement<F>,
    pub ell_c: F,
    pub monic: bool,
}

pub fn leading_data<F: Scalar>(p: &WeylElement<F>) -> Result<LeadingData<F>> {
    let ell_c = ell_c(p)?;
    Ok(LeadingData {
        v: v(p)?,
        vbar: vbar(p)?,
        w: w(p)?,
        wbar: wbar(p)?,
        ell: ell(p)?,
        ellbar: ellbar(p)?,
        ell_t: ell_t(p)?,
        monic: ell_c.is_one(),
        ell_c,
    })
}
