//! Elements of the first Weyl algebra `k<X,Y>/(YX - XY - 1)` in normal form.
//!
//! An element is stored as a sparse map from normally ordered monomials
//! `X^i Y^j` (every `X` to the left of every `Y`) to nonzero coefficients.
//! Products are reduced back to normal form with the closed reordering rule
//!
//! ```text
//! X^k Y^j * X^l Y^m = sum_{s=0}^{min(j,l)} s! C(j,s) C(l,s) X^{k+l-s} Y^{j+m-s}
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use crate::error::{Result, WeylError};
use crate::scalar::Scalar;

/// The normally ordered monomial `X^i Y^j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub i: u32,
    pub j: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { i: 0, j: 0 };

    pub const fn new(i: u32, j: u32) -> Self {
        Monomial { i, j }
    }

    pub fn total_degree(self) -> u32 {
        self.i + self.j
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X^{}*Y^{}", self.i, self.j)
    }
}

/// Integer coefficients `s! C(j,s) C(l,s)` for `s = 0..=min(j,l)`, i.e. the
/// reordering of `Y^j X^l` into normal form.
pub fn reorder_coefficients(j: u32, l: u32) -> Vec<BigInt> {
    let top = j.min(l);
    let mut out = Vec::with_capacity(top as usize + 1);
    let mut c = BigInt::from(1u32);
    out.push(c.clone());
    for s in 1..=top {
        c = c * BigInt::from(j - s + 1) * BigInt::from(l - s + 1) / BigInt::from(s);
        out.push(c.clone());
    }
    out
}

/// An element `sum a_ij X^i Y^j` of the Weyl algebra in normal form.
///
/// No stored coefficient is zero, so structural equality is algebraic equality.
#[derive(Clone, PartialEq)]
pub struct WeylElement<F> {
    terms: BTreeMap<Monomial, F>,
}

impl<F: Scalar> WeylElement<F> {
    pub fn zero() -> Self {
        WeylElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn x() -> Self {
        Self::monomial(1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(i: u32, j: u32) -> Self {
        Self::term(F::one(), Monomial::new(i, j))
    }

    pub fn term(c: F, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        WeylElement { terms }
    }

    /// Builds an element from `(i, j, coefficient)` triples, combining
    /// duplicates and dropping zeros.
    pub fn from_terms<I>(triples: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, i64, F)>,
    {
        let mut out = Self::zero();
        for (i, j, c) in triples {
            let (Ok(i), Ok(j)) = (u32::try_from(i), u32::try_from(j)) else {
                return Err(WeylError::MalformedInput(format!(
                    "exponents must be nonnegative, got ({i}, {j})"
                )));
            };
            out.add_term(Monomial::new(i, j), c);
        }
        Ok(out)
    }

    pub fn from_monomials<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, F)>,
    {
        let mut out = Self::zero();
        for (m, c) in pairs {
            out.add_term(m, c);
        }
        out
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for elements of `k`, including zero.
    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(|m| *m == Monomial::ONE)
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(Monomial::ONE).is_one()
    }

    pub fn coeff(&self, m: Monomial) -> F {
        self.terms.get(&m).cloned().unwrap_or_else(F::zero)
    }

    /// Constant coefficient.
    pub fn constant_term(&self) -> F {
        self.coeff(Monomial::ONE)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &F)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m, -c.clone());
        }
        out
    }

    pub fn scalar_mul(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        WeylElement {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (*m, a.clone() * c.clone()))
                .collect(),
        }
    }

    /// `self + c * other`, the workhorse of every elimination in the crate.
    pub fn add_scaled(&mut self, c: &F, other: &Self) {
        if c.is_zero() {
            return;
        }
        for (m, a) in other.terms() {
            self.add_term(m, a.clone() * c.clone());
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                let base = ca.clone() * cb.clone();
                for (s, k) in reorder_coefficients(a.j, b.i).into_iter().enumerate() {
                    let s = s as u32;
                    let m = Monomial::new(a.i + b.i - s, a.j + b.j - s);
                    out.add_term(m, base.clone() * F::from_integer(&k));
                }
            }
        }
        out
    }

    /// `[self, other] = self*other - other*self`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut n = n;
        // Square-and-multiply; the algebra is associative.
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Maximum of `i + j` over the support.
    pub fn total_degree(&self) -> Result<u32> {
        self.terms
            .keys()
            .map(|m| m.total_degree())
            .max()
            .ok_or(WeylError::ZeroElement("total_degree"))
    }

    /// Largest `Y` exponent in the support, `0` for the zero element.
    pub fn max_y_exponent(&self) -> u32 {
        self.terms.keys().map(|m| m.j).max().unwrap_or(0)
    }

    /// Applies the algebra map sending `X -> x_image`, `Y -> y_image`.
    ///
    /// The caller is responsible for the images satisfying `[y, x] = 1`;
    /// otherwise the result depends on the normal-form presentation.
    pub fn substitute(&self, x_image: &Self, y_image: &Self) -> Self {
        let mut x_powers = vec![Self::one()];
        let mut y_powers = vec![Self::one()];
        let mut out = Self::zero();
        for (m, c) in self.terms() {
            while x_powers.len() <= m.i as usize {
                let next = x_powers.last().unwrap().mul(x_image);
                x_powers.push(next);
            }
            while y_powers.len() <= m.j as usize {
                let next = y_powers.last().unwrap().mul(y_image);
                y_powers.push(next);
            }
            let t = x_powers[m.i as usize].mul(&y_powers[m.j as usize]);
            out.add_scaled(c, &t);
        }
        out
    }
}

impl<F: Scalar> Default for WeylElement<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Scalar> fmt::Debug for WeylElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::cli::print(self))
    }
}

impl<F: Scalar> fmt::Display for WeylElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::cli::print(self))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl<'a, F: Scalar> $tr<&'a WeylElement<F>> for &'a WeylElement<F> {
            type Output = WeylElement<F>;
            fn $method(self, rhs: &'a WeylElement<F>) -> WeylElement<F> {
                WeylElement::$inner(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);
forward_binop!(Mul, mul, mul);

impl<F: Scalar> Neg for WeylElement<F> {
    type Output = WeylElement<F>;
    fn neg(self) -> WeylElement<F> {
        self.scalar_mul(&-F::one())
    }
}

impl<F: Scalar> Neg for &WeylElement<F> {
    type Output = WeylElement<F>;
    fn neg(self) -> WeylElement<F> {
        self.scalar_mul(&-F::one())
    }
}
