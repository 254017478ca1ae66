use serde::Serialize;

use crate::error::{Result, WeylError};
use crate::graded::{from_xy_form, is_homogeneous, to_xy_form, GradedForm, XYPolynomial};
use crate::linalg::{kernel, SparseVec};
use crate::poly::Poly;
use crate::scalar::Scalar;
use crate::weyl::WeylElement;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HomogKind {
    Empty,
    Line,
    AllOfKXY,
}

/// `Z(P) ∩ W_j` for a homogeneous non-scalar `P`.
#[derive(Debug, Clone, PartialEq)]
pub struct HomogComponentResult<F: Scalar> {
    pub kind: HomogKind,
    /// Monic generator when `kind == Line`.
    pub generator: Option<GradedForm<F>>,
}

impl<F: Scalar> HomogComponentResult<F> {
    fn empty() -> Self {
        HomogComponentResult {
            kind: HomogKind::Empty,
            generator: None,
        }
    }

    fn line(g: GradedForm<F>) -> Self {
        HomogComponentResult {
            kind: HomogKind::Line,
            generator: Some(g),
        }
    }

    pub fn dimension(&self) -> Option<usize> {
        match self.kind {
            HomogKind::Empty => Some(0),
            HomogKind::Line => Some(1),
            HomogKind::AllOfKXY => None,
        }
    }
}

fn poly_column<F: Scalar>(p: &XYPolynomial<F>) -> SparseVec<F> {
    SparseVec::from_entries(p.coeffs().iter().cloned().enumerate().collect())
}

/// Solves `g(Z) * left(Z) = g(Z + step) * right(Z)` over `deg g <= degree`.
///
/// With the substitutions used below this is `[P, Q] = 0` for
/// `P = X^r f(XY)`, `Q = X^j g(XY)`, where `f(XY) X^j = X^j f(XY + j)`.
fn solve_shift_equation<F: Scalar>(
    left: &XYPolynomial<F>,
    right: &XYPolynomial<F>,
    step: i64,
    degree: usize,
) -> Vec<XYPolynomial<F>> {
    let columns: Vec<_> = (0..=degree)
        .map(|k| {
            let zk = Poly::power_of_var(k);
            poly_column(&zk.mul(left).sub(&zk.shift(step).mul(right)))
        })
        .collect();
    kernel(&columns)
        .into_iter()
        .map(|v| {
            let mut g = Poly::zero();
            for (k, c) in v.entries() {
                g.add_monomial(*k, c.clone());
            }
            g
        })
        .collect()
}

/// Computes `Z(P) ∩ W_j` for homogeneous, non-scalar `P`.
///
/// Writing `P = X^r f(XY)` (`r > 0`) and `Q = X^j g(XY)`, commuting means
/// `g(Z) f(Z + j) = g(Z + r) f(Z)`, and alignment forces
/// `deg g = deg f * j / r`. The case `r < 0` is the mirror image with
/// `P = f(XY) Y^s`, `Q = g(XY) Y^t`: `f(Z) g(Z + s) = g(Z) f(Z + t)`.
pub fn homog_centralizer_component<F: Scalar>(
    p: &WeylElement<F>,
    j: i64,
) -> Result<HomogComponentResult<F>> {
    if p.is_zero() {
        return Err(WeylError::ZeroElement("homog_centralizer_component"));
    }
    if p.is_scalar() {
        return Err(WeylError::ScalarInput("homog_centralizer_component"));
    }
    if !is_homogeneous(p)? {
        return Err(WeylError::NotHomogeneous);
    }
    let form = to_xy_form(p)?;
    let r = form.j;
    let f = &form.f;
    let deg_f = f.degree().unwrap() as i64;

    if r == 0 {
        return Ok(if j == 0 {
            HomogComponentResult {
                kind: HomogKind::AllOfKXY,
                generator: None,
            }
        } else {
            HomogComponentResult::empty()
        });
    }
    // Only components on the same side of zero as P can be aligned with it.
    if j == 0 {
        return Ok(HomogComponentResult::line(GradedForm::new(0, Poly::one())));
    }
    if (r > 0) != (j > 0) {
        return Ok(HomogComponentResult::empty());
    }
    let (s, t) = (r.abs(), j.abs());
    if (deg_f * t) % s != 0 {
        return Ok(HomogComponentResult::empty());
    }
    let deg_g = (deg_f * t / s) as usize;

    let solutions = if r > 0 {
        // g(Z) f(Z + j) - g(Z + r) f(Z) = 0
        solve_shift_equation(&f.shift(j), f, r, deg_g)
    } else {
        // g(Z) f(Z + t) - g(Z + s) f(Z) = 0
        solve_shift_equation(&f.shift(t), f, s, deg_g)
    };
    let g = match solutions.as_slice() {
        [] => return Ok(HomogComponentResult::empty()),
        [g] => g.monic(),
        _ => {
            return Err(WeylError::Internal(format!(
                "component W_{j} of the centralizer has dimension {}",
                solutions.len()
            )))
        }
    };
    if g.degree() != Some(deg_g) {
        return Err(WeylError::Internal(format!(
            "solution of degree {:?} is not aligned with P (expected {deg_g})",
            g.degree()
        )));
    }
    let generator = GradedForm::new(j, g);
    let q = from_xy_form(&generator);
    if !p.commutator(&q).is_zero() {
        return Err(WeylError::Internal(
            "homogeneous solution does not commute with P".into(),
        ));
    }
    Ok(HomogComponentResult::line(generator))
}
