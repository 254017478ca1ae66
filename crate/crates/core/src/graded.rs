//! The grading of the Weyl algebra by `i - j`.
//!
//! The component of degree `j` is `X^j k[XY]` for `j >= 0` and `k[XY] Y^{-j}`
//! for `j < 0`. Coordinates in `k[XY]` are obtained from monomial
//! coordinates through `X^a Y^a = (XY)(XY - 1)...(XY - a + 1)`.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Result, WeylError};
use crate::leading::{ell, Side};
use crate::poly::{stirling_first, stirling_second, Poly};
use crate::scalar::Scalar;
use crate::weyl::{Monomial, WeylElement};

/// Univariate polynomial `f(Z)` standing for `f(XY)`.
pub type XYPolynomial<F> = Poly<F>;

/// `X^j f(XY)` when `j >= 0`, `f(XY) Y^{-j}` when `j < 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct GradedForm<F: Scalar> {
    pub j: i64,
    pub f: XYPolynomial<F>,
}

impl<F: Scalar> GradedForm<F> {
    pub fn new(j: i64, f: XYPolynomial<F>) -> Self {
        GradedForm { j, f }
    }

    pub fn render(&self) -> String {
        let f = self.f.render("(X*Y)");
        let power = |var: &str, e: i64| {
            if e == 1 {
                var.to_string()
            } else {
                format!("{var}^{e}")
            }
        };
        match self.j {
            0 => f,
            j if j > 0 => format!("{}*[{f}]", power("X", j)),
            j => format!("[{f}]*{}", power("Y", -j)),
        }
    }
}

impl<F: Scalar> fmt::Display for GradedForm<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GradedFormJson {
    pub j: i64,
    /// Coefficients of `f` in increasing degree, as exact `num/den` strings.
    pub f: Vec<String>,
    pub text: String,
}

impl GradedForm<BigRational> {
    pub fn to_json(&self) -> GradedFormJson {
        GradedFormJson {
            j: self.j,
            f: self
                .f
                .coeffs()
                .iter()
                .map(crate::cli::rational_string)
                .collect(),
            text: self.render(),
        }
    }
}

/// Splits `p` into its nonzero homogeneous components, keyed by `i - j`.
pub fn homogeneous_components<F: Scalar>(p: &WeylElement<F>) -> BTreeMap<i64, WeylElement<F>> {
    let mut out: BTreeMap<i64, WeylElement<F>> = BTreeMap::new();
    for (m, c) in p.terms() {
        out.entry(Side::Plus.diag(m))
            .or_insert_with(WeylElement::zero)
            .add_term(m, c.clone());
    }
    out
}

pub fn is_homogeneous<F: Scalar>(p: &WeylElement<F>) -> Result<bool> {
    Ok(ell(p)? == *p)
}

/// Rewrites a nonzero homogeneous element as `X^j f(XY)` or `f(XY) Y^{-j}`.
pub fn to_xy_form<F: Scalar>(h: &WeylElement<F>) -> Result<GradedForm<F>> {
    if h.is_zero() {
        return Err(WeylError::ZeroElement("to_xy_form"));
    }
    if !is_homogeneous(h)? {
        return Err(WeylError::NotHomogeneous);
    }
    let j = crate::leading::v(h)?;
    // Each term is a * X^a Y^a shifted by X^j (or Y^{-j}); `a` is the smaller exponent.
    let top = h.terms().map(|(m, _)| m.i.min(m.j)).max().unwrap() as usize;
    let s1 = stirling_first(top);
    let mut coeffs = vec![F::zero(); top + 1];
    for (m, c) in h.terms() {
        let a = m.i.min(m.j) as usize;
        for (k, s) in s1[a].iter().enumerate().take(a + 1) {
            coeffs[k] += c.clone() * F::from_integer(s);
        }
    }
    Ok(GradedForm::new(j, Poly::from_coeffs(coeffs)))
}

/// Expands a graded form into normal form.
pub fn from_xy_form<F: Scalar>(g: &GradedForm<F>) -> WeylElement<F> {
    let Some(deg) = g.f.degree() else {
        return WeylElement::zero();
    };
    let s2 = stirling_second(deg);
    let mut out = WeylElement::zero();
    for (k, c) in g.f.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (a, s) in s2[k].iter().enumerate().take(k + 1) {
            let a = a as u32;
            let m = if g.j >= 0 {
                Monomial::new(a + g.j as u32, a)
            } else {
                Monomial::new(a, a + (-g.j) as u32)
            };
            out.add_term(m, c.clone() * F::from_integer(s));
        }
    }
    out
}

/// `f(Z + s)`.
pub fn shift<F: Scalar>(f: &XYPolynomial<F>, s: i64) -> XYPolynomial<F> {
    f.shift(s)
}
