//! Dense univariate polynomials over a [`Scalar`] field.

use std::fmt;

use num_bigint::BigInt;

use crate::scalar::Scalar;
use crate::weyl::WeylElement;

/// `c_0 + c_1 Z + ... + c_n Z^n`, with `c_n != 0` unless the polynomial is zero.
#[derive(Clone, PartialEq)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

impl<F: Scalar> Poly<F> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The variable `Z`.
    pub fn var() -> Self {
        Self::from_coeffs(vec![F::zero(), F::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| F::from_i64(c)).collect())
    }

    /// `Z^n`.
    pub fn power_of_var(n: usize) -> Self {
        let mut coeffs = vec![F::zero(); n + 1];
        coeffs[n] = F::one();
        Poly { coeffs }
    }

    /// The falling factorial `Z (Z-1) ... (Z-n+1)`.
    pub fn falling_factorial(n: usize) -> Self {
        let mut p = Self::one();
        for t in 0..n {
            p = p.mul(&Self::from_coeffs(vec![F::from_i64(-(t as i64)), F::one()]));
        }
        p
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) => self.scale(&(F::one() / lc.clone())),
            None => Self::zero(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (a, ca) in self.coeffs.iter().enumerate() {
            for (b, cb) in other.coeffs.iter().enumerate() {
                out[a + b] += ca.clone() * cb.clone();
            }
        }
        Self::from_coeffs(out)
    }

    /// Adds `c * Z^k` in place.
    pub fn add_monomial(&mut self, k: usize, c: F) {
        if self.coeffs.len() <= k {
            self.coeffs.resize(k + 1, F::zero());
        }
        self.coeffs[k] += c;
        let trimmed = Self::from_coeffs(std::mem::take(&mut self.coeffs));
        *self = trimmed;
    }

    /// `f(Z + s)` expanded in powers of `Z`.
    pub fn shift(&self, s: i64) -> Self {
        let lin = Self::from_coeffs(vec![F::from_i64(s), F::one()]);
        // Horner in the shifted variable.
        let mut out = Self::zero();
        for c in self.coeffs.iter().rev() {
            out = out.mul(&lin).add(&Self::constant(c.clone()));
        }
        out
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * F::from_i64(k as i64))
                .collect(),
        )
    }

    pub fn eval(&self, z: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * z.clone() + c.clone();
        }
        acc
    }

    /// `T(S)` for an element `S` of the Weyl algebra.
    pub fn eval_element(&self, s: &WeylElement<F>) -> WeylElement<F> {
        let mut acc = WeylElement::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(s);
            acc.add_term(crate::weyl::Monomial::ONE, c.clone());
        }
        acc
    }

    /// Renders with the given variable name, highest degree first.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{abs}*{mono}"));
            }
        }
        out
    }
}

impl<F: Scalar> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("Z"))
    }
}

impl<F: Scalar> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("Z"))
    }
}

/// Stirling numbers of the second kind `S(n, m)` for `0 <= m <= n <= max`.
///
/// `Z^n = sum_m S(n,m) (Z)_m`, where `(Z)_m` is the falling factorial.
pub fn stirling_second(max: usize) -> Vec<Vec<BigInt>> {
    let mut table = vec![vec![BigInt::from(0u32); max + 1]; max + 1];
    table[0][0] = BigInt::from(1u32);
    for n in 1..=max {
        for m in 1..=n {
            table[n][m] = &table[n - 1][m - 1] + BigInt::from(m) * &table[n - 1][m];
        }
    }
    table
}

/// Signed Stirling numbers of the first kind `s(n, m)`:
/// `(Z)_n = sum_m s(n,m) Z^m`.
pub fn stirling_first(max: usize) -> Vec<Vec<BigInt>> {
    let mut table = vec![vec![BigInt::from(0u32); max + 1]; max + 1];
    table[0][0] = BigInt::from(1u32);
    for n in 1..=max {
        for m in 1..=n {
            table[n][m] = &table[n - 1][m - 1] - BigInt::from(n - 1) * &table[n - 1][m];
        }
    }
    table
}
