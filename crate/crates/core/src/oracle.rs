//! Weyl algebra elements acting on `k[x]` as differential operators:
//! `X` is multiplication by `x` and `Y` is `d/dx`.
//!
//! This representation is faithful and shares no code with the normal-form
//! product, so it serves as an independent check of multiplication.
//!
//! Cutoff: `X^i Y^j` sends `x^n` to `n!/(n-j)! x^{i+n-j}` and kills it when
//! `j > n`. So on `x^n` only terms with `j <= n` contribute and the terms with
//! `j = n` contribute `n! a_{i,n} x^i`. Knowing the actions on
//! `x^0, ..., x^N` therefore recovers every `a_{i,j}` with `j <= N` by
//! induction on `n`, which is what [`coefficients_from_actions`] does.

use num_bigint::BigInt;

use crate::poly::Poly;
use crate::scalar::Scalar;
use crate::weyl::{Monomial, WeylElement};

/// A polynomial in `x`, coefficients in increasing degree.
pub type PolyVector<F> = Poly<F>;

/// `n! / (n - j)!`, zero when `j > n`.
fn falling(n: usize, j: usize) -> BigInt {
    if j > n {
        return BigInt::from(0u32);
    }
    ((n - j + 1)..=n).fold(BigInt::from(1u32), |acc, t| acc * BigInt::from(t))
}

/// Applies `sum a_ij x^i (d/dx)^j` to `p`.
pub fn act<F: Scalar>(a: &WeylElement<F>, p: &PolyVector<F>) -> PolyVector<F> {
    let mut out = Poly::zero();
    for (m, c) in a.terms() {
        for (n, pn) in p.coeffs().iter().enumerate() {
            let j = m.j as usize;
            if pn.is_zero() || j > n {
                continue;
            }
            let k = F::from_integer(&falling(n, j));
            out.add_monomial(m.i as usize + n - j, c.clone() * pn.clone() * k);
        }
    }
    out
}

/// Equality of `a` and `b` decided through their actions on `x^0..x^N`,
/// `N = max(maxY(a), maxY(b))`.
pub fn oracle_equal<F: Scalar>(a: &WeylElement<F>, b: &WeylElement<F>) -> bool {
    let top = a.max_y_exponent().max(b.max_y_exponent()) as usize;
    (0..=top).all(|n| {
        let xn = Poly::power_of_var(n);
        act(a, &xn) == act(b, &xn)
    })
}

/// Checks `act(a*b, x^n) = act(a, act(b, x^n))` for `n <= maxY(a) + maxY(b)`.
pub fn oracle_mul_check<F: Scalar>(a: &WeylElement<F>, b: &WeylElement<F>) -> bool {
    let product = a.mul(b);
    let top = (a.max_y_exponent() + b.max_y_exponent()) as usize;
    (0..=top).all(|n| {
        let xn = Poly::power_of_var(n);
        act(&product, &xn) == act(a, &act(b, &xn))
    })
}

/// Recovers the element whose actions on `x^0, x^1, ...` are `actions`,
/// assuming its largest `Y` exponent is below `actions.len()`.
pub fn coefficients_from_actions<F: Scalar>(actions: &[PolyVector<F>]) -> WeylElement<F> {
    let mut found = WeylElement::zero();
    for (n, image) in actions.iter().enumerate() {
        let known = act(&found, &Poly::power_of_var(n));
        let residual = image.sub(&known);
        let nfact = F::from_integer(&falling(n, n));
        for (i, c) in residual.coeffs().iter().enumerate() {
            if !c.is_zero() {
                found.add_term(Monomial::new(i as u32, n as u32), c.clone() / nfact.clone());
            }
        }
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Rational, Weyl};
    use proptest::prelude::*;

    type PV = PolyVector<Rational>;

    fn w_(terms: &[(i64, i64, i64)]) -> Weyl {
        Weyl::from_terms(
            terms
                .iter()
                .map(|&(i, j, c)| (i, j, Rational::from_integer(c.into()))),
        )
        .unwrap()
    }

    #[test]
    fn act_examples() {
        assert_eq!(
            act(&Weyl::y(), &PV::power_of_var(3)),
            PV::from_i64s(&[0, 0, 3])
        );
        let xy = w_(&[(1, 1, 1)]);
        for n in 0..6 {
            let mut expected = PV::zero();
            expected.add_monomial(n, Rational::from_integer((n as i64).into()));
            assert_eq!(act(&xy, &PV::power_of_var(n)), expected);
        }
        // Y^2 X^2 on x^2: normal form and direct composition agree on 12 x^2.
        let y2x2 = Weyl::monomial(0, 2).mul(&Weyl::monomial(2, 0));
        let direct = act(
            &Weyl::monomial(0, 2),
            &act(&Weyl::monomial(2, 0), &PV::power_of_var(2)),
        );
        let expected = PV::from_i64s(&[0, 0, 12]);
        assert_eq!(act(&y2x2, &PV::power_of_var(2)), expected);
        assert_eq!(direct, expected);
    }

    #[test]
    fn equality_examples() {
        let yx = Weyl::y().mul(&Weyl::x());
        assert!(oracle_equal(&yx, &w_(&[(1, 1, 1), (0, 0, 1)])));
        assert!(!oracle_equal(&Weyl::x(), &Weyl::y()));
    }

    #[test]
    fn mul_check_examples() {
        assert!(oracle_mul_check(
            &Weyl::monomial(0, 2),
            &Weyl::monomial(2, 0)
        ));
        assert!(oracle_mul_check(
            &Weyl::one(),
            &w_(&[(3, 1, 2), (0, 4, -1)])
        ));
        assert!(oracle_mul_check(
            &Weyl::monomial(3, 2),
            &Weyl::monomial(0, 4).mul(&Weyl::x())
        ));
    }

    #[test]
    fn reconstructs_coefficients() {
        let a = w_(&[(3, 2, 5), (0, 2, -1), (1, 0, 2), (0, 0, 7), (2, 1, 1)]);
        let actions: Vec<_> = (0..=2).map(|n| act(&a, &PV::power_of_var(n))).collect();
        assert_eq!(coefficients_from_actions(&actions), a);
    }

    fn small_element() -> impl Strategy<Value = Weyl> {
        prop::collection::vec((0i64..5, 0i64..5, -4i64..5), 0..5).prop_map(|t| w_(&t))
    }

    proptest! {
        #[test]
        fn faithful_at_cutoff(a in small_element()) {
            prop_assume!(!a.is_zero());
            let top = a.max_y_exponent() as usize;
            prop_assert!((0..=top).any(|n| !act(&a, &PV::power_of_var(n)).is_zero()));
        }

        #[test]
        fn action_is_a_representation(a in small_element(), b in small_element(), n in 0usize..7) {
            let xn = PV::power_of_var(n);
            prop_assert_eq!(act(&a.add(&b), &xn), act(&a, &xn).add(&act(&b, &xn)));
            prop_assert_eq!(act(&a.mul(&b), &xn), act(&a, &act(&b, &xn)));
        }
    }
}
