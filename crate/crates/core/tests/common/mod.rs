#![allow(dead_code)]

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use weyl_core::{Monomial, Rational, Weyl};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn w(terms: &[(i64, i64, i64)]) -> Weyl {
    Weyl::from_terms(terms.iter().map(|&(i, j, c)| (i, j, q(c, 1)))).unwrap()
}

/// Random coefficient with `|num| <= 9`, `1 <= den <= 9`.
pub fn coeff<R: Rng>(rng: &mut R) -> Rational {
    q(rng.gen_range(-9..=9), rng.gen_range(1..=9))
}

/// Random element with exponents `<= max_exp` and up to `max_terms` terms.
pub fn element_with<R: Rng>(rng: &mut R, max_exp: i64, max_terms: usize) -> Weyl {
    let n = rng.gen_range(0..=max_terms);
    let terms: Vec<_> = (0..n)
        .map(|_| {
            (
                rng.gen_range(0..=max_exp),
                rng.gen_range(0..=max_exp),
                coeff(rng),
            )
        })
        .collect();
    Weyl::from_terms(terms).unwrap()
}

pub fn element<R: Rng>(rng: &mut R) -> Weyl {
    element_with(rng, 6, 6)
}

pub fn nonzero_element<R: Rng>(rng: &mut R) -> Weyl {
    loop {
        let e = element(rng);
        if !e.is_zero() {
            return e;
        }
    }
}

pub fn arb_coeff() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=9).prop_map(|(n, d)| q(n, d))
}

pub fn arb_element_with(max_exp: i64, max_terms: usize) -> impl Strategy<Value = Weyl> {
    prop::collection::vec((0..=max_exp, 0..=max_exp, arb_coeff()), 0..=max_terms)
        .prop_map(|t| Weyl::from_terms(t).unwrap())
}

pub fn arb_element() -> impl Strategy<Value = Weyl> {
    arb_element_with(6, 6)
}

pub fn arb_nonzero_element() -> impl Strategy<Value = Weyl> {
    arb_element().prop_filter("nonzero", |e| !e.is_zero())
}

/// Null space of a dense rational matrix by Gauss-Jordan elimination.
/// `rows[r][c]`; returns a basis of `{x : A x = 0}`.
#[allow(clippy::needless_range_loop)]
pub fn dense_null_space(mut rows: Vec<Vec<Rational>>, ncols: usize) -> Vec<Vec<Rational>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rational::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for k in 0..rows.len() {
            if k != r && !rows[k][c].is_zero() {
                let f = rows[k][c].clone();
                for cc in 0..ncols {
                    let t = rows[r][cc].clone() * f.clone();
                    rows[k][cc] = rows[k][cc].clone() - t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (k, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[k][f].clone();
            }
            v
        })
        .collect()
}

/// Solutions of `[P, Q] = 0` among `Q = sum c_m m` for the given monomials,
/// by dense elimination on monomial coefficients.
pub fn brute_force_commutant(p: &Weyl, unknowns: &[Monomial]) -> Vec<Weyl> {
    let images: Vec<Weyl> = unknowns
        .iter()
        .map(|m| p.commutator(&Weyl::monomial(m.i, m.j)))
        .collect();
    let mut row_of: BTreeMap<Monomial, usize> = BTreeMap::new();
    for img in &images {
        for (m, _) in img.terms() {
            let next = row_of.len();
            row_of.entry(m).or_insert(next);
        }
    }
    let mut rows = vec![vec![Rational::zero(); unknowns.len()]; row_of.len()];
    for (c, img) in images.iter().enumerate() {
        for (m, v) in img.terms() {
            rows[row_of[&m]][c] = v.clone();
        }
    }
    dense_null_space(rows, unknowns.len())
        .into_iter()
        .map(|v| {
            let mut e = Weyl::zero();
            for (m, c) in unknowns.iter().zip(v) {
                e = e.add(&Weyl::term(c, *m));
            }
            e
        })
        .collect()
}

/// Monomials of `W_j` of the form `X^j (XY)^a` (or `(XY)^a Y^-j`) with `a <= n`.
pub fn graded_monomials(j: i64, n: u32) -> Vec<Monomial> {
    (0..=n)
        .map(|a| {
            if j >= 0 {
                Monomial::new(a + j as u32, a)
            } else {
                Monomial::new(a, a + (-j) as u32)
            }
        })
        .collect()
}

/// `true` iff `a` and `b` are nonzero scalar multiples of each other.
pub fn proportional(a: &Weyl, b: &Weyl) -> bool {
    let Some((m, c)) = a.terms().next() else {
        return b.is_zero();
    };
    let d = b.coeff(m);
    !d.is_zero() && a.scalar_mul(&(d / c.clone())) == *b
}
