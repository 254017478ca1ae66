use crate::error::{Result, WeylError};
use crate::leading::ell_c_side;
use crate::poly::Poly;
use crate::scalar::Scalar;
use crate::weyl::WeylElement;

use super::basis::{coordinates, ray_degree, CentralizerBasis};

/// Writes `q = T_0(S_0) + sum_{r=1}^{n0-1} T_r(S_0) S_r`.
///
/// Repeatedly cancels the leading form of the remainder against
/// `S_0^l S_r` with `deg S_r + l n0 = deg(remainder)`. Both sides lie in the
/// same one-dimensional homogeneous piece of `Z(ℓ(P))`, so the degree
/// drops at every step.
pub fn decompose<F: Scalar>(
    q: &WeylElement<F>,
    basis: &CentralizerBasis<F>,
) -> Result<Vec<Poly<F>>> {
    coordinates(q, basis)?;
    let side = basis.side();
    let n0 = basis.n0;
    let picks = basis
        .s
        .iter()
        .map(|s| s.as_ref())
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| {
            WeylError::Bound(format!(
                "degree bound {} does not reach every residue class modulo n0 = {n0}",
                basis.bound
            ))
        })?;
    let s0 = &picks[0].element;
    let mut s0_powers = vec![WeylElement::one()];

    let mut out = vec![Poly::zero(); n0 as usize];
    let mut rest = q.clone();
    let mut last_degree = u32::MAX;
    while !rest.is_zero() {
        let m = ray_degree(&rest, basis)?;
        if m >= last_degree {
            return Err(WeylError::Internal(
                "leading-term elimination did not lower the degree".into(),
            ));
        }
        last_degree = m;
        if m == 0 {
            if !rest.is_scalar() {
                return Err(WeylError::Internal(
                    "degree-zero centralizer element is not a constant".into(),
                ));
            }
            out[0].add_monomial(0, rest.constant_term());
            break;
        }
        let class = (m % n0) as usize;
        let g = if class == 0 { 0 } else { picks[class].degree };
        if g > m {
            return Err(WeylError::Bound(format!(
                "pick S_{class} has degree {g} above the remainder degree {m}"
            )));
        }
        let l = ((m - g) / n0) as usize;
        while s0_powers.len() <= l {
            let next = s0_powers.last().unwrap().mul(s0);
            s0_powers.push(next);
        }
        let target = if class == 0 {
            s0_powers[l].clone()
        } else {
            s0_powers[l].mul(&picks[class].element)
        };
        let lambda = ell_c_side(&rest, side)? / ell_c_side(&target, side)?;
        rest.add_scaled(&-lambda.clone(), &target);
        out[class].add_monomial(l, lambda);
    }
    Ok(out)
}

/// Inverse of [`decompose`]: `T_0(S_0) + sum_r T_r(S_0) S_r`.
pub fn recompose<F: Scalar>(
    parts: &[Poly<F>],
    basis: &CentralizerBasis<F>,
) -> Result<WeylElement<F>> {
    let mut out = WeylElement::zero();
    for (class, t) in parts.iter().enumerate() {
        if t.is_zero() {
            continue;
        }
        let pick = |r: usize| {
            basis
                .s
                .get(r)
                .and_then(|s| s.as_ref())
                .ok_or_else(|| WeylError::Bound(format!("no pick S_{r} within the bound")))
        };
        let s0 = &pick(0)?.element;
        let term = t.eval_element(s0);
        out = if class == 0 {
            out.add(&term)
        } else {
            out.add(&term.mul(&pick(class)?.element))
        };
    }
    Ok(out)
}
