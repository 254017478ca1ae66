use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;

use crate::error::{Result, WeylError};

/// Residue-class structure of an additive submonoid `L` of the naturals,
/// known up to `max(L)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidInfo {
    /// `min(L \ {0})`.
    pub r0: u64,
    /// `gcd(L)`.
    pub d: u64,
    /// Nonempty classes `L_r = {l ∈ L : l ≡ r mod r0}`, `0 <= r < r0`.
    pub classes: BTreeMap<u64, Vec<u64>>,
    /// Whether `L_r ≠ ∅ ⇔ d | r` held for every `r < r0` on the enumerated range.
    pub classes_match_gcd: bool,
}

impl MonoidInfo {
    pub fn first_hit(&self, r: u64) -> Option<u64> {
        self.classes.get(&r).and_then(|c| c.first().copied())
    }
}

/// Elements `<= bound` of the monoid generated by `generators`.
pub fn generated_monoid(generators: &[u64], bound: u64) -> BTreeSet<u64> {
    let mut hit = vec![false; bound as usize + 1];
    hit[0] = true;
    for n in 1..=bound as usize {
        hit[n] = generators
            .iter()
            .any(|&g| g > 0 && g as usize <= n && hit[n - g as usize]);
    }
    hit.iter()
        .enumerate()
        .filter(|(_, h)| **h)
        .map(|(n, _)| n as u64)
        .collect()
}

pub fn monoid_classes(l: &BTreeSet<u64>) -> Result<MonoidInfo> {
    if !l.contains(&0) {
        return Err(WeylError::DegenerateMonoid("0 is not in L".into()));
    }
    let Some(&r0) = l.iter().find(|&&x| x > 0) else {
        return Err(WeylError::DegenerateMonoid(
            "L = {0} has no generator".into(),
        ));
    };
    let top = *l.last().unwrap();
    for &a in l {
        for &b in l.range(a..) {
            if a + b <= top && !l.contains(&(a + b)) {
                return Err(WeylError::Contract(format!(
                    "L is not closed under addition: {a} + {b} missing"
                )));
            }
        }
    }
    let d = l.iter().fold(0u64, |acc, &x| acc.gcd(&x));
    let mut classes: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for &x in l {
        classes.entry(x % r0).or_default().push(x);
    }
    let classes_match_gcd = (0..r0).all(|r| classes.contains_key(&r) == (r % d == 0));
    Ok(MonoidInfo {
        r0,
        d,
        classes,
        classes_match_gcd,
    })
}
