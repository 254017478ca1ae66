//! Exact sparse linear algebra over a [`Scalar`] field.
//!
//! Matrices are given as lists of sparse columns. Reduction works on columns:
//! each column is reduced against earlier pivots until its leading (largest)
//! row index is fresh or the column vanishes. A vanishing column yields a
//! kernel vector, recorded as the combination of original columns that
//! produced it. Processing order is the column order, so results are
//! deterministic.
//!
//! When the rows are ordered so that each column has a predictable leading
//! row (as with `ad_P` under the diagonal order), most columns become pivots
//! without a single elimination step.

use std::collections::HashMap;

use crate::scalar::Scalar;

/// Sparse vector with entries sorted by index, no explicit zeros.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseVec<F> {
    entries: Vec<(usize, F)>,
}

impl<F: Scalar> SparseVec<F> {
    pub fn zero() -> Self {
        SparseVec {
            entries: Vec::new(),
        }
    }

    pub fn unit(index: usize) -> Self {
        SparseVec {
            entries: vec![(index, F::one())],
        }
    }

    /// Builds from unsorted entries, summing duplicates.
    pub fn from_entries(mut entries: Vec<(usize, F)>) -> Self {
        entries.sort_by_key(|(k, _)| *k);
        let mut out: Vec<(usize, F)> = Vec::with_capacity(entries.len());
        for (k, c) in entries {
            match out.last_mut() {
                Some((last, acc)) if *last == k => *acc += c,
                _ => out.push((k, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        SparseVec { entries: out }
    }

    pub fn entries(&self) -> &[(usize, F)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, index: usize) -> F {
        match self.entries.binary_search_by_key(&index, |(k, _)| *k) {
            Ok(pos) => self.entries[pos].1.clone(),
            Err(_) => F::zero(),
        }
    }

    /// Entry with the largest index.
    pub fn lead(&self) -> Option<(usize, &F)> {
        self.entries.last().map(|(k, c)| (*k, c))
    }

    pub fn scale(&mut self, c: &F) {
        for (_, a) in &mut self.entries {
            *a *= c.clone();
        }
    }

    /// `self += c * other`.
    pub fn axpy(&mut self, c: &F, other: &Self) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut a = std::mem::take(&mut self.entries).into_iter().peekable();
        let mut b = other.entries.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((ka, _)), Some((kb, _))) if ka < kb => out.push(a.next().unwrap()),
                (Some((ka, _)), Some((kb, _))) if ka > kb => {
                    let (k, v) = b.next().unwrap();
                    out.push((*k, v.clone() * c.clone()));
                }
                (Some(_), Some(_)) => {
                    let (k, va) = a.next().unwrap();
                    let (_, vb) = b.next().unwrap();
                    let sum = va + vb.clone() * c.clone();
                    if !sum.is_zero() {
                        out.push((k, sum));
                    }
                }
                (Some(_), None) => out.push(a.next().unwrap()),
                (None, Some(_)) => {
                    let (k, v) = b.next().unwrap();
                    out.push((*k, v.clone() * c.clone()));
                }
                (None, None) => break,
            }
        }
        self.entries = out;
    }
}

struct Pivot<F> {
    reduced: SparseVec<F>,
    combination: SparseVec<F>,
}

/// Incremental column reduction.
pub struct ColumnReducer<F> {
    pivots: HashMap<usize, Pivot<F>>,
}

impl<F: Scalar> Default for ColumnReducer<F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<F: Scalar> ColumnReducer<F> {
    pub fn new() -> Self {
        ColumnReducer {
            pivots: HashMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `vec` (whose provenance is `combination`) against the pivots.
    fn reduce(&self, vec: &mut SparseVec<F>, combination: &mut SparseVec<F>) {
        while let Some((lead, val)) = vec.lead() {
            let Some(p) = self.pivots.get(&lead) else {
                break;
            };
            let (_, pval) = p.reduced.lead().unwrap();
            let factor = -(val.clone() / pval.clone());
            vec.axpy(&factor, &p.reduced);
            combination.axpy(&factor, &p.combination);
        }
    }

    /// Adds column number `index`. Returns the kernel vector it closes, if any.
    pub fn push(&mut self, index: usize, column: SparseVec<F>) -> Option<SparseVec<F>> {
        let mut vec = column;
        let mut combination = SparseVec::unit(index);
        self.reduce(&mut vec, &mut combination);
        match vec.lead() {
            None => Some(combination),
            Some((lead, _)) => {
                self.pivots.insert(
                    lead,
                    Pivot {
                        reduced: vec,
                        combination,
                    },
                );
                None
            }
        }
    }

    /// Finds `c` with `sum_k c_k column_k = rhs`, if one exists.
    pub fn solve(&self, rhs: &SparseVec<F>) -> Option<SparseVec<F>> {
        let mut vec = rhs.clone();
        let mut combination = SparseVec::zero();
        self.reduce(&mut vec, &mut combination);
        if vec.is_zero() {
            combination.scale(&-F::one());
            Some(combination)
        } else {
            None
        }
    }
}

/// Basis of `{c : sum_k c_k columns[k] = 0}`.
pub fn kernel<F: Scalar>(columns: &[SparseVec<F>]) -> Vec<SparseVec<F>> {
    let mut reducer = ColumnReducer::new();
    columns
        .iter()
        .enumerate()
        .filter_map(|(k, col)| reducer.push(k, col.clone()))
        .collect()
}

pub fn rank<F: Scalar>(columns: &[SparseVec<F>]) -> usize {
    let mut reducer = ColumnReducer::new();
    for (k, col) in columns.iter().enumerate() {
        reducer.push(k, col.clone());
    }
    reducer.rank()
}

/// Solves `sum_k c_k columns[k] = rhs`.
pub fn solve<F: Scalar>(columns: &[SparseVec<F>], rhs: &SparseVec<F>) -> Option<SparseVec<F>> {
    let mut reducer = ColumnReducer::new();
    for (k, col) in columns.iter().enumerate() {
        reducer.push(k, col.clone());
    }
    reducer.solve(rhs)
}
