//! The derivation `ad_Q = [Q, -]` on `Z(P)` for pairs with `[Q, P] = 1`,
//! and the checks built on it.
//!
//! When `[Q, P] = 1`, the Jacobi identity gives
//! `[P, [Q, R]] = [[P, Q], R] + [Q, [P, R]] = [Q, [P, R]]`, so `ad_Q` maps
//! `Z(P)` into itself. On the computed basis this lets us read off the
//! degree data `g_r = deg S_r`, `w_r = deg ad_Q(S_r)` and the kernel of
//! `ad_Q`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rand::Rng;
use serde::Serialize;

use crate::centralizer::{centralizer_basis, coordinates, ray_degree, CentralizerBasis};
use crate::error::{Result, WeylError};
use crate::graded::is_homogeneous;
use crate::leading::{sector, v};
use crate::linalg::{kernel, solve, SparseVec};
use crate::poly::Poly;
use crate::scalar::Scalar;
use crate::weyl::{Monomial, WeylElement};

/// `(P, Q)` with `[Q, P] = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct DixmierPair<F: Scalar> {
    pub p: WeylElement<F>,
    pub q: WeylElement<F>,
    pub witness: WeylElement<F>,
}

impl<F: Scalar> DixmierPair<F> {
    pub fn new(p: WeylElement<F>, q: WeylElement<F>) -> Result<Self> {
        let witness = q.commutator(&p);
        if !witness.is_one() {
            return Err(WeylError::Contract(format!("[Q, P] = {witness}, not 1")));
        }
        Ok(DixmierPair { p, q, witness })
    }
}

pub fn is_dixmier_pair<F: Scalar>(p: &WeylElement<F>, q: &WeylElement<F>) -> bool {
    q.commutator(p).is_one()
}

/// `ad_Q(R) = [Q, R]`.
pub fn ad<F: Scalar>(q: &WeylElement<F>, r: &WeylElement<F>) -> WeylElement<F> {
    q.commutator(r)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DerivationReport {
    /// Indices `r` with `ad_Q(S_r) != 0`.
    pub j_set: BTreeSet<usize>,
    /// `r -> (g_r, w_r)`, degrees of `S_r` and `ad_Q(S_r)`.
    pub drops: BTreeMap<usize, (u32, u32)>,
    /// `r -> (total degree of S_r, total degree of ad_Q(S_r))`.
    pub total_degrees: BTreeMap<usize, (u32, u32)>,
    /// The common value of `w_r - g_r` over `j_set`.
    pub constant_drop: Option<i64>,
    /// Dimension of the kernel of `ad_Q` on the span of the `R_l` whose
    /// image stays within the bound.
    pub kernel_dim: usize,
    pub kernel_domain_dim: usize,
    /// The basis has no non-constant element, or misses some pick `S_r`.
    pub degenerate: bool,
}

/// Degree data of `ad_q` on `Z(P)`, for any `q` whose adjoint preserves
/// `Z(P)` (for instance the partner of a Dixmier pair, or `XY` when `P` is
/// homogeneous).
pub fn derivation_report_for<F: Scalar>(
    q: &WeylElement<F>,
    basis: &CentralizerBasis<F>,
) -> Result<DerivationReport> {
    let mut j_set = BTreeSet::new();
    let mut drops = BTreeMap::new();
    let mut total_degrees = BTreeMap::new();
    for (r, pick) in basis.s.iter().enumerate() {
        let Some(pick) = pick else { continue };
        let image = ad(q, &pick.element);
        if image.is_zero() {
            continue;
        }
        let td = image.total_degree()?;
        if td > basis.bound {
            return Err(WeylError::BoundEscape {
                bound: basis.bound,
                degree: td,
            });
        }
        coordinates(&image, basis).map_err(|_| {
            WeylError::Internal(format!("ad_Q(S_{r}) is not in the centralizer span"))
        })?;
        let w_r = ray_degree(&image, basis)?;
        j_set.insert(r);
        drops.insert(r, (pick.degree, w_r));
        total_degrees.insert(r, (pick.element.total_degree()?, td));
    }

    let mut diffs = drops.values().map(|&(g, w)| w as i64 - g as i64);
    let constant_drop = diffs.next();
    if let Some(first) = constant_drop {
        if diffs.any(|d| d != first) {
            return Err(WeylError::Internal(format!(
                "degree drop is not constant across S_r: {drops:?}"
            )));
        }
    }

    let index: HashMap<u32, usize> = basis
        .elements
        .keys()
        .enumerate()
        .map(|(k, l)| (*l, k))
        .collect();
    let mut columns = Vec::new();
    for e in basis.elements.values() {
        let image = ad(q, e);
        if !image.is_zero() && image.total_degree()? > basis.bound {
            continue;
        }
        let coords = coordinates(&image, basis).map_err(|_| {
            WeylError::Internal("ad_Q image of a basis element left the centralizer span".into())
        })?;
        columns.push(SparseVec::from_entries(
            coords.into_iter().map(|(l, c)| (index[&l], c)).collect(),
        ));
    }
    let kernel_dim = kernel(&columns).len();

    Ok(DerivationReport {
        j_set,
        drops,
        total_degrees,
        constant_drop,
        kernel_dim,
        kernel_domain_dim: columns.len(),
        degenerate: basis.dim() <= 1 || basis.truncated,
    })
}

pub fn derivation_report<F: Scalar>(
    pair: &DixmierPair<F>,
    basis: &CentralizerBasis<F>,
) -> Result<DerivationReport> {
    if basis.p != pair.p {
        return Err(WeylError::Contract(
            "basis was computed for a different P".into(),
        ));
    }
    derivation_report_for(&pair.q, basis)
}

#[derive(Debug, Clone)]
pub struct MainTheoremReport<F: Scalar> {
    /// `Z(P)` truncated at the bound equals `span{P^m : m deg(P) <= bound}`.
    pub holds: bool,
    pub centralizer_dim: usize,
    pub powers_dim: usize,
    pub basis: CentralizerBasis<F>,
}

/// Compares the computed `Z(P)` with `k[P]` up to total degree `bound`.
pub fn main_theorem_check<F: Scalar>(
    pair: &DixmierPair<F>,
    bound: u32,
) -> Result<MainTheoremReport<F>> {
    let p = &pair.p;
    if p.is_zero() || sector(p)?.is_none() {
        return Err(WeylError::ImpossiblePair);
    }
    if !pair.witness.is_one() {
        return Err(WeylError::Contract("[Q, P] != 1".into()));
    }
    let basis = centralizer_basis(p, bound)?;
    let td = p.total_degree()?;
    let powers: Vec<_> = (0..=bound / td).map(|m| p.pow(m)).collect();
    let all_in_span = powers.iter().all(|pm| coordinates(pm, &basis).is_ok());
    Ok(MainTheoremReport {
        holds: all_in_span && basis.dim() == powers.len(),
        centralizer_dim: basis.dim(),
        powers_dim: powers.len(),
        basis,
    })
}

/// `true` iff `[Q, P] = 1` has no solution with total degree `<= bound`.
/// `P` must lie in `k[XY]`.
pub fn no_partner_check<F: Scalar>(p: &WeylElement<F>, bound: u32) -> Result<bool> {
    if !p.is_zero() && !(is_homogeneous(p)? && v(p)? == 0) {
        return Err(WeylError::Contract("P must lie in k[XY]".into()));
    }
    let unknowns: Vec<Monomial> = (0..=bound)
        .flat_map(|t| (0..=t).map(move |i| Monomial::new(i, t - i)))
        .collect();
    let images: Vec<_> = unknowns
        .iter()
        .map(|m| WeylElement::monomial(m.i, m.j).commutator(p))
        .collect();
    let mut rows: HashMap<Monomial, usize> = HashMap::new();
    rows.insert(Monomial::ONE, 0);
    let mut columns = Vec::with_capacity(images.len());
    for img in &images {
        let entries = img
            .terms()
            .map(|(m, c)| {
                let next = rows.len();
                (*rows.entry(m).or_insert(next), c.clone())
            })
            .collect();
        columns.push(SparseVec::from_entries(entries));
    }
    Ok(solve(&columns, &SparseVec::unit(0)).is_none())
}

/// Elementary automorphisms of the Weyl algebra.
#[derive(Debug, Clone, PartialEq)]
pub enum Automorphism<F: Scalar> {
    /// `X -> X + p(Y)`, `Y -> Y`.
    AddPolyOfYToX(Poly<F>),
    /// `X -> X`, `Y -> Y + p(X)`.
    AddPolyOfXToY(Poly<F>),
    /// `X -> Y`, `Y -> -X`.
    Fourier,
}

impl<F: Scalar> Automorphism<F> {
    /// Images of `X` and `Y`.
    pub fn images(&self) -> (WeylElement<F>, WeylElement<F>) {
        let (x, y) = (WeylElement::x(), WeylElement::y());
        match self {
            Automorphism::AddPolyOfYToX(p) => (x.add(&p.eval_element(&y)), y),
            Automorphism::AddPolyOfXToY(p) => {
                let py = p.eval_element(&x);
                (x, y.add(&py))
            }
            Automorphism::Fourier => (y, -x),
        }
    }

    pub fn apply(&self, a: &WeylElement<F>) -> Result<WeylElement<F>> {
        let (x, y) = self.images();
        if !y.commutator(&x).is_one() {
            return Err(WeylError::Internal(
                "automorphism does not preserve [Y, X] = 1".into(),
            ));
        }
        Ok(a.substitute(&x, &y))
    }

    /// Script syntax: `addY:<poly in Y>`, `addX:<poly in X>`, `fourier`.
    pub fn render(&self) -> String {
        match self {
            Automorphism::AddPolyOfYToX(p) => format!("addY:{}", p.render("Y")),
            Automorphism::AddPolyOfXToY(p) => format!("addX:{}", p.render("X")),
            Automorphism::Fourier => "fourier".to_string(),
        }
    }
}

pub fn render_script<F: Scalar>(script: &[Automorphism<F>]) -> String {
    script
        .iter()
        .map(Automorphism::render)
        .collect::<Vec<_>>()
        .join(";")
}

/// `(φ(X), φ(Y))` for `φ` the composite of `script`, applied step by step
/// to the current pair.
pub fn gen_dixmier_pair<F: Scalar>(script: &[Automorphism<F>]) -> Result<DixmierPair<F>> {
    let (mut p, mut q) = (WeylElement::x(), WeylElement::y());
    for step in script {
        p = step.apply(&p)?;
        q = step.apply(&q)?;
    }
    DixmierPair::new(p, q).map_err(|e| WeylError::Internal(e.to_string()))
}

/// Bounds for randomly generated automorphism scripts.
#[derive(Debug, Clone, Copy)]
pub struct FixtureLimits {
    pub max_len: usize,
    pub max_degree: usize,
    pub max_coeff: i64,
    pub max_total_degree: u32,
}

impl Default for FixtureLimits {
    fn default() -> Self {
        FixtureLimits {
            max_len: 3,
            max_degree: 3,
            max_coeff: 3,
            max_total_degree: 12,
        }
    }
}

pub fn random_script<F: Scalar, R: Rng>(
    rng: &mut R,
    limits: &FixtureLimits,
) -> Vec<Automorphism<F>> {
    let len = rng.gen_range(1..=limits.max_len);
    let poly = |rng: &mut R| {
        let deg = rng.gen_range(1..=limits.max_degree);
        let mut coeffs: Vec<F> = (0..deg)
            .map(|_| F::from_i64(rng.gen_range(-limits.max_coeff..=limits.max_coeff)))
            .collect();
        let mut lead = 0;
        while lead == 0 {
            lead = rng.gen_range(-limits.max_coeff..=limits.max_coeff);
        }
        coeffs.push(F::from_i64(lead));
        Poly::from_coeffs(coeffs)
    };
    (0..len)
        .map(|_| match rng.gen_range(0..3) {
            0 => Automorphism::AddPolyOfYToX(poly(rng)),
            1 => Automorphism::AddPolyOfXToY(poly(rng)),
            _ => Automorphism::Fourier,
        })
        .collect()
}

/// Draws scripts until the resulting `P` has total degree within the limit.
pub fn random_dixmier_pair<F: Scalar, R: Rng>(
    rng: &mut R,
    limits: &FixtureLimits,
) -> Result<(Vec<Automorphism<F>>, DixmierPair<F>)> {
    loop {
        let script = random_script(rng, limits);
        let pair = gen_dixmier_pair(&script)?;
        if pair.p.total_degree()? <= limits.max_total_degree {
            return Ok((script, pair));
        }
    }
}
