use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_integer::Integer;

use crate::error::{Result, WeylError};
use crate::graded::is_homogeneous;
use crate::leading::{ell_side, primitive_direction_side, sector, w_side, Side, Weight};
use crate::linalg::{ColumnReducer, SparseVec};
use crate::scalar::Scalar;
use crate::weyl::{Monomial, WeylElement};

/// Which part of `W` the input came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BasisSector {
    /// `v(P) > 0`.
    Plus,
    /// `v(P) <= 0 < vbar(P)`.
    Bar,
    /// `P ∈ k[XY] \ k`, where `Z(P) = k[XY]`.
    Diagonal,
}

impl BasisSector {
    pub fn side(self) -> Side {
        match self {
            BasisSector::Bar => Side::Bar,
            _ => Side::Plus,
        }
    }
}

/// A canonical pick `S_r`: minimal degree in its residue class modulo `n0`.
#[derive(Debug, Clone, PartialEq)]
pub struct SPick<F: Scalar> {
    pub l: u32,
    pub degree: u32,
    pub element: WeylElement<F>,
}

/// `Z(P)` restricted to total degree `<= bound`.
///
/// All structural claims (the set `L`, `d`, `n0`, the picks `S_r`) are
/// relative to the bound.
#[derive(Debug, Clone)]
pub struct CentralizerBasis<F: Scalar> {
    pub p: WeylElement<F>,
    pub bound: u32,
    pub sector: BasisSector,
    /// Primitive `(i, j)` with `w(P) = r (i, j)`.
    pub direction: Weight,
    pub r: u32,
    /// Basis elements `R_l`, monic, with leading monomial `X^{li} Y^{lj}`.
    pub elements: BTreeMap<u32, WeylElement<F>>,
    pub d: u32,
    pub n0: u32,
    /// `s[r]` is `S_r`, or `None` when no element of that class fits the bound.
    pub s: Vec<Option<SPick<F>>>,
    /// Set when `L = {0}` or some class has no pick within the bound.
    pub truncated: bool,
}

impl<F: Scalar> CentralizerBasis<F> {
    pub fn side(&self) -> Side {
        self.sector.side()
    }

    pub fn l_set(&self) -> BTreeSet<u32> {
        self.elements.keys().copied().collect()
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    /// Degree `l / d` of each `R_l`.
    pub fn degrees(&self) -> BTreeMap<u32, u32> {
        self.elements.keys().map(|&l| (l, l / self.d)).collect()
    }

    fn lead_monomial(&self, l: u32) -> Monomial {
        self.direction.scaled(l).monomial()
    }
}

/// Reduced echelon form of a spanning family with respect to `side.key`:
/// every vector is monic at its leading monomial, leading monomials are
/// distinct, and no vector contains another one's leading monomial.
/// Sorted by increasing leading monomial.
pub fn reduced_echelon<F: Scalar>(
    vectors: impl IntoIterator<Item = WeylElement<F>>,
    side: Side,
) -> Vec<WeylElement<F>> {
    let mut basis: Vec<(Monomial, WeylElement<F>)> = Vec::new();
    for mut v in vectors {
        for (lead, b) in &basis {
            let c = v.coeff(*lead);
            v.add_scaled(&-c, b);
        }
        if v.is_zero() {
            continue;
        }
        let lead = w_side(&v, side).unwrap().monomial();
        v = v.scalar_mul(&(F::one() / v.coeff(lead)));
        for (_, b) in basis.iter_mut() {
            let c = b.coeff(lead);
            b.add_scaled(&-c, &v);
        }
        basis.push((lead, v));
    }
    basis.sort_by_key(|(m, _)| side.key(*m));
    basis.into_iter().map(|(_, v)| v).collect()
}

/// Exact kernel of `Q -> [P, Q]` on the span of monomials of total degree
/// `<= bound`, in reduced echelon form for `side`.
fn bounded_kernel<F: Scalar>(p: &WeylElement<F>, bound: u32, side: Side) -> Vec<WeylElement<F>> {
    let mut unknowns: Vec<Monomial> = (0..=bound)
        .flat_map(|t| (0..=t).map(move |i| Monomial::new(i, t - i)))
        .collect();
    unknowns.sort_by_key(|m| side.key(*m));

    let images: Vec<WeylElement<F>> = unknowns
        .iter()
        .map(|m| p.commutator(&WeylElement::monomial(m.i, m.j)))
        .collect();

    // Rows in increasing key order, so a column's lead is its top monomial.
    let mut rows: Vec<Monomial> = images
        .iter()
        .flat_map(|img| img.terms().map(|(m, _)| m))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    rows.sort_by_key(|m| side.key(*m));
    let row_index: HashMap<Monomial, usize> =
        rows.iter().enumerate().map(|(k, m)| (*m, k)).collect();

    let mut reducer = ColumnReducer::new();
    let mut kernel = Vec::new();
    for (k, img) in images.into_iter().enumerate() {
        let column = SparseVec::from_entries(
            img.terms()
                .map(|(m, c)| (row_index[&m], c.clone()))
                .collect(),
        );
        if let Some(comb) = reducer.push(k, column) {
            kernel.push(WeylElement::from_monomials(
                comb.entries()
                    .iter()
                    .map(|(idx, c)| (unknowns[*idx], c.clone())),
            ));
        }
    }
    reduced_echelon(kernel, side)
}

fn assemble<F: Scalar>(
    p: &WeylElement<F>,
    bound: u32,
    sector: BasisSector,
    direction: Weight,
    r: u32,
    elements: BTreeMap<u32, WeylElement<F>>,
) -> Result<CentralizerBasis<F>> {
    for (l, e) in &elements {
        if !p.commutator(e).is_zero() {
            return Err(WeylError::Internal(format!(
                "basis element R_{l} does not commute with P"
            )));
        }
    }
    match elements.get(&0) {
        Some(one) if one.is_one() => {}
        _ => return Err(WeylError::Internal("R_0 is not 1".into())),
    }

    let positive: Vec<u32> = elements.keys().copied().filter(|&l| l > 0).collect();
    let d = positive.iter().fold(0u32, |acc, &l| acc.gcd(&l)).max(1);
    let n0 = positive.first().map_or(1, |&l| l / d);

    let mut s: Vec<Option<SPick<F>>> = vec![None; n0 as usize];
    for &l in &positive {
        let degree = l / d;
        let slot = &mut s[(degree % n0) as usize];
        if slot.is_none() {
            *slot = Some(SPick {
                l,
                degree,
                element: elements[&l].clone(),
            });
        }
    }
    let truncated = positive.is_empty() || s.iter().any(Option::is_none);
    Ok(CentralizerBasis {
        p: p.clone(),
        bound,
        sector,
        direction,
        r,
        elements,
        d,
        n0,
        s,
        truncated,
    })
}

/// Computes `Z(P)` up to total degree `bound` for `P ∈ W_+ ∪ Wbar_+`.
///
/// The basis vectors `R_l` are the reduced echelon form of the exact kernel
/// with respect to the diagonal order of the sector of `P`. The picks `S_r`
/// are taken from the `R_l`, which are already reduced against every other
/// basis element.
pub fn centralizer_basis<F: Scalar>(p: &WeylElement<F>, bound: u32) -> Result<CentralizerBasis<F>> {
    let side = match sector(p)? {
        Some(side) => side,
        None if p.is_scalar() => {
            return Err(WeylError::WrongSector(
                "P is a scalar; its centralizer is all of W".into(),
            ))
        }
        None => {
            return Err(WeylError::WrongSector(
                "P lies in k[XY]; its centralizer is k[XY]".into(),
            ))
        }
    };
    let td = p.total_degree()?;
    if bound < td {
        return Err(WeylError::Bound(format!(
            "bound {bound} is below total_degree(P) = {td}"
        )));
    }
    let (direction, r) = primitive_direction_side(p, side)?;

    let mut elements = BTreeMap::new();
    for e in bounded_kernel(p, bound, side) {
        let lead = w_side(&e, side)?;
        let l = lead.multiple_of(direction).ok_or_else(|| {
            WeylError::Internal(format!(
                "centralizer element with leading monomial {lead} is off the ray {direction}"
            ))
        })?;
        elements.insert(l, e);
    }
    let sector = match side {
        Side::Plus => BasisSector::Plus,
        Side::Bar => BasisSector::Bar,
    };
    assemble(p, bound, sector, direction, r, elements)
}

/// `Z(P) = k[XY]` up to total degree `bound`, for `P ∈ k[XY] \ k`.
///
/// The kernel is still computed and must coincide with the span of
/// `(XY)^l`, `2l <= bound`; the basis reported is `R_l = (XY)^l`.
pub fn xy_centralizer_basis<F: Scalar>(
    p: &WeylElement<F>,
    bound: u32,
) -> Result<CentralizerBasis<F>> {
    if p.is_zero() {
        return Err(WeylError::ZeroElement("xy_centralizer_basis"));
    }
    if p.is_scalar() || sector(p)?.is_some() {
        return Err(WeylError::WrongSector("P must lie in k[XY] \\ k".into()));
    }
    let td = p.total_degree()?;
    if bound < td {
        return Err(WeylError::Bound(format!(
            "bound {bound} is below total_degree(P) = {td}"
        )));
    }
    let kernel = bounded_kernel(p, bound, Side::Plus);
    let xy = WeylElement::monomial(1, 1);
    let mut elements = BTreeMap::new();
    for l in 0..=bound / 2 {
        elements.insert(l, xy.pow(l));
    }
    if kernel.len() != elements.len() {
        return Err(WeylError::Internal(format!(
            "kernel of ad_P has dimension {}, expected {}",
            kernel.len(),
            elements.len()
        )));
    }
    let r = w_side(p, Side::Plus)?.a;
    assemble(
        p,
        bound,
        BasisSector::Diagonal,
        Weight::new(1, 1),
        r,
        elements,
    )
}

/// Coordinates of `q` in the basis `R_l`; fails if `q` is outside the span.
pub fn coordinates<F: Scalar>(
    q: &WeylElement<F>,
    basis: &CentralizerBasis<F>,
) -> Result<BTreeMap<u32, F>> {
    // For the Diagonal sector the R_l are not reduced against each other, so
    // eliminate from the top down instead of reading coefficients directly.
    let mut rest = q.clone();
    let mut coords = BTreeMap::new();
    for (&l, e) in basis.elements.iter().rev() {
        let lead = basis.lead_monomial(l);
        let c = rest.coeff(lead) / e.coeff(lead);
        if !c.is_zero() {
            rest.add_scaled(&-c.clone(), e);
            coords.insert(l, c);
        }
    }
    if rest.is_zero() {
        Ok(coords)
    } else {
        Err(WeylError::Membership)
    }
}

/// `l / d` for `Q ∈ Z_l(P)`, reading `l` off the leading weight.
/// Does not check membership.
pub fn ray_degree<F: Scalar>(q: &WeylElement<F>, basis: &CentralizerBasis<F>) -> Result<u32> {
    let lead = w_side(q, basis.side())?;
    let l = lead
        .multiple_of(basis.direction)
        .ok_or(WeylError::Membership)?;
    if l % basis.d != 0 {
        return Err(WeylError::Membership);
    }
    Ok(l / basis.d)
}

/// Degree of an element of the computed span.
pub fn degree<F: Scalar>(q: &WeylElement<F>, basis: &CentralizerBasis<F>) -> Result<u32> {
    if q.is_zero() {
        return Err(WeylError::ZeroElement("degree"));
    }
    coordinates(q, basis)?;
    ray_degree(q, basis)
}

/// For homogeneous `P`: whether `R_l R_h = R_{l+h}` whenever `l, h, l+h ∈ L`,
/// i.e. whether `R_l -> Z^l` is multiplicative on the computed span.
pub fn is_monomial_algebra_embedding<F: Scalar>(basis: &CentralizerBasis<F>) -> Result<bool> {
    if !is_homogeneous(&basis.p)? {
        return Err(WeylError::Contract("P must be homogeneous".into()));
    }
    let side = basis.side();
    for (l, rl) in &basis.elements {
        if ell_side(rl, side)? != *rl {
            return Ok(false);
        }
        for (h, rh) in basis.elements.range(l..) {
            if let Some(rlh) = basis.elements.get(&(l + h)) {
                if rl.mul(rh) != *rlh {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
