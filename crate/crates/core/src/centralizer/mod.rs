//! Centralizers `Z(P) = {Q : PQ = QP}`.
//!
//! * [`homog_centralizer_component`] solves the functional equation that
//!   describes `Z(P) ∩ W_j` for homogeneous `P`.
//! * [`centralizer_basis`] computes `Z(P)` up to a total-degree bound as the
//!   exact kernel of `Q -> [P, Q]`, then normalizes it into the basis `R_l`
//!   indexed by the multiple `l` of the primitive direction.
//! * [`decompose`] writes an element over `k[S_0] ⊕ k[S_0] S_1 ⊕ ...`.
//! * [`monoid_classes`] analyses the numeric submonoid of detected `l`.

mod basis;
mod decompose;
mod homogeneous;
mod monoid;

pub use basis::{
    centralizer_basis, coordinates, degree, is_monomial_algebra_embedding, ray_degree,
    reduced_echelon, xy_centralizer_basis, BasisSector, CentralizerBasis, SPick,
};
pub use decompose::{decompose, recompose};
pub use homogeneous::{homog_centralizer_component, HomogComponentResult, HomogKind};
pub use monoid::{generated_monoid, monoid_classes, MonoidInfo};
