//! Toric side: lattice pairs N ⊇ M = Z^n from diagonal abelian groups, σ-adjusted
//! unimodular triangulations of the base simplex, and the orbit-sum Lefschetz number
//! of a coordinate permutation on the resulting crepant resolution.

pub mod construct;
pub mod geometry;
pub mod lattice_pair;
pub mod lefschetz;
pub mod lp;
pub mod perm;
pub mod standard;
pub mod theorem2;
pub mod triangulation;
pub mod verify;

use thiserror::Error;

pub use construct::{
    adjusted_triangulation, adjusted_triangulation_with, equivariant_flips, ConstructionOptions,
};
pub use geometry::InsertionOrder;
pub use lattice_pair::{HGenerator, LatticePair};
pub use lefschetz::{
    block_det, companion_block_det, count_fixed_elements, fixed_lattice_index, orbit_records,
    toric_lefschetz, OrbitRecord,
};
pub use perm::PermSymmetry;
pub use standard::{check_adjusted, is_g_standard, standard_pair, GStandardReport, StandardPair};
pub use theorem2::{theorem2_check, Theorem2Report};
pub use triangulation::{Certificate, Triangulation, TriangulationDocument};
pub use verify::{verify_crepant, CrepantReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ToricError {
    #[error("generator {index} does not satisfy the SL condition (coordinate sum not divisible by the modulus)")]
    NotSpecialLinear { index: usize },
    #[error("generator {index} has modulus 0")]
    BadModulus { index: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid permutation: {0}")]
    BadPermutation(String),
    #[error("the permutation does not preserve N")]
    NotPreserved,
    #[error("the simplex is not invariant under the permutation")]
    NotInvariant,
    #[error("the triangulation is not invariant under the permutation")]
    NotInvariantTriangulation,
    #[error("construction is supported for n = 2 and n = 3 only (got n = {0})")]
    UnsupportedDimension(usize),
    #[error("unsupported permutation order {0}")]
    UnsupportedOrder(usize),
    #[error("degenerate orbit: {0}")]
    DegenerateOrbit(String),
    #[error("triangulation document: {0}")]
    Document(String),
}
