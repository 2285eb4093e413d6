//! Finite matrix groups over cyclotomic integers: closure, conjugacy classes,
//! centralizers and conjugation by normalizing matrices.

pub mod action;
pub mod element;
pub mod fixtures;
pub mod group;

use thiserror::Error;

pub use action::{ch_filter, ch_filter_indices, OuterAction};
pub use element::GroupElement;
pub use group::{close_group, ClosureOptions, ConjClassSet, FiniteMatrixGroup, DEFAULT_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("no generators supplied")]
    NoGenerators,
    #[error("generators have different dimensions")]
    DimensionMismatch,
    #[error("a generator is singular")]
    Singular,
    #[error("element is not in the group")]
    ElementNotInGroup,
    #[error("matrix does not normalize the group")]
    NotNormalizing,
    #[error("stabilizer is not a subgroup of the group")]
    StabilizerNotSubgroup,
}
