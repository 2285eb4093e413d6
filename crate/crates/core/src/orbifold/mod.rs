//! Orbifold Euler numbers and Lefschetz numbers of h on crepant resolutions of
//! global quotients, evaluated over stratified or class-level data sheets.

pub mod dynkin;
pub mod evaluate;
pub mod fermat;
pub mod lt;
pub mod mckay;
pub mod quintic;
pub mod sheet;

use thiserror::Error;

use crate::groups::GroupError;
use crate::toric::ToricError;

pub use dynkin::{dynkin_lefschetz, DynkinGraph};
pub use evaluate::{
    chain_check, commuting_pair_euler, contributions, contributions_by_dimension, euler_orbifold,
    lefschetz_theorem1, split_stratum, ChainReport, Contribution,
};
pub use lt::{lt_sheet, LT_IDENTITY};
pub use mckay::{ade_cases, mckay_check, toric_mckay, McKayReport, ToricMcKayReport};
pub use quintic::{quintic_identity_sheet, quintic_sheet, QuinticGeometry, QUINTIC_IDENTITY};
pub use sheet::{ClassRecord, CommutingPair, GSpaceSheet, Provenance, StratumRecord, Tagged};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrbifoldError {
    #[error("sheet does not match the schema at line {line}, column {column}: {message}")]
    Schema {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("inconsistent sheet: {0}")]
    InconsistentSheet(String),
    #[error("class `{class}` has no {field}")]
    MissingValue { class: String, field: &'static str },
    #[error("invalid graph: {0}")]
    BadGraph(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Toric(#[from] ToricError),
}
