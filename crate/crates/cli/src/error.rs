use mckay_core::groups::GroupError;
use mckay_core::orbifold::OrbifoldError;
use mckay_core::toric::ToricError;
use thiserror::Error;

use crate::parse::ParseError;

/// Exit codes of the `mckay` binary.
pub mod exit {
    pub const OK: i32 = 0;
    pub const PROPERTY_FAILURE: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const CAP: i32 = 3;
    pub const UNSUPPORTED: i32 = 4;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Toric(#[from] ToricError),
    #[error(transparent)]
    Orbifold(#[from] OrbifoldError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Group(GroupError::CapExceeded { .. })
            | Self::Orbifold(OrbifoldError::Group(GroupError::CapExceeded { .. })) => exit::CAP,
            Self::Toric(ToricError::UnsupportedDimension(_))
            | Self::Orbifold(OrbifoldError::Toric(ToricError::UnsupportedDimension(_))) => {
                exit::UNSUPPORTED
            }
            _ => exit::PARSE,
        }
    }
}
