use thiserror::Error;

use crate::root_system::Weight;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("rank must be at least 1")]
    ZeroRank,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("weight {0} is not dominant")]
    NotDominant(Weight),

    #[error("weight {weight} is not {p}-restricted")]
    NotRestricted { weight: Weight, p: u64 },

    #[error("{mu} is not a subdominant weight of {lambda}")]
    NotSubdominant { lambda: Weight, mu: Weight },

    #[error("cannot parse weight {input:?}: {reason}")]
    ParseWeight { input: String, reason: String },

    #[error("cannot parse matrix dump: {0}")]
    ParseMatrix(String),

    #[error("resource cap exceeded at {what}: {size} > {cap}")]
    ResourceExceeded { what: String, size: usize, cap: usize },

    #[error("no multiplicity source for {mu} in L({lambda}) under strategy {strategy}")]
    Uncomputable {
        lambda: Weight,
        mu: Weight,
        strategy: &'static str,
    },

    #[error("unknown table row {0:?}")]
    UnknownRow(String),

    #[error("weight {0} does not match the required pattern")]
    PatternMismatch(Weight),

    #[error("invalid argument: {0}")]
    Invalid(String),
}

impl Error {
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::ResourceExceeded { .. } | Error::Uncomputable { .. })
    }
}
