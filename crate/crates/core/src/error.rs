use thiserror::Error;

use crate::root_system::LieFamily;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank {n} is out of range for type {family}")]
    InvalidRank { family: LieFamily, n: usize },

    #[error("node {k} is out of range for rank {n}")]
    NodeOutOfRange { n: usize, k: usize },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    #[error("weight {0} is not L-dominant")]
    NotLDominant(String),

    #[error("weight {0} is not G-dominant")]
    NotDominant(String),

    #[error("search too large: an estimated {estimate} nodes (rerun with the override to force)")]
    SearchTooLarge { estimate: u128 },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
