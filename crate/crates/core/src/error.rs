use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported root system type `{0}`")]
    UnsupportedType(String),
    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("not a root: {0}")]
    NotARoot(String),
    #[error("weight is not in the root lattice: {0}")]
    NotInRootLattice(String),
    #[error("polynomial division left a nonzero remainder")]
    NonzeroRemainder,
    #[error("superregularity budget exhausted: {0}")]
    Budget(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency check failed: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
