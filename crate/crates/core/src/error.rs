use thiserror::Error;

/// Errors raised by every fallible operation in the crate.
///
/// Mathematical "no" answers (not a square, conic unsolvable, empty
/// intersection) are never errors; they are `None` results.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} must be nonzero")]
    Zero(&'static str),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("{0} is not a prime")]
    NotPrime(String),
    #[error("quaternions belong to different algebras")]
    AlgebraMismatch,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
