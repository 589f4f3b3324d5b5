use thiserror::Error;

/// Errors surfaced by every operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field size {p}^{e} exceeds the supported cap of {cap} elements")]
    FieldTooLarge { p: u64, e: u32, cap: u64 },
    #[error("invalid weight system: {0}")]
    InvalidWeights(String),
    #[error("coordinate tuple is all zero")]
    ZeroTuple,
    #[error("expected {expected} coordinates, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("budget exceeded for {what}: needs {needed}, cap is {cap}")]
    Budget {
        what: &'static str,
        needed: u128,
        cap: u128,
    },
    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("polynomial is not weighted homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
