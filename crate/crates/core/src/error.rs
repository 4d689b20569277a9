use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a supported prime (need a prime p <= 251)")]
    NotPrime(u32),
    #[error("vector has length {got}, expected ambient dimension {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("operands live in different ambient spaces")]
    AmbientMismatch,
    #[error("subspace is not contained in the required outer space")]
    NotContained,
    #[error("sum is not direct")]
    NotDirect,
    #[error("vector is outside the decomposed space")]
    OutsideSum,
    #[error("requested dimension {dim} exceeds available dimension {available}")]
    BadDimension { dim: usize, available: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid multi-index: {0}")]
    InvalidMultiIndex(String),
    #[error("invalid line choice: {0}")]
    InvalidLine(String),
    #[error("linear map has the wrong type: {0}")]
    MapType(String),
    #[error("enumeration estimate {estimate} exceeds budget {budget}")]
    BudgetExceeded { estimate: u128, budget: u128 },
    #[error("point is not on the variety: {0}")]
    NotOnVariety(String),
}
