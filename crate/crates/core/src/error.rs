use thiserror::Error;

/// Errors surfaced by parsing, validation, and the brute-force engines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error: {0}")]
    Syntax(String),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("not a simple group: {0}")]
    NotSimple(String),

    #[error("order {order} exceeds cap {cap}")]
    OrderCapExceeded { order: u64, cap: u64 },

    #[error("invalid action: {0}")]
    InvalidAction(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("argument out of range: {0}")]
    OutOfRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;
