use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected length {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("invalid symbol {0:?}; expected one of '0', '1', '*'")]
    InvalidSymbol(char),

    #[error("binary vector expected but found a joker at position {0}")]
    UnexpectedJoker(usize),

    #[error("duplicate member {0}")]
    Duplicate(String),

    #[error("family is not {k}-neighborly: {first} and {second} are at distance {distance}")]
    NotNeighborly {
        k: usize,
        first: String,
        second: String,
        distance: usize,
    },

    #[error("audit check {check} failed: {reason}")]
    AuditFailed { check: String, reason: String },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("resource limit exceeded: {0}")]
    Resource(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
