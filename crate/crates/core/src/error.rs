use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("width mismatch: expected {expected}, found {found}")]
    WidthMismatch { expected: usize, found: usize },

    #[error("kind mismatch: rows must share the same kind")]
    KindMismatch,

    #[error("ground set must have at least one element")]
    EmptyGroundSet,

    #[error("position {position} is outside the ground set [1, {width}]")]
    PositionOutOfRange { position: usize, width: usize },

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("guard exceeded: {what} (limit {limit}, got {got})")]
    GuardExceeded {
        what: &'static str,
        limit: u128,
        got: u128,
    },

    #[error("{0} is not a face of the complex")]
    NotAFace(String),

    #[error("{0} is not a closed set")]
    NotClosed(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("degree {degree} is smaller than the largest face cardinality {needed}")]
    DegreeTooSmall { degree: usize, needed: usize },

    #[error("missing value for k = {0}")]
    MissingEntry(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}
