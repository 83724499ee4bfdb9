use thiserror::Error;

/// Malformed signed-partition or class label text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid label `{token}`: {reason}")]
pub struct LabelError {
    pub token: String,
    pub reason: &'static str,
}

impl LabelError {
    pub(crate) fn new(token: &str, reason: &'static str) -> Self {
        LabelError {
            token: token.to_string(),
            reason,
        }
    }
}

/// Failure to parse a Coxeter type descriptor such as `B3 x I2(7)`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TypeParseError {
    #[error("parse error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("rank out of range for {factor}: {reason}")]
    Rank { factor: String, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    TypeParse(#[from] TypeParseError),

    #[error("group order {order} exceeds the configured cap {cap}")]
    CapExceeded { order: u64, cap: u64 },

    #[error("{factor} needs the brute-force oracle on a group of order {order}, beyond the cap {cap}")]
    NeedsOracleBeyondCap { factor: String, order: u64, cap: u64 },

    #[error("{0} has no closed-form z-class count; use the oracle")]
    NoClosedForm(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("group cache: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
