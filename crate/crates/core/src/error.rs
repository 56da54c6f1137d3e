use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} = {value} exceeds the configured bound {limit}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("shape mismatch: {left} vs {right}")]
    ShapeMismatch { left: String, right: String },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("{0} must be a non-empty partition")]
    EmptyPartition(&'static str),

    #[error("basis mismatch: {left} vs {right}")]
    BasisMismatch { left: char, right: char },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("unsupported conversion from {from} to {to}")]
    UnsupportedConversion { from: char, to: char },

    /// An internal consistency check failed. Signals a bug, never bad input.
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}
