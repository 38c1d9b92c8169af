use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A negative power of q was evaluated at q = 0.
    #[error("cannot evaluate a negative power of q at q = 0")]
    ZeroQ,
    #[error("bad dimension: {0}")]
    BadDim(String),
    #[error("index {index} out of range (length {len})")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("operator is not nilpotent of order {0}")]
    NotNilpotent(usize),
    #[error("element is not invertible: {0}")]
    NotInvertible(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
