use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {0} vs {1}")]
    VariableMismatch(usize, usize),
    #[error("not divisible")]
    NotDivisible,
    #[error("inhomogeneous input: {0}")]
    Inhomogeneous(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("bad characteristic: {0}")]
    BadCharacteristic(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("field too small: {0}")]
    FieldTooSmall(String),
    #[error("not reduced: {0}")]
    NotReduced(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
