use thiserror::Error;

/// Errors raised when an operation is called outside its domain.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("unsupported divisor: leading coefficient {0} is not +1 or -1")]
    UnsupportedDivisor(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
