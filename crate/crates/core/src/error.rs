use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An operation received arguments outside its domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// A closed-form generator was asked for invalid parameters.
    #[error("parameter error: {0}")]
    Parameter(String),
    /// Bad command-line input or unsupported format.
    #[error("usage error: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
