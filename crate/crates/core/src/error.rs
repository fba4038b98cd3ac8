use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A brute-force enumeration would exceed the configured size limit.
    #[error("resource limit: {what} needs n = {requested}, limit is {limit}")]
    Resource {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    /// Malformed input text.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Structurally valid input that violates a required property.
    #[error("validation error: {0}")]
    Validation(String),

    /// Two routes that must agree exactly did not. Signals a bug.
    #[error("internal mismatch: {0}")]
    InternalMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
