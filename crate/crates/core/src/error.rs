//! Error type shared across the library.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Invalid input or misuse of an operation (mismatched orders, malformed step sets, ...).
    #[error("usage: {0}")]
    Usage(String),
    /// A mathematical precondition does not hold (e.g. log of a series without unit constant term).
    #[error("domain: {0}")]
    Domain(String),
    /// Two independent computation routes disagreed; signals an implementation bug.
    #[error("internal consistency: {0}")]
    Computation(String),
    /// Numerics could not reach the requested accuracy even after precision escalation.
    #[error("precision: {0}")]
    Precision(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code the CLI maps this error to.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Usage(_) | Error::Io(_) | Error::Json(_) => 2,
            Error::Domain(_) | Error::Computation(_) => 3,
            Error::Precision(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
