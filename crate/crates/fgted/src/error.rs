//! Crate-wide error type.
//!
//! Every failure mode maps to one of the CLI exit codes: usage/config
//! problems exit 1, bad input data exits 2, numeric trouble (shape
//! mismatches, non-finite values, tape misuse) exits 3.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Tensor shapes do not conform to a primitive's rule.
    #[error("dimension error: {0}")]
    Dim(String),

    /// A value became NaN/infinite, or a numeric precondition failed.
    #[error("numeric error: {0}")]
    Numeric(String),

    /// API misuse (wrong argument combination, misaligned rows, ...).
    #[error("usage error: {0}")]
    Usage(String),

    /// Tape/trainer state machine violation (e.g. double backward).
    #[error("state error: {0}")]
    State(String),

    /// Malformed or inconsistent input data.
    #[error("data error: {0}")]
    Data(String),

    /// Invalid model or run configuration.
    #[error("config error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code for the CLI: 1 usage, 2 data, 3 numeric.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) | Error::Config(_) | Error::Io(_) => 1,
            Error::Data(_) | Error::Json(_) => 2,
            Error::Dim(_) | Error::Numeric(_) | Error::State(_) => 3,
        }
    }
}
