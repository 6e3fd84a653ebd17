//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed value in an input file, reported with its 1-based line number.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Structurally unusable input or configuration (maps to CLI exit code 2).
    #[error("invalid input: {0}")]
    Invalid(String),

    /// A required CSV column is absent.
    #[error("missing required column `{0}`")]
    MissingColumn(String),

    /// Band construction failed; `time` names the offending grid point.
    #[error("band construction failed at time {time}: {message}")]
    Band { time: f64, message: String },

    /// No event times fall inside the requested band interval.
    #[error("no event times inside band interval [{t1}, {t2}]")]
    EmptyInterval { t1: f64, t2: f64 },

    /// Numerical integration of a limit oracle did not converge.
    #[error("quadrature failed: {0}")]
    Quadrature(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the CLI: 2 for usage/format errors, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Invalid(_) | Error::MissingColumn(_) => 2,
            _ => 1,
        }
    }
}
