//! Crate-wide error type.
//!
//! Variants are grouped by how the command-line harness maps them to exit
//! codes: malformed input (2), insufficient truncation (3). Audit failures
//! are not errors — they are report contents.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Structurally invalid input: schema violations, singular pairings,
    /// dimension-filter violations, bad argument ranges.
    #[error("malformed input: {0}")]
    Malformed(String),

    /// The requested computation needs more series coefficients or table
    /// entries than the supplied truncation or data provides.
    #[error("truncation insufficient: {0}")]
    Truncation(String),

    /// A runtime consistency assertion failed. This indicates a bug or an
    /// overdetermined system disagreeing and must never happen on valid
    /// inputs.
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

impl Error {
    pub fn malformed(msg: impl Into<String>) -> Self {
        Error::Malformed(msg.into())
    }

    pub fn truncation(msg: impl Into<String>) -> Self {
        Error::Truncation(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
