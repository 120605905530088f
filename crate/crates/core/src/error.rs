use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("input outside the map's domain: {0}")]
    Domain(String),
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("unknown identifier: {0}")]
    Unknown(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("enumeration cancelled (time budget exhausted)")]
    Cancelled,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
