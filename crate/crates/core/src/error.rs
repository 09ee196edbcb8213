use thiserror::Error;

use crate::combinatorics::ContentViolation;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid skew shape: {0}")]
    InvalidShape(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("not a content vector: {0}")]
    InvalidContent(ContentViolation),

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("size mismatch: shape has {shape} boxes but cycle type sums to {cycle_type}")]
    SizeMismatch { shape: usize, cycle_type: usize },

    #[error("{what}: n = {n} exceeds the size cap {cap}")]
    SizeCap { what: &'static str, n: usize, cap: usize },

    #[error("{0} is not a hook")]
    NotAHook(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
