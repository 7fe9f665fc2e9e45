use thiserror::Error;

/// Errors raised by validating constructors and operations with preconditions.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: u64, right: u64 },
    #[error("{inner} is not contained in {outer}")]
    NotContained { inner: String, outer: String },
    #[error("n = {n} is below the threshold {min} for this shape")]
    BelowThreshold { n: u64, min: u64 },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: u64, max: u64 },
    #[error("operation requires a connected diagram class, got {0}")]
    Disconnected(String),
    #[error("operation requires a nonempty diagram class")]
    EmptyClass,
    #[error("malformed class key: {0}")]
    BadClassKey(String),
    #[error("unmapped variable: {0}")]
    MissingVariable(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
