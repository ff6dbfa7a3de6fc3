use thiserror::Error;

/// Failures raised by the algebraic operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    /// Malformed input: wrong tensor arity, out-of-range positions, invalid parameters.
    #[error("structural error: {0}")]
    Structural(String),
    /// An operation was called outside its domain (e.g. reduced coproduct of a scalar).
    #[error("contract violation: {0}")]
    Contract(String),
    /// Requested degree exceeds the enumeration cap of the algebra.
    #[error("degree {degree} exceeds the enumeration cap {cap} of {algebra}")]
    Resource {
        algebra: String,
        degree: usize,
        cap: usize,
    },
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
