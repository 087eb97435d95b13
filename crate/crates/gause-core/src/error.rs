//! Error type shared by all analysis modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoreError {
    #[error("division by zero: {0}")]
    DivisionByZero(&'static str),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("exact-mode parameters required: {0}")]
    ExactRequired(String),
    #[error("numeric domain error: {0}")]
    Numeric(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, CoreError>;
