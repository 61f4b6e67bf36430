use thiserror::Error;

use crate::field::Field;

#[derive(Debug, Error)]
pub enum Error {
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: Field, right: Field },

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("letter x{index} out of range for a tuple of {d} matrices")]
    IndexOutOfRange { index: u32, d: usize },

    #[error("invalid matrix data: {0}")]
    Matrix(String),

    #[error("{0}")]
    Unsupported(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
