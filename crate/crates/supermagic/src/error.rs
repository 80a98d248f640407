//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus {0} is not an odd prime below 2^15")]
    BadModulus(u32),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("values from different prime fields combined")]
    FieldMismatch,
    #[error("bilinear form is degenerate")]
    DegenerateForm,
    #[error("construction of {name} requires characteristic {required}, session field has characteristic {actual}")]
    CharacteristicRequired {
        name: &'static str,
        required: u32,
        actual: u32,
    },
    #[error("subspace is not an ideal: {0}")]
    NotAnIdeal(String),
    #[error("subspace is not parity-homogeneous")]
    NotGraded,
    #[error("structure constants violate {law}: ({i},{j}) -> {detail}")]
    LawViolation {
        law: &'static str,
        i: usize,
        j: usize,
        detail: String,
    },
    #[error("vector does not lie in the expected span: {0}")]
    NotInSpan(String),
    #[error("unknown algebra name {0:?}")]
    UnknownAlgebra(String),
    #[error("file format error: {0}")]
    Format(String),
    #[error("unsupported format version {found} (expected {expected})")]
    FormatVersion { expected: u32, found: u32 },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
