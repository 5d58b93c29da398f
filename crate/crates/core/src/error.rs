use thiserror::Error;

/// Errors raised by the algebra engine and the verification procedures.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("variable sets differ: [{left}] vs [{right}]")]
    VarSetMismatch { left: String, right: String },
    #[error("index {index} out of range for {len} variables")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("expected a single-term expression: {0}")]
    NonMonomial(String),
    #[error("not a perfect square: {0}")]
    NotASquare(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("negative powers of `{var}` survive the limit: {poly}")]
    DivergentLimit { var: String, poly: String },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unsupported operation: {0}")]
    Unsupported(String),
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid exchange matrix: {0}")]
    InvalidMatrix(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
