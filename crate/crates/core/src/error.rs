use thiserror::Error;

/// Errors raised by the algebra and discriminant routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division is not exact")]
    NonExactDivision,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("unknown indeterminate `{0}`")]
    UnknownVariable(String),
    #[error("no value assigned to indeterminate `{0}`")]
    MissingAssignment(String),
    #[error("variable tables are incompatible")]
    IncompatibleTables,
    #[error("{0}")]
    OutOfRange(String),
    #[error("scale cap exceeded: {0}")]
    ScaleCap(String),
    #[error("degenerate case: {0}")]
    DegenerateCase(String),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("root values are not pairwise distinct")]
    RepeatedRoot,
    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("invalid multiplicity vector: {0}")]
    InvalidPartition(String),
    #[error("polynomial must have integer coefficients")]
    NonInteger,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal contract violation: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
