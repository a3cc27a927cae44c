use thiserror::Error;

/// Errors raised by the polynomial construction and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} out of range for {n} variables")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("dimension mismatch: expected {expected} variables, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("word {letters:?} is not reduced (length {len}, {inversions} inversions)")]
    NonReducedWord {
        letters: Vec<usize>,
        len: usize,
        inversions: usize,
    },

    #[error("enumeration bound exceeded: N = {n} > {bound}")]
    BoundExceeded { n: usize, bound: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("singular parameter: pairing {pairing} vanishes")]
    SingularParameter { pairing: String },

    #[error("label {label} is outside the admissible sector: {reason}")]
    InvalidSector { label: String, reason: String },

    #[error("pole encountered: {0}")]
    PoleEncountered(String),

    #[error("degenerate eigenvalue at {0}")]
    DegenerateEigenvalue(String),

    #[error("quadrature requires integer couplings, got {0}")]
    NonIntegerCoupling(String),

    #[error("exponent {0} is not an integer")]
    IrrationalExponent(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
