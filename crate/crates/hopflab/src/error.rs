use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors surfaced by the library. Validation failures keep the offending
/// value in the message so CLI users can see what was rejected.
#[derive(Debug, Error)]
pub enum Error {
    #[error("eigenvalue modulus must be greater than one, got {0}")]
    ModulusNotGreaterThanOne(String),

    #[error("spec mixes exact and float eigenvalues")]
    MixedModes,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid value: {0}")]
    InvalidValue(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),

    #[error("factorization failed: {0}")]
    FactorizationFailed(String),

    #[error("enumeration cap exceeded: {0}")]
    EnumerationCapExceeded(String),

    #[error("the potential is defined on ℂⁿ∖0; got the zero point")]
    ZeroPoint,

    #[error("root search did not converge within {0} iterations")]
    NonConvergence(usize),

    #[error("finite-difference step too large: Hermitian defect {defect:e} exceeds {limit:e}")]
    StepTooLarge { defect: f64, limit: f64 },

    #[error("tensor field does not descend to the quotient: deck weight {0} ≠ 1")]
    NotDescending(String),

    #[error("numeric cross-check disagrees with exact symbolic value: {0}")]
    NumericMismatch(String),

    #[error("operation requires a certified (exact-mode) relation lattice")]
    NotCertified,

    #[error("spec is not quasi-regular")]
    NotQuasiRegular,
}

impl Error {
    pub(crate) fn dim(expected: usize, got: usize) -> Self {
        Error::DimensionMismatch { expected, got }
    }
}
