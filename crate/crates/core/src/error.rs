use thiserror::Error;

/// Errors reported by the h-vector, bound and apolarity routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("binomial index must be at least 1, got {0}")]
    ZeroIndex(u32),
    #[error("h-vector is empty")]
    EmptyVector,
    #[error("h-vector must start with 1, got {0}")]
    LeadingEntry(u64),
    #[error("h-vector {0} is not symmetric")]
    NotSymmetric(String),
    #[error("h-vector {0} is not an O-sequence")]
    NotOSequence(String),
    #[error("h-vector {vector} is too short: {reason}")]
    TooShort {
        vector: String,
        reason: &'static str,
    },
    #[error("cannot parse h-vector {input:?}: {reason}")]
    ParseVector { input: String, reason: String },
    #[error("codimension must be at least {min}, got {got}")]
    Codimension { min: u64, got: u64 },
    #[error("socle degree must be at least {min}, got {got}")]
    SocleDegree { min: u32, got: u32 },
    #[error("oracle parameters out of range: {0}")]
    OracleRange(String),
    #[error("recursion depth must be positive")]
    ZeroDepth,
    #[error("zero form has no apolar algebra")]
    ZeroForm,
    #[error("operator degree {index} outside 0..={degree}")]
    OperatorDegree { index: u32, degree: u32 },
    #[error("{0} is not a supported prime modulus")]
    BadPrime(u64),
    #[error("form mismatch: {0}")]
    FormMismatch(String),
    #[error("form file line {line}: {reason}")]
    FormSyntax { line: usize, reason: String },
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
