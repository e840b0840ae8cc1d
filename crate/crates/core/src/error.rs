//! Crate-wide error and check-failure types.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(String, String),
    #[error("unbound variable l{0}")]
    UnboundVariable(u32),
    #[error("arity mismatch: {expected} variables, point of length {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("non-invertible leading coefficient in series division")]
    NonInvertibleLead,
    #[error("series order too small: need {need}, have {have}")]
    OrderTooSmall { need: usize, have: usize },
    #[error("coefficients do not commute pairwise: {0}")]
    NoncommutativeCoefficients(String),
    #[error("not a polynomial in the Euler operator: {0}")]
    NotEulerPolynomial(String),
    #[error("not in C[Euler] tensor U: {0}")]
    NotInEulerSpan(String),
    #[error("component z_{0} is not central")]
    NonCentralComponent(usize),
    #[error("element is not central")]
    NotCentral,
    #[error("projection image is not symmetric: {0}")]
    SymmetryViolation(String),
    #[error("element is not in the traceless span")]
    NotTraceless,
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("matrix is not square")]
    NonSquare,
    #[error("non-central coefficient at degree {0}")]
    NonCentralCoefficient(usize),
    #[error("truncation overflow: degree {degree} exceeds bound {bound}")]
    TruncationOverflow { degree: usize, bound: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Outcome of a single verification check. A failure carries the name of the
/// failing clause and a canonical-text witness.
#[derive(Debug, Clone, Error, PartialEq)]
#[error("{check}: {witness}")]
pub struct Failure {
    pub check: String,
    pub witness: String,
}

impl Failure {
    pub fn new(check: impl Into<String>, witness: impl Into<String>) -> Self {
        Failure {
            check: check.into(),
            witness: witness.into(),
        }
    }
}

/// Result of a verification operation: `Ok(())` means the identity holds.
pub type Check = std::result::Result<(), Failure>;

/// Truncate a witness string deterministically so reports stay readable.
pub fn clip(s: String) -> String {
    const MAX: usize = 600;
    if s.len() <= MAX {
        s
    } else {
        let mut cut = MAX;
        while !s.is_char_boundary(cut) {
            cut -= 1;
        }
        format!("{}... [{} bytes total]", &s[..cut], s.len())
    }
}
