use crate::scalar::Field;

/// Errors shared across the crate.
///
/// Every failure mode is explicit; no operation ever falls back to an
/// approximate or unverified answer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("bracket closure exceeded the dimension budget of {max_dim} (reached {reached})")]
    ClosureBudgetExceeded { max_dim: usize, reached: usize },
    #[error("analysis budget exceeded after {attempts} attempts: verdict withheld")]
    AnalysisBudgetExceeded { attempts: usize },
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("representation is not irreducible")]
    NotIrreducible,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("bad structure: {0}")]
    BadStructure(String),
    #[error("input violates the embedding domain: {0}")]
    DomainViolation(String),
    #[error("element does not lie in the chosen m-part")]
    NotInM,
    #[error("vector is not light-like")]
    NotLightlike,
    #[error("vectors do not span a negative definite plane")]
    NotNegativePlane,
    #[error("point is not in the Lie ball")]
    NotInLieball,
    #[error("scalar is not real, sign undefined")]
    NotReal,
}

pub type Result<T> = std::result::Result<T, Error>;
