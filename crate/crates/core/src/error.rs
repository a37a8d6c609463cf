//! Error type shared across the exact-algebra layers.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("exponent overflow in monomial arithmetic")]
    ExponentOverflow,

    #[error("division by zero rational function")]
    DivisionByZero,

    #[error("operator mode mismatch: {0}")]
    ModeMismatch(String),

    #[error("zero operator has no initial term")]
    ZeroOperator,

    #[error("step budget exceeded after {steps} reduction steps")]
    BudgetExceeded { steps: u64 },

    #[error("initial ideal has an infinite staircase (not zero-dimensional in the differential symbols)")]
    InfiniteStaircase,

    #[error("basis is not certified; run Buchberger or the criterion check first")]
    NotCertified,

    #[error("substitution makes a denominator vanish")]
    SingularSubstitution,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
