use thiserror::Error;

/// Errors reported by the summation engine.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("zero input where a nonzero value is required")]
    ZeroInput,

    #[error("inexact polynomial division")]
    InexactDivision,

    #[error("partial fraction factors do not match the denominator")]
    FactorMismatch,

    #[error("input has a nontrivial special factor where none is allowed")]
    SpecialFactor,

    #[error("kernel is not sigma_y-reduced")]
    NotReduced,

    #[error("kernel is not sigma_y-standard")]
    NotStandard,

    #[error("operation requires the q-shift case")]
    RequiresQShift,

    #[error("operand is not a valid remainder with respect to the kernel")]
    InvalidRemainder,

    #[error("sigma_x and sigma_y quotients are not compatible")]
    IncompatibleTerm,

    #[error("quotient of a hypergeometric term must be nonzero")]
    ZeroQuotient,

    #[error("{0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
