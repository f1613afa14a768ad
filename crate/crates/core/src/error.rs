use alloc::string::String;

/// Errors raised by the algebraic layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Two operands live over different parameters (fields, orders, monoids).
    #[error("parameter mismatch: {0}")]
    ParameterMismatch(String),
    /// An input lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A configured resource bound would be exceeded.
    #[error("resource bound exceeded: {0}")]
    Resource(String),
    /// A Hecke eigenvalue cannot be the Frobenius trace of an abelian surface.
    #[error("invalid eigenvalue: {0}")]
    InvalidEigenvalue(String),
    /// A documented precondition does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// The endomorphism-ring deduction is missing a positive certificate.
    #[error("deduction refused: {0}")]
    DeductionRefused(String),
}

pub type Result<T> = core::result::Result<T, Error>;
