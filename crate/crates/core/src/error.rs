use thiserror::Error;

/// Errors raised by the polynomial layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    /// Long division left a nonzero remainder, or a quotient coefficient was
    /// not an integer.
    #[error("not divisible: {0}")]
    NotDivisible(String),
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// Crate-level error.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    /// Divisibility is only decided for moduli with constant term 1.
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    /// Two independent computations of the same quantity disagreed, or an
    /// asserted identity failed to re-expand.
    #[error("consistency check failed: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
