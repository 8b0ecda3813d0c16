use thiserror::Error;

/// Errors raised by the exact kernel.
///
/// Variants fall in two groups: malformed input (`Parse`, `Shape`, ...) and
/// mathematical precondition failures (`NotSymmetric`, `NoDeterminacyDomain`, ...).
/// The CLI maps the first group to exit code 2 and the second to exit code 3.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("division by zero")]
    DivisionByZero,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("polynomial degree {found} is too small, need at least {needed}")]
    DegreeTooSmall { needed: usize, found: usize },
    #[error("invalid interval: lower end must be strictly below upper end")]
    InvalidInterval,
    #[error("tolerance must be positive")]
    NonPositiveTolerance,
    #[error("square root of a negative number")]
    NegativeSqrt,
    #[error("matrix shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is not normal")]
    NotNormal,
    #[error("matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("matrix {0} is degenerate (zero determinant)")]
    Degenerate(String),
    #[error("no compact determinacy domain: {0}")]
    NoDeterminacyDomain(String),
    #[error("unsupported problem data: {0}")]
    Unsupported(String),
    #[error("derivative bound not certified: {0}")]
    DerivativeBound(String),
    #[error("point outside the grid hull")]
    OutsideGrid,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("exact verification failed: {0}")]
    Verification(String),
}

impl Error {
    /// True for failures of mathematical preconditions, as opposed to malformed input.
    pub fn is_mathematical(&self) -> bool {
        matches!(
            self,
            Error::DivisionByZero
                | Error::Singular
                | Error::NotSymmetric
                | Error::NotNormal
                | Error::NotPositiveDefinite
                | Error::Degenerate(_)
                | Error::NoDeterminacyDomain(_)
                | Error::NegativeSqrt
                | Error::DerivativeBound(_)
                | Error::Verification(_)
                | Error::ZeroPolynomial
                | Error::GcdOfZeros
                | Error::DivisionByZeroPolynomial
                | Error::DegreeTooSmall { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
