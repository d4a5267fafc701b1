use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid rational `{0}` (expected \"num/den\")")]
    InvalidRational(String),
    #[error("evaluation point must be positive, got {0}")]
    NonPositiveQ(String),
    #[error("pole: diagonal denominator vanishes on x^{m} at q = {q}")]
    Pole { m: usize, q: String },
    #[error("pole: {0}")]
    ZeroDenominator(String),
    #[error("series did not converge after {terms} terms (last |term| = {last_term:e})")]
    NonConvergence { terms: usize, last_term: f64 },
    #[error("parameters outside the convergence region: {0}")]
    OutsideConvergenceRegion(String),
    #[error("insufficient data: {0}")]
    InsufficientData(String),
    #[error("invalid interval: {0}")]
    InvalidInterval(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("cannot parse polynomial `{0}`")]
    InvalidPolynomial(String),
}

pub type Result<T> = std::result::Result<T, Error>;
