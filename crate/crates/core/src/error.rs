use thiserror::Error;

/// Errors produced by the scattering and squeezing routines.
#[derive(Debug, Error)]
pub enum Error {
    /// Input outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Evaluation landed on (or too close to) a pole of a trigonometric term
    /// or a geometric-series denominator.
    #[error("pole error: {0}")]
    Pole(String),

    /// A numeric procedure failed (overflow, non-convergence, ...).
    #[error("numeric error: {0}")]
    Numeric(String),

    /// The operation is not defined for the requested region.
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
