//! Crate-wide error type.

/// Convenience alias used by every fallible operation in this crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by parameter validation and numerical evaluation.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A parameter is outside the domain of the requested operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Evaluation requested exactly at a pole or with a vanishing denominator.
    #[error("singular evaluation: {0}")]
    Singularity(String),

    /// The lossless plasma model has no eddy-current branch cut.
    #[error("no branch cut: plasma model (gamma = 0) has no eddy-current continuum")]
    NoCut,

    /// Root bracketing failed: no sign change over the given interval.
    #[error("bracketing error: no sign change on [{lo:e}, {hi:e}]")]
    Bracket { lo: f64, hi: f64 },

    /// Adaptive quadrature or a series sum exhausted its budget. The best
    /// estimate and its error bound are attached.
    #[error("did not converge: best estimate {best:e} +/- {error:e} (requested {requested:e})")]
    NonConvergence { best: f64, error: f64, requested: f64 },

    /// A guarded numerical condition (underflowing reference, etc.).
    #[error("numerical guard: {0}")]
    Numerical(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn singular(msg: impl Into<String>) -> Self {
        Error::Singularity(msg.into())
    }
}
