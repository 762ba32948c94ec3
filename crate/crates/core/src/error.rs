use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument violates the precondition of the operation.
    #[error("input outside domain: {0}")]
    Domain(String),

    /// Two points that must be distinct coincide.
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// The rotation axis through two points is not unique.
    #[error("ambiguous axis: {0}")]
    AmbiguousAxis(String),

    #[error("unsupported operation: {0}")]
    Unsupported(String),

    /// An exchange path meets the diagonal of the two-particle space.
    #[error("exchange path crosses the diagonal (separation {separation:.3e} at t = {t:.6})")]
    DiagonalCrossing { t: f64, separation: f64 },

    /// Internal consistency check failed; signals a construction bug or
    /// a numerical breakdown.
    #[error("inconsistent result: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn inconsistent(msg: impl Into<String>) -> Self {
        Error::Inconsistent(msg.into())
    }
}
