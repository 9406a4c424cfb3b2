use thiserror::Error;

/// Failure modes shared by every operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The stored coefficients do not reach far enough to certify an exact answer.
    #[error("insufficient truncation: {0}")]
    InsufficientTruncation(String),

    /// A rational function was evaluated at one of its poles.
    #[error("pole at u = {0}")]
    PoleAtPoint(String),

    /// An input violates a documented precondition of the operation.
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    /// Every term of a semiroot expansion lies in the ideal of the branch.
    #[error("no finite value: the element vanishes on the branch")]
    NoFiniteValue,

    /// The separatrix solver met a zero slope or a non-monotone unknown.
    #[error("solver stalled at t^{order}: {detail}")]
    SolverStall { order: usize, detail: String },

    /// Merle's formula produced a non-integral intersection number.
    #[error("non-integral result: {0}")]
    NonIntegralResult(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable name, used in CLI error documents.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InsufficientTruncation(_) => "InsufficientTruncation",
            Error::PoleAtPoint(_) => "PoleAtPoint",
            Error::PreconditionFailed(_) => "PreconditionFailed",
            Error::NoFiniteValue => "NoFiniteValue",
            Error::SolverStall { .. } => "SolverStall",
            Error::NonIntegralResult(_) => "NonIntegralResult",
            Error::Parse(_) => "ParseError",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::PreconditionFailed(msg.into()))
}

pub(crate) fn truncation<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InsufficientTruncation(msg.into()))
}
