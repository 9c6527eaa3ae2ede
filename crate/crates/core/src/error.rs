use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument outside the domain of an operation (zero polynomial,
    /// length mismatch, ...).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    /// Some monomial in the coordinates is constant on the curve.
    #[error("curve lies in a translate of a proper subtorus: character {0:?} is constant")]
    AssumptionViolated(Vec<i64>),

    #[error("parametrization is not proper: map degree {0}")]
    ImproperParametrization(usize),

    #[error("precondition failed: {0}")]
    Precondition(String),

    /// An internal consistency check failed. Should be unreachable.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::InvariantViolation(msg.into())
    }

    /// Process exit status used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_) | Error::Parse { .. } => 2,
            Error::AssumptionViolated(_) | Error::Precondition(_) => 3,
            Error::ImproperParametrization(_) => 4,
            Error::InvariantViolation(_) => 5,
        }
    }
}
