use thiserror::Error;

/// Errors raised by ring, module and homology computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid ring specification: {0}")]
    Validation(String),

    #[error("{what} of size {size} exceeds the limit {limit}")]
    GuardExceeded {
        what: &'static str,
        size: u128,
        limit: u128,
    },

    #[error("ring axiom violated: {0}")]
    AxiomViolation(String),

    #[error("operation requires a local ring")]
    NonLocalRing,

    #[error("modules are defined over different rings")]
    RingMismatch,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    pub(crate) fn guard(what: &'static str, size: u128, limit: u128) -> Self {
        Error::GuardExceeded { what, size, limit }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
