use thiserror::Error;

use crate::soft_space::CoveringReport;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error in {context}: {message}")]
    Syntax { context: String, message: String },

    #[error("invalid interval [{lo},{hi}]: {reason}")]
    InvalidInterval {
        lo: String,
        hi: String,
        reason: &'static str,
    },

    #[error("cannot take the meet or join of an empty family of interval values")]
    EmptyFamily,

    #[error("universe is empty")]
    EmptyUniverse,

    #[error("parameter set is empty")]
    EmptyParameters,

    #[error("duplicate {kind} identifier {id:?}")]
    DuplicateIdentifier { kind: &'static str, id: String },

    #[error("operands live over different universes")]
    UniverseMismatch,

    #[error("unknown object {0:?}")]
    UnknownObject(String),

    #[error("no grade given for object {0:?}")]
    MissingGrade(String),

    #[error("unknown parameter {0:?}")]
    UnknownParameter(String),

    #[error("incomplete membership table: missing cell ({parameter}, {object})")]
    IncompleteTable { parameter: String, object: String },

    #[error("not a beta-covering: {} object(s) fail", .0.failures.len())]
    NotACovering(CoveringReport),

    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),

    #[error("no beta-covering found after {0} rejected samples")]
    RejectionBudgetExceeded(usize),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
