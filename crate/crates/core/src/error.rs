use thiserror::Error;

/// Errors raised while building or querying finite algebraic structures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("table violates an axiom: {0}")]
    AxiomViolation(String),

    #[error("subset is not an ideal: {0}")]
    InvalidIdeal(String),

    #[error("subset is not a submodule: {0}")]
    NotASubmodule(String),

    #[error("operands belong to different modules")]
    MixedModules,

    #[error("submodule must be proper")]
    NotProper,

    #[error("set must be nonempty")]
    EmptySet,

    #[error("size {size} exceeds the configured cap {cap}")]
    CapExceeded { size: usize, cap: usize },

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("unknown proposition `{0}`")]
    UnknownProposition(String),

    #[error("instance does not match the proposition signature: {0}")]
    SignatureMismatch(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
