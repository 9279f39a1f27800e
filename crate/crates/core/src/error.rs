use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error on line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("duplicate edge between {u} and {v} (line {line})")]
    DuplicateEdge { u: u64, v: u64, line: usize },

    #[error("self-loop at vertex {v} (line {line})")]
    SelfLoop { v: u64, line: usize },

    #[error("edge weight must be finite and positive, got {weight} (line {line})")]
    NonPositiveWeight { weight: f64, line: usize },

    #[error("vertex {0} out of range")]
    InvalidVertex(usize),

    #[error("edge id {0} is not a live edge of this graph")]
    InvalidEdge(usize),

    #[error("source and target must differ (both {0})")]
    DegeneratePair(usize),

    #[error("vertices {s} and {t} are disconnected")]
    Disconnected { s: usize, t: usize },

    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("linear solver failed to converge: {0}")]
    SolverFailure(String),

    #[error("instance too large for exhaustive check: {0}")]
    InstanceTooLarge(String),

    #[error("precondition not verified: {0}")]
    ConditionNotVerified(String),

    #[error("generator exhausted {attempts} attempts: {reason}")]
    GeneratorExhausted { attempts: usize, reason: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid_parameter(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}
