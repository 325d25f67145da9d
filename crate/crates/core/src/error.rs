use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{what} index {value} out of range 1..={max}")]
    OutOfRange { what: &'static str, value: u32, max: u32 },

    /// A choice parameter violates the precondition of an algorithm step.
    #[error("invalid choice at {step}: {reason}")]
    InvalidChoice { step: &'static str, reason: String },

    /// The incidence data does not have the shape the algorithms rely on.
    #[error("structure error: {0}")]
    Structure(String),

    #[error("cannot parse `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("line {line}: {reason}")]
    RayFile { line: usize, reason: String },

    #[error("invalid record: {0}")]
    Record(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
