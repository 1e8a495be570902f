use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("label {label} out of range (ground set has {n} labels)")]
    LabelOutOfRange { label: usize, n: usize },

    #[error("count {count} at label {label} exceeds height {height}")]
    CountOutOfRange {
        label: usize,
        count: u32,
        height: u32,
    },

    #[error("order relations contain a cycle through label {0}")]
    Cycle(usize),

    #[error("not an ideal: {0}")]
    NotAnIdeal(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("invalid vector: {0}")]
    InvalidVector(String),

    #[error("enumeration of {required} items exceeds the cap of {cap}")]
    CapExceeded { required: u128, cap: usize },

    #[error("precondition not met: {0}")]
    Precondition(String),

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("malformed input: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Coarse classification used by front ends to pick an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Parse,
    Precondition,
    Cap,
    Invariant,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::LabelOutOfRange { .. }
            | Error::CountOutOfRange { .. }
            | Error::Cycle(_)
            | Error::NotAnIdeal(_)
            | Error::InvalidConfig(_)
            | Error::InvalidVector(_)
            | Error::Parse(_)
            | Error::Json(_) => ErrorKind::Parse,
            Error::ShapeMismatch(_) | Error::Precondition(_) => ErrorKind::Precondition,
            Error::CapExceeded { .. } => ErrorKind::Cap,
            Error::InvariantViolation(_) => ErrorKind::Invariant,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
