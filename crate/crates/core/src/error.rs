use thiserror::Error;

/// Everything that can go wrong inside the engine.
///
/// Certificate failures are not errors: verifiers return reports that carry
/// pass/fail per clause. Errors are reserved for malformed input, violated
/// preconditions and exhausted resource budgets.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("registry mismatch: {0}")]
    RegistryMismatch(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("size cap exceeded: {0}")]
    SizeCap(String),
}

impl Error {
    pub fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::ResourceLimit(_) | Error::SizeCap(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
