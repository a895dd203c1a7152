use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An exact algorithm was asked to run beyond its guaranteed range.
    #[error("{what} supports at most {limit}, got {actual}")]
    Capability {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Two certificates contradict each other. This always signals a bug,
    /// never bad user input.
    #[error("certificate integrity violation: {0}")]
    Integrity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
