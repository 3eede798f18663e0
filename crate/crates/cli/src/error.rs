use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("PARSE_ERROR at line {line}, column {column}: {msg}")]
    Parse {
        line: usize,
        column: usize,
        msg: String,
    },
    #[error("VALIDATION_ERROR: {0}")]
    Validation(String),
    #[error("GUARD_EXCEEDED: {0}")]
    Guard(String),
    #[error("USAGE: {0}")]
    Usage(String),
    #[error("IO_ERROR: {0}")]
    Io(String),
    #[error("{0}")]
    Core(#[from] abc_core::Error),
}
