use thiserror::Error;

/// Everything that keeps a file from being checked. All of these exit
/// with status 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot access {path}: {msg}")]
    Io { path: String, msg: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("out of bounds: {0}")]
    OutOfBounds(String),
}

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
