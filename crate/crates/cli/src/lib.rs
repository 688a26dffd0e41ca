//! Support code for the `lapimm` binary: error-to-exit-code mapping, the
//! verification suite and its configuration.

pub mod config;
pub mod suite;

use std::path::PathBuf;

use lapimm::ErrorKind;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

/// Environment variable that overrides the output directory.
pub const OUTPUT_DIR_ENV: &str = "LAPIMM_OUTPUT_DIR";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] lapimm::Error),

    #[error("{}: {source}", path.display())]
    Input { path: PathBuf, source: lapimm::Error },

    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },

    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },

    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        let kind = match self {
            CliError::Core(e) | CliError::Input { source: e, .. } => e.kind(),
            _ => ErrorKind::InvalidInput,
        };
        match kind {
            ErrorKind::Capacity => EXIT_CAPACITY,
            _ => EXIT_INPUT,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
