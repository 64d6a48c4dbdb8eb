use std::path::PathBuf;

use thiserror::Error;

/// Exit status for successful runs and passing verification.
pub const EXIT_OK: i32 = 0;
/// Exit status for unexpected internal failures.
pub const EXIT_INTERNAL: i32 = 1;
/// Exit status for malformed input or unknown names.
pub const EXIT_INPUT: i32 = 2;
/// Exit status when a closure or work cap stops the computation.
pub const EXIT_RESOURCE: i32 = 3;
/// Exit status when catalog verification finds a mismatch.
pub const EXIT_VERIFY: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}:{line}:{column}: {message}")]
    Parse { path: PathBuf, line: usize, column: usize, message: String },

    #[error("{path}: {message}")]
    Invalid { path: PathBuf, message: String },

    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },

    #[error("cache error in {path}: {message}")]
    Cache { path: PathBuf, message: String },

    #[error("{0}")]
    Core(#[from] excq_core::Error),

    #[error("{failed} of {total} catalog entries failed verification")]
    VerificationFailed { failed: usize, total: usize },

    #[error("cannot serialize output: {0}")]
    Serialize(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Invalid { .. } | CliError::Read { .. } => EXIT_INPUT,
            CliError::Core(e) if e.is_resource_cap() => EXIT_RESOURCE,
            CliError::Core(e) => match e {
                excq_core::Error::InternalArithmetic(_) | excq_core::Error::CatalogConstruction(_) => EXIT_INTERNAL,
                _ => EXIT_INPUT,
            },
            CliError::VerificationFailed { .. } => EXIT_VERIFY,
            CliError::Cache { .. } | CliError::Serialize(_) => EXIT_INTERNAL,
        }
    }

    pub fn code(&self) -> &'static str {
        match self {
            CliError::Parse { .. } => "parse-error",
            CliError::Invalid { .. } => "invalid-input",
            CliError::Read { .. } => "io-error",
            CliError::Cache { .. } => "cache-error",
            CliError::Core(e) => e.code(),
            CliError::VerificationFailed { .. } => "verification-failed",
            CliError::Serialize(_) => "serialize-error",
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
