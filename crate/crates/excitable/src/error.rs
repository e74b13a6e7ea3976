use std::path::PathBuf;

use thiserror::Error;

pub type CliResult<T> = Result<T, CliError>;

/// Process exit codes.
pub const EXIT_OK: u8 = 0;
pub const EXIT_CONFIG: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;
pub const EXIT_ORACLE: u8 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{source_name} line {line}: {message}")]
    Parse { source_name: String, line: usize, message: String },
    #[error(transparent)]
    Core(#[from] excitable_core::Error),
    /// A step or node budget ran out. Partial results were already written.
    #[error("budget exceeded: {0}")]
    Budget(String),
    /// Two computations that must agree exactly did not.
    #[error("oracle mismatch: {0}")]
    OracleMismatch(String),
}

impl CliError {
    pub fn config(msg: impl Into<String>) -> Self {
        CliError::Config(msg.into())
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io { path: path.into(), source }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Budget(_) => EXIT_BUDGET,
            CliError::Core(
                excitable_core::Error::StepBudgetExceeded { .. } | excitable_core::Error::NodeBudgetExceeded { .. },
            ) => EXIT_BUDGET,
            CliError::OracleMismatch(_) => EXIT_ORACLE,
            _ => EXIT_CONFIG,
        }
    }
}
