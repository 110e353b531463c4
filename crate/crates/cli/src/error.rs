use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{}: line {line}: {message}", path.display())]
    Parse {
        path: PathBuf,
        line: u64,
        message: String,
    },
    #[error("{}: line {line}: negative response", path.display())]
    NegativeResponse { path: PathBuf, line: u64 },
    #[error("{}: {source}", path.display())]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Core(#[from] lpfrontier::Error),
}

impl CliError {
    /// Line number for parse-type errors.
    pub fn line(&self) -> Option<u64> {
        match self {
            CliError::Parse { line, .. } | CliError::NegativeResponse { line, .. } => Some(*line),
            _ => None,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
