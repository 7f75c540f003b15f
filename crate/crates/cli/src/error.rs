use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] chirality_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {message}")]
    Input { path: PathBuf, message: String },
    #[error("{0}")]
    Usage(String),
    #[error("failed to write output: {0}")]
    Output(#[from] std::io::Error),
    #[error("thread pool: {0}")]
    Threads(String),
}

pub type CliResult<T> = std::result::Result<T, CliError>;
