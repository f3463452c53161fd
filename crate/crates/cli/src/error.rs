//! Error type mapping every failure to its exit code: 1 for model, scenario,
//! and I/O problems, 2 for command-line usage problems.

use std::path::Path;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Model(#[from] atomarch::Error),
    #[error("scenario error: {0}")]
    Scenario(String),
    #[error("usage error: {0}")]
    Usage(String),
    #[error("cannot {action} {path}")]
    Io {
        action: &'static str,
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn scenario(message: impl Into<String>) -> Self {
        CliError::Scenario(message.into())
    }

    pub fn usage(message: impl Into<String>) -> Self {
        CliError::Usage(message.into())
    }

    pub fn io(action: &'static str, path: &Path, source: std::io::Error) -> Self {
        CliError::Io {
            action,
            path: path.display().to_string(),
            source,
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}
