use std::path::Path;

use thiserror::Error;

use crate::{EXIT_INCONCLUSIVE, EXIT_INPUT};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    /// Malformed or ill-typed JSON, with the position serde reported.
    #[error("{path}:{line}:{column}: {message}")]
    Json { path: String, line: usize, column: usize, message: String },
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Budget(String),
    /// Nothing could decide the question, e.g. no engine applies.
    #[error("{0}")]
    Unavailable(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Budget(_) | CliError::Unavailable(_) => EXIT_INCONCLUSIVE,
            _ => EXIT_INPUT,
        }
    }

    pub fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io { path: path.display().to_string(), source }
    }

    pub fn json(path: &Path, e: serde_json::Error) -> Self {
        let text = e.to_string();
        // serde appends " at line L column C"; the position goes up front.
        let message = match text.rfind(" at line ") {
            Some(i) => text[..i].to_string(),
            None => text,
        };
        CliError::Json { path: path.display().to_string(), line: e.line(), column: e.column(), message }
    }
}
