// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An input lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Not enough distinct data for the requested fit.
    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: u64, message: String },

    /// Malformed data that has no meaningful line number.
    #[error("data error: {0}")]
    Data(String),

    #[error("usage error: {0}")]
    Usage(String),

    #[error("I/O error on {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// Another timing session is active in this process.
    #[error("timing harness busy: {0}")]
    Busy(String),

    #[error("model `{model}`: {source}")]
    Model {
        model: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn degenerate(msg: impl Into<String>) -> Self {
        Error::Degenerate(msg.into())
    }

    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Wraps the error with the name of the model that produced it.
    pub fn in_model(self, model: impl Into<String>) -> Self {
        Error::Model {
            model: model.into(),
            source: Box::new(self),
        }
    }

    /// Process exit code used by the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) | Error::Busy(_) => 2,
            Error::Parse { .. } | Error::Data(_) => 3,
            Error::Domain(_) | Error::Degenerate(_) => 4,
            Error::Io { .. } => 5,
            Error::Model { source, .. } => source.exit_code(),
        }
    }
}
