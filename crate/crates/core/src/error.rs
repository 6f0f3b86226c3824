use std::io;

use thiserror::Error;

/// Errors produced by graph construction, the signed-graph machinery and the solvers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },

    #[error("{method} refuses n = {n} (cap {cap}); use branch-and-bound or raise the cap")]
    CapExceeded {
        method: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },

    #[error("malformed json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn io(path: impl Into<String>, source: io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit code used by the CLI for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidInput(_) | Error::Disconnected { .. } | Error::Json(_) => 2,
            Error::CapExceeded { .. } => 3,
            Error::Io { .. } => 5,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
