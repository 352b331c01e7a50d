use std::path::PathBuf;
use thiserror::Error;

/// Errors of the sweep driver, each mapped to a process exit code.
#[derive(Debug, Error)]
pub enum SweepError {
    /// Invalid configuration; carries every violated constraint.
    #[error("invalid configuration:\n  {}", .0.join("\n  "))]
    Config(Vec<String>),

    /// Bad command-line usage or unusable input data.
    #[error("{0}")]
    Usage(String),

    /// A pipeline computation failed.
    #[error("numerical failure: {0}")]
    Numerical(#[from] tritangle_core::Error),

    /// File I/O failed; the path is part of the message.
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl SweepError {
    /// 2 for configuration/usage problems, 3 for numerical failures,
    /// 4 for I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            SweepError::Config(_) | SweepError::Usage(_) => 2,
            SweepError::Numerical(_) => 3,
            SweepError::Io { .. } => 4,
        }
    }

    pub fn io(path: impl Into<PathBuf>) -> impl FnOnce(std::io::Error) -> SweepError {
        let path = path.into();
        move |source| SweepError::Io { path, source }
    }
}

pub type Result<T> = std::result::Result<T, SweepError>;
