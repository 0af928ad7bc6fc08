use hylo_core::{AlgebraError, BoutonError, GameError, HfsError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HyloError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Game(#[from] GameError),
    #[error(transparent)]
    Hfs(#[from] HfsError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Bouton(#[from] BoutonError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    /// Bad flags or arguments; exit code 2.
    #[error("{0}")]
    Usage(String),
    /// A check that ran to completion and failed; exit code 1.
    #[error("{0}")]
    Failed(String),
}

impl HyloError {
    pub fn exit_code(&self) -> i32 {
        match self {
            HyloError::Usage(_) => 2,
            _ => 1,
        }
    }
}

pub type Result<T, E = HyloError> = std::result::Result<T, E>;
