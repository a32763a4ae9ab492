//! Command layer: documents, reports and the verification commands.

pub mod commands;
pub mod document;
pub mod export;
pub mod report;

use germwork_core::algebra::Ring;
use germwork_core::{Axioms, Error};

pub use commands::{run, Command};
pub use document::{load, Document, Input, Object};
pub use report::{Check, Report, Status};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("schema: {0}")]
    Schema(String),
    #[error("{command} does not accept a {kind} document")]
    IncompatibleKind { command: &'static str, kind: &'static str },
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Dot,
}

#[derive(Clone, Debug)]
pub struct Options {
    pub ring: Ring,
    pub force: bool,
    pub seed: u64,
    pub axioms: Option<Axioms>,
    /// Random rounds per randomized property.
    pub rounds: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            ring: Ring::Q,
            force: false,
            seed: 0,
            axioms: None,
            rounds: 100,
        }
    }
}

/// Runs `f` on a dedicated pool of `threads` workers.
pub fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, CliError> {
    match threads {
        None => Ok(f()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| CliError::Usage(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}
