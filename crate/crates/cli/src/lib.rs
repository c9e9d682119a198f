//! Library half of the `specdist` command-line tool: polynomial selection,
//! report rendering, the verification suite and conductor sweeps.

pub mod range;
pub mod render;
pub mod select;
pub mod sweep;
pub mod verify;

use thiserror::Error;

pub use range::ConductorRange;
pub use select::PolySelector;
pub use sweep::{Format, SweepRow};

/// Process exit status for a verification or `--check` failure.
pub const EXIT_CHECK_FAILED: i32 = 1;
/// Process exit status for usage and all other errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] specdist::Error),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("check failed: {0}")]
    CheckFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::CheckFailed(_) => EXIT_CHECK_FAILED,
            _ => EXIT_USAGE,
        }
    }
}
