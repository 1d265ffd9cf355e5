//! Sweep driver, report writers and trace dumps behind the `qnarayana`
//! command-line tool.

pub mod output;
pub mod report;
pub mod sweep;

use thiserror::Error;

pub use report::{emit_report, Entry, Report, ReportFormat, Summary};
pub use sweep::{default_f_suite, run_sweep, IntRange, JMode, SweepSpec};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Core(#[from] qnarayana::Error),
    #[error("{0}")]
    Usage(String),
}
