//! Command-line front end for `diagcoinv-core`.
//!
//! Exit codes: 0 every check passed, 1 some check failed, 2 invalid input,
//! 3 a budget was exceeded, 4 internal or I/O error.

pub mod commands;
pub mod config;
pub mod output;
pub mod report;

use std::io::Write;

pub use config::{Cli, RunConfig};
pub use report::Report;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] diagcoinv_core::Error),
    #[error("cannot write report: {0}")]
    Io(#[from] std::io::Error),
    #[error("cannot serialise report: {0}")]
    Json(#[from] serde_json::Error),
    #[error("coefficient {0} does not fit in 128 bits")]
    Overflow(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        use diagcoinv_core::Error as E;
        match self {
            CliError::Core(
                E::BudgetExceeded { .. }
                | E::DegreeBudgetExceeded { .. }
                | E::IncompleteTable { .. },
            ) => 3,
            CliError::Core(
                E::InvalidType { .. } | E::InvalidArgument(_) | E::UnsupportedParameter(_),
            ) => 2,
            _ => 4,
        }
    }
}

/// Runs a parsed command line and writes the report; returns the exit code.
pub fn run(cli: Cli) -> u8 {
    match try_run(cli) {
        Ok(pass) => u8::from(!pass),
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn try_run(cli: Cli) -> Result<bool, CliError> {
    let cfg = RunConfig::from_cli(cli)?;
    let report = commands::execute(&cfg)?;
    let rendered = output::render(&report, cfg.format)?;
    match &cfg.out {
        Some(path) => std::fs::write(path, rendered)?,
        None => std::io::stdout().lock().write_all(rendered.as_bytes())?,
    }
    Ok(report.pass())
}
