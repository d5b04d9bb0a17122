use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    ExitCode::from(diagcoinv::run(diagcoinv::Cli::parse()))
}
