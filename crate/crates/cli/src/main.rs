mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;
use rmdesign_core::Error;

use crate::args::Cli;

/// Exit status of a finished command.
pub enum Outcome {
    Ok,
    /// A check ran and did not hold.
    Failed,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Verification(_) => 1,
        Error::Input(_) | Error::Parse(_) => 2,
        Error::Capacity(_) => 3,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.global.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("rmdesign: cannot configure {n} threads: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::run(&cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("rmdesign: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
