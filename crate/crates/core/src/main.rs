use std::process::ExitCode;

use clap::Parser;
use sap_lab::cli::{run, RunConfig};

fn main() -> ExitCode {
    let config = RunConfig::parse();
    match run(&config) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("saplab: {e}");
            ExitCode::from(1)
        }
    }
}
