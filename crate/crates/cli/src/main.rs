use clap::Parser;
use e510wb_cli::args::Cli;
use e510wb_cli::{run_suite, write_report, CliError};
use std::process::ExitCode;

fn fail(e: CliError) -> ExitCode {
    eprintln!("e510wb: {}", e);
    ExitCode::from(e.exit_code())
}

fn main() -> ExitCode {
    let (config, format, out) = match Cli::parse().into_config() {
        Ok(x) => x,
        Err(e) => return fail(e),
    };
    let report = match run_suite(&config) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    if let Err(e) = write_report(&report, format, out.as_deref()) {
        return fail(e);
    }
    for c in report.failed_checks() {
        eprintln!("FAIL {}", c.name);
    }
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
