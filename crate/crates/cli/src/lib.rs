//! Command-line front end for the `mckay-core` engine: fixtures, sheets,
//! triangulations and a property suite, reported as sorted-key JSON.

pub mod args;
pub mod commands;
pub mod error;
pub mod parse;
pub mod random;
pub mod report;
pub mod suite;

use std::time::Instant;

use args::{Cli, Command, VerifyArgs};
use error::{exit, CliError};
use report::RunReport;

pub fn run_verify(args: &VerifyArgs, command: Vec<String>) -> Result<RunReport, CliError> {
    let mut report = RunReport::new(command, &[]);
    let checks = suite::run_suite(args)?;
    report.result("seed", serde_json::json!(args.seed));
    report.result(
        "checks_run",
        serde_json::json!(checks.iter().map(|c| c.name.clone()).collect::<Vec<_>>()),
    );
    for c in checks {
        report.check(c);
    }
    Ok(report)
}

/// Runs one parsed command line; `command` is echoed into the report.
pub fn run(cli: &Cli, command: Vec<String>) -> Result<RunReport, CliError> {
    let start = Instant::now();
    let mut report = match &cli.command {
        Command::Group(a) => commands::run_group(a, command),
        Command::Toric(a) => commands::run_toric(a, command),
        Command::Orbifold(a) => commands::run_orbifold(a, command),
        Command::Verify(a) => run_verify(a, command),
    }?;
    report.wall_time = start.elapsed();
    Ok(report)
}

/// Exit code for a finished report.
pub fn exit_code(report: &RunReport) -> i32 {
    if report.passed() {
        exit::OK
    } else {
        exit::PROPERTY_FAILURE
    }
}
