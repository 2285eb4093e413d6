use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use mckay_cli::args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command: Vec<String> = std::env::args().skip(1).collect();
    match mckay_cli::run(&cli, command) {
        Ok(report) => {
            let text = if cli.summary {
                report.summary()
            } else {
                report.to_json() + "\n"
            };
            // A closed pipe (e.g. `| head`) is not an error.
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            ExitCode::from(mckay_cli::exit_code(&report) as u8)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
