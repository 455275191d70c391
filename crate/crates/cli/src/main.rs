use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use hopfian_cli::args::Cli;
use hopfian_cli::run;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(&cli);
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.status as u8)
}
