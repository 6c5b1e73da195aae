use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use linarb::cli::{run, Cli, RunConfig};

fn main() -> ExitCode {
    let out = run(RunConfig::from_cli(Cli::parse()));
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
