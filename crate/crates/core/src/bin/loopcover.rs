use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use loopcover::cli::{run, Cli, Command};

fn main() -> ExitCode {
    let cmd: Command = Cli::parse().into();
    let outcome = run(&cmd);
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
