mod args;
mod bench;
mod compute;
mod gen;
mod input;
mod pipeline;
mod reduce;
mod verify;

use std::io::Write;
use std::process::ExitCode;

use anyhow::Result;
use clap::Parser;
use pathcat_core::json::emit_complex;

use args::{Cli, Command};

const MISMATCH: u8 = 1;
const INVALID: u8 = 2;

fn print(text: &str) -> Result<()> {
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes())?;
    if !text.ends_with('\n') {
        out.write_all(b"\n")?;
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let g = &cli.global;
    match &cli.command {
        Command::Compute(a) => print(&serde_json::to_string(&compute::run(a, g)?)?)?,
        Command::Gen { family } => print(&emit_complex(&gen::run(family)?))?,
        Command::Reduce(a) => print(&serde_json::to_string(&reduce::run(a, g)?)?)?,
        Command::Bench(a) => print(&bench::run(a, g)?)?,
        Command::Verify(a) => {
            let (report, ok) = verify::run(a, g)?;
            print(&serde_json::to_string(&report)?)?;
            if !ok {
                return Ok(ExitCode::from(MISMATCH));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(INVALID)
        }
    }
}
