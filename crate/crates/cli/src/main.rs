use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use anyhow::Context;
use clap::Parser;
use golden_pascal_cli::{run, Cli, Outcome};

fn execute(cli: &Cli) -> anyhow::Result<Outcome> {
    match &cli.command.output().out {
        Some(path) => {
            let file = File::create(path)
                .with_context(|| format!("cannot create {}", path.display()))?;
            let mut out = BufWriter::new(file);
            let outcome = run(&cli.command, &mut out)?;
            out.flush()?;
            Ok(outcome)
        }
        None => {
            let mut out = io::stdout().lock();
            let outcome = run(&cli.command, &mut out)?;
            out.flush()?;
            Ok(outcome)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(outcome) => ExitCode::from(outcome.exit_code()),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
