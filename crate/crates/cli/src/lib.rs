//! Command-line front end for `golden-pascal`.
//!
//! Exit status: 0 when every requested check passes, 1 on a failed check,
//! 2 on usage or I/O errors.

pub mod args;
mod render;

use std::io::Write;

use anyhow::Result;
use golden_pascal::{Eigensystem, GoldenConstants, IntMatrix};
use rayon::prelude::*;

pub use args::{Cli, Command, Corruption, Format, OrderRange, OutputArgs};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
}

impl Outcome {
    fn from_pass(pass: bool) -> Self {
        if pass {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }

    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Pass => 0,
            Outcome::Fail => 1,
        }
    }
}

/// Runs one subcommand, writing its report stream to `out`.
pub fn run(command: &Command, out: &mut dyn Write) -> Result<Outcome> {
    let output = command.output();
    let consts = output.constants();
    match command {
        Command::Verify { orders, .. } => {
            // Orders are independent; collect keeps them in ascending order.
            let reports = orders
                .iter()
                .into_par_iter()
                .map(|n| Ok(Eigensystem::with_constants(n, consts.clone())?.verify()))
                .collect::<Result<Vec<_>>>()?;
            render::verify(&reports, output.format, out)?;
            Ok(Outcome::from_pass(reports.iter().all(|r| r.pass)))
        }
        Command::Spectrum { orders, .. } => {
            let spectra = orders
                .iter()
                .into_par_iter()
                .map(|n| Ok(Eigensystem::with_constants(n, consts.clone())?.spectrum()?))
                .collect::<Result<Vec<_>>>()?;
            render::spectrum(&spectra, output.format, out)?;
            Ok(Outcome::Pass)
        }
        Command::Power { orders, m, .. } => {
            let results: Vec<(usize, golden_pascal::Result<IntMatrix>)> = orders
                .iter()
                .into_par_iter()
                .map(|n| (n, power(n, *m, &consts)))
                .collect();
            let mut pass = true;
            let mut powers = Vec::with_capacity(results.len());
            for (n, result) in results {
                match result {
                    Ok(p) => powers.push((n, p)),
                    Err(e) => {
                        eprintln!("n={n}: {e}");
                        pass = false;
                    }
                }
            }
            render::power(&powers, *m, output.format, out)?;
            Ok(Outcome::from_pass(pass))
        }
        Command::Identities { .. } => {
            let report = consts.identities();
            render::identities(&report, output.format, out)?;
            Ok(Outcome::from_pass(report.pass))
        }
    }
}

fn power(n: usize, m: u32, consts: &GoldenConstants) -> golden_pascal::Result<IntMatrix> {
    Eigensystem::with_constants(n, consts.clone())?.power(m)
}
