use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use golden_pascal::{GoldenConstants, GoldenNumber};

#[derive(Debug, Parser)]
#[command(
    name = "golden-pascal",
    version,
    about = "Exact verification of the golden-ratio eigenstructure of the binomial matrix C(i-1, n-j)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check every identity of the eigenpair derivation for each order
    Verify {
        /// Order or inclusive range of orders, e.g. `7` or `1..30`
        #[arg(long = "n", default_value = "1..30")]
        orders: OrderRange,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print exact eigenvalues and the eigenvector matrix
    Spectrum {
        #[arg(long = "n")]
        orders: OrderRange,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print R^m computed through the spectral decomposition
    Power {
        #[arg(long = "n")]
        orders: OrderRange,
        #[arg(long)]
        m: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check the field identities relating φ and ψ
    Identities {
        #[command(flatten)]
        output: OutputArgs,
    },
}

impl Command {
    pub fn output(&self) -> &OutputArgs {
        match self {
            Command::Verify { output, .. }
            | Command::Spectrum { output, .. }
            | Command::Power { output, .. }
            | Command::Identities { output } => output,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
    /// Write to this file instead of standard output
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Replace one constant by a wrong value (fault injection for tests)
    #[arg(long = "corrupt-constant", value_enum, hide = true)]
    pub corrupt: Option<Corruption>,
}

impl OutputArgs {
    pub fn constants(&self) -> GoldenConstants {
        let mut consts = GoldenConstants::default();
        match self.corrupt {
            None => {}
            Some(Corruption::A) => consts.a += GoldenNumber::from(1),
            Some(Corruption::B) => consts.b += GoldenNumber::from(1),
        }
        consts
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Corruption {
    A,
    B,
}

/// Inclusive range of matrix orders, written `A` or `A..B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderRange {
    pub min: usize,
    pub max: usize,
}

impl OrderRange {
    pub fn iter(&self) -> std::ops::RangeInclusive<usize> {
        self.min..=self.max
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderRangeError(String);

impl fmt::Display for OrderRangeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for OrderRangeError {}

impl FromStr for OrderRange {
    type Err = OrderRangeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| OrderRangeError(format!("`{t}` is not a nonnegative integer")))
        };
        let (min, max) = match s.split_once("..") {
            Some((lo, hi)) => (parse(lo)?, parse(hi)?),
            None => {
                let n = parse(s)?;
                (n, n)
            }
        };
        if min == 0 {
            return Err(OrderRangeError("matrix order must be at least 1".into()));
        }
        if min > max {
            return Err(OrderRangeError(format!("empty range {min}..{max}")));
        }
        Ok(OrderRange { min, max })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_ranges() {
        assert_eq!("3".parse::<OrderRange>().unwrap(), OrderRange { min: 3, max: 3 });
        assert_eq!("1..30".parse::<OrderRange>().unwrap(), OrderRange { min: 1, max: 30 });
        assert!("0..5".parse::<OrderRange>().is_err());
        assert!("0".parse::<OrderRange>().is_err());
        assert!("5..2".parse::<OrderRange>().is_err());
        assert!("1..".parse::<OrderRange>().is_err());
        assert!("x".parse::<OrderRange>().is_err());
        assert!("-1..3".parse::<OrderRange>().is_err());
    }

    #[test]
    fn corrupted_constants_differ_from_defaults() {
        let mut args = OutputArgs {
            format: Format::Pretty,
            out: None,
            corrupt: None,
        };
        assert_eq!(args.constants(), GoldenConstants::default());
        for c in [Corruption::A, Corruption::B] {
            args.corrupt = Some(c);
            assert_ne!(args.constants(), GoldenConstants::default());
        }
    }
}
