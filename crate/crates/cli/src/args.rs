use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cspkit::Params;

#[derive(Parser, Debug)]
#[command(name = "cspkit", version, about = "Enumerate Catalan objects and verify cyclic sieving triples")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Write to this file instead of standard output.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,

    /// Worker threads for verification; defaults to the number of cores.
    #[arg(long, env = "CSPKIT_THREADS", global = true)]
    pub threads: Option<usize>,

    /// Exit with status 1 on any mismatch, including expected ones in negative controls.
    #[arg(long, global = true)]
    pub strict: bool,

    /// Add a metadata block with wall times.
    #[arg(long, global = true)]
    pub timings: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug, Clone, Default)]
pub struct ParamArgs {
    #[arg(long)]
    pub n: Option<i64>,
    #[arg(long)]
    pub k: Option<i64>,
    #[arg(long)]
    pub s: Option<i64>,
    #[arg(long)]
    pub e: Option<i64>,
    #[arg(long)]
    pub l: Option<i64>,
    #[arg(long)]
    pub r: Option<i64>,
}

impl ParamArgs {
    pub fn params(&self) -> Params {
        Params { n: self.n, k: self.k, s: self.s, e: self.e, l: self.l, r: self.r }
    }

    /// True when every parameter given on the command line agrees with `p`.
    pub fn admits(&self, p: &Params) -> bool {
        let given = [(self.k, p.k), (self.s, p.s), (self.e, p.e), (self.l, p.l), (self.r, p.r)];
        given.iter().all(|(want, have)| want.is_none() || want == have)
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a named q-polynomial.
    Poly {
        id: String,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Stream the objects of a family, one per line.
    Enumerate {
        family: String,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Distribution of a statistic over a family.
    Stat {
        family: String,
        stat: String,
        #[command(flatten)]
        params: ParamArgs,
        /// Added to every statistic value.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        shift: i64,
    },
    /// Apply a bijection to JSON objects read from standard input.
    Biject {
        id: String,
        #[arg(long)]
        inverse: bool,
        /// Symmetry period for BW_TO_NCM_SYM.
        #[arg(long)]
        period: Option<usize>,
        /// Number of vertices for BW_TO_NCM_SYM; defaults to twice the period.
        #[arg(long)]
        vertices: Option<usize>,
    },
    /// Orbit sizes of an action on a family.
    Orbits {
        family: String,
        action: String,
        /// Declared order of the generator.
        #[arg(long)]
        order: usize,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Verify one triple for a range of n.
    Verify {
        triple: String,
        /// Inclusive range such as `2..8`, `2..=8` or `5`.
        #[arg(long, value_parser = parse_range)]
        n_range: RangeInclusive<usize>,
        /// Restrict to these secondary parameters.
        #[command(flatten)]
        params: ParamArgs,
        /// Check every exponent up to the order, not only divisors.
        #[arg(long)]
        full_sweep: bool,
    },
    /// Verify every registered triple up to the shipped bounds.
    VerifyAll {
        /// Cap every triple at this n.
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        full_sweep: bool,
    },
    /// List registered identifiers.
    List {
        #[arg(value_enum)]
        what: ListKind,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ListKind {
    Triples,
    Families,
    Stats,
    Actions,
    Bijections,
}

pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("`{t}`: {e}"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok(a..=b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..8").unwrap(), 2..=8);
        assert_eq!(parse_range("2..=8").unwrap(), 2..=8);
        assert_eq!(parse_range("5").unwrap(), 5..=5);
        assert!(parse_range("8..2").is_err());
        assert!(parse_range("a..2").is_err());
    }
}
