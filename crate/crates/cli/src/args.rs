use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(
    name = "ccr",
    version,
    about = "Complementarity relations, entanglement monotones and convex roofs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write output here instead of standard output
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print every measure of a state file
    Compute(ComputeArgs),
    /// Check complementarity relations on a state file or sampled states
    Verify(SampleArgs),
    /// One CSV row per sampled state and pair
    Sweep(SampleArgs),
    /// Convex-roof estimate of a pure-state monotone
    Roof(RoofArgs),
    /// Audit measures against the admissibility criteria
    Criteria(CriteriaArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

/// `d` or `dAxdB`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Dims {
    Single(usize),
    Bipartite(usize, usize),
}

impl FromStr for Dims {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad dimension '{t}'"));
        let dims = match s.split_once(['x', 'X']) {
            Some((a, b)) => Dims::Bipartite(parse(a)?, parse(b)?),
            None => Dims::Single(parse(s)?),
        };
        let too_small = match dims {
            Dims::Single(d) => d < 2,
            Dims::Bipartite(a, b) => a < 2 || b < 1,
        };
        if too_small {
            return Err(format!("dimensions '{s}' are too small"));
        }
        Ok(dims)
    }
}

impl fmt::Display for Dims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dims::Single(d) => write!(f, "{d}"),
            Dims::Bipartite(a, b) => write!(f, "{a}x{b}"),
        }
    }
}

impl Serialize for Dims {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Args, Debug, Clone)]
pub struct ComputeArgs {
    /// State file
    pub input: PathBuf,

    /// Also print monotones divided by their bound
    #[arg(long)]
    pub normalized: bool,
}

#[derive(Args, Debug, Clone)]
pub struct SampleArgs {
    /// State file; sampled states are used when absent
    pub input: Option<PathBuf>,

    /// Pair names, comma separated (default: all)
    #[arg(long, value_delimiter = ',')]
    pub pair: Vec<String>,

    /// `d` for density matrices, `dAxdB` for bipartite pure states
    #[arg(long, default_value = "2")]
    pub dims: Dims,

    /// Rank of sampled density matrices (default: full)
    #[arg(long)]
    pub rank: Option<usize>,

    /// Number of sampled states
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: u64,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug, Clone)]
pub struct RoofArgs {
    /// State file; a sampled state is used when absent
    pub input: Option<PathBuf>,

    /// Monotone name (s_vn, s_l, w_l1, w_wy) or a pair name
    #[arg(long, default_value = "s_vn")]
    pub monotone: String,

    /// Bipartition `dAxdB` of the state
    #[arg(long)]
    pub dims: Option<Dims>,

    /// Rank of a sampled state (default: full)
    #[arg(long)]
    pub rank: Option<usize>,

    /// Roof configuration as inline JSON or a path to a JSON file
    #[arg(long)]
    pub config: Option<String>,

    /// Ensemble size m (default: rank²)
    #[arg(long)]
    pub ensemble_size: Option<usize>,

    #[arg(long)]
    pub restarts: Option<usize>,

    #[arg(long)]
    pub max_iters: Option<usize>,

    /// Initial step angle
    #[arg(long)]
    pub step: Option<f64>,

    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Args, Debug, Clone)]
pub struct CriteriaArgs {
    /// Pair names, comma separated
    #[arg(long, value_delimiter = ',')]
    pub pair: Vec<String>,

    /// Measure names, comma separated (built-ins or test doubles)
    #[arg(long, value_delimiter = ',')]
    pub measure: Vec<String>,

    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(2..))]
    pub dim: u64,

    #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: u64,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dims_parse() {
        assert_eq!("3".parse::<Dims>().unwrap(), Dims::Single(3));
        assert_eq!("2x3".parse::<Dims>().unwrap(), Dims::Bipartite(2, 3));
        assert!("1".parse::<Dims>().is_err());
        assert!("2xq".parse::<Dims>().is_err());
        assert_eq!(Dims::Bipartite(4, 2).to_string(), "4x2");
    }
}
