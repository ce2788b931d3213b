//! Command-line surface.

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use pinnacles::admissible::parse_value_set;

/// Count, generate, and benchmark permutations with a prescribed pinnacle set.
#[derive(Debug, Parser)]
#[command(name = "pinnacle", version)]
pub struct Cli {
    /// Output format for results.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountMethod {
    /// Closed-form product formula.
    Formula,
    /// Filter the full symmetric group and count matches.
    Enumerate,
}

impl CountMethod {
    pub fn name(self) -> &'static str {
        match self {
            CountMethod::Formula => "formula",
            CountMethod::Enumerate => "enumerate",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenMethod {
    /// Filter the full symmetric group.
    Naive,
    /// Expand dual Foata-Strehl orbits of constructed representatives.
    Construct,
}

impl GenMethod {
    pub fn name(self) -> &'static str {
        match self {
            GenMethod::Naive => "naive",
            GenMethod::Construct => "construct",
        }
    }
}

/// Comma-separated value set; `none` or the empty string means the empty set.
#[derive(Debug, Clone)]
pub struct PinSet(pub Vec<u32>);

impl std::str::FromStr for PinSet {
    type Err = pinnacles::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "none" {
            return Ok(PinSet(Vec::new()));
        }
        parse_value_set(s).map(PinSet)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count the permutations of {1, .., n} whose pinnacle set is P.
    Count {
        #[arg(short)]
        n: usize,
        /// Pinnacle set, e.g. `4,8,11` (use `none` for the empty set).
        #[arg(short = 'P', long = "pinnacles", default_value = "none")]
        pinnacles: PinSet,
        #[arg(long, value_enum, default_value_t = CountMethod::Formula)]
        method: CountMethod,
    },
    /// Generate the permutations of {1, .., n} whose pinnacle set is P.
    Generate {
        #[arg(short)]
        n: usize,
        #[arg(short = 'P', long = "pinnacles", default_value = "none")]
        pinnacles: PinSet,
        #[arg(long, value_enum, default_value_t = GenMethod::Construct)]
        method: GenMethod,
        /// Emit in lexicographic order.
        #[arg(long)]
        sorted: bool,
    },
    /// List one FS-minimal representative per orbit with the orbit size.
    Orbits {
        #[arg(short)]
        n: usize,
        #[arg(short = 'P', long = "pinnacles", default_value = "none")]
        pinnacles: PinSet,
    },
    /// List the vale sets admissible alongside a pinnacle set.
    #[command(name = "vale-sets")]
    ValeSets {
        #[arg(short)]
        n: usize,
        #[arg(short = 'P', long = "pinnacles", default_value = "none")]
        pinnacles: PinSet,
    },
    /// Apply one generator of the Foata-Strehl action to a permutation.
    Act {
        /// The permutation, e.g. `6,5,3,4,1,2,7` or `6534127`.
        #[arg(long)]
        perm: String,
        /// The letter whose generator is applied.
        #[arg(short)]
        x: u32,
        /// Apply the dual generator (the default).
        #[arg(long, conflicts_with = "classic")]
        dual: bool,
        /// Apply the classical generator instead.
        #[arg(long)]
        classic: bool,
    },
    /// Time the constructive generator against the filtering scan.
    #[command(group(ArgGroup::new("scope").required(true).args(["pinnacles", "all"])))]
    Bench {
        #[arg(short)]
        n: usize,
        #[arg(short = 'P', long = "pinnacles")]
        pinnacles: Option<PinSet>,
        /// Benchmark every admissible pinnacle set for this n.
        #[arg(long)]
        all: bool,
        /// Timed samples per leg; the median is reported.
        #[arg(long, default_value_t = 3)]
        runs: usize,
    },
}
