//! The `xramsey` command line: one subcommand per construction family.
//!
//! Exit codes: 0 success, 1 I/O or internal error, 2 configuration or usage
//! error, 3 verification failure (a witness, trace or decoder verdict did not
//! check out).

pub mod commands;
pub mod config;
pub mod setup;

use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use xramsey_core::colorings::Direction;

pub use commands::run;
pub use config::ExperimentConfig;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Config(String),
    Io(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => 2,
            CliError::Io(_) | CliError::Internal(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(m) => write!(f, "configuration error: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
            CliError::Internal(m) => write!(f, "error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    VerificationFailed,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::VerificationFailed => 3,
        }
    }
}

/// What a command produced: the report text and whether it checked out.
#[derive(Debug, Clone)]
pub struct Output {
    pub text: String,
    pub status: Status,
}

#[derive(Parser, Debug)]
#[command(name = "xramsey", version, about = "Ramsey experiments on exactly large sets")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Default, Clone)]
pub struct Common {
    /// TOML experiment config; flags override it.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Coloring name, e.g. dh, parity-of-min, c2, cn.
    #[arg(long, global = true)]
    pub coloring: Option<String>,
    /// Base oracle: `empty` or a set like `{0,3}`.
    #[arg(long, global = true)]
    pub oracle: Option<String>,
    #[arg(long, global = true, value_enum)]
    pub direction: Option<DirectionArg>,
    /// Level for `cn`.
    #[arg(long, global = true)]
    pub n: Option<u64>,
    /// Color for `constant`.
    #[arg(long, global = true)]
    pub value: Option<u64>,
    /// `interval:a..b`, `evens:a..b`, `odds:a..b` or `{a,b,...}`.
    #[arg(long, global = true)]
    pub universe: Option<String>,
    /// `curated16` or `standard`.
    #[arg(long, global = true)]
    pub numbering: Option<String>,
    /// Program-universe file (one program per `---` block).
    #[arg(long, global = true)]
    pub programs: Option<PathBuf>,
    /// Ground-truth cutoff; defaults to $XRAMSEY_CUTOFF or 1000000.
    #[arg(long, global = true)]
    pub cutoff: Option<u64>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum DirectionArg {
    Capture,
    Literal,
}

impl From<DirectionArg> for Direction {
    fn from(d: DirectionArg) -> Self {
        match d {
            DirectionArg::Capture => Direction::Capture,
            DirectionArg::Literal => Direction::Literal,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Chain,
    Homogeneous,
    MinHomogeneous,
    Extract,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Homogeneous,
    MinHomogeneous,
    Chain,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReduceDirection {
    /// Min-homogeneous witness for a regressive coloring from a homogeneous set of its transform.
    KmToRt,
    /// Homogeneous subset of a min-homogeneous set.
    RtViaKm,
}

#[derive(Args, Debug, Default, Clone)]
pub struct SetSource {
    /// JSON witness record (as written by `search`) or a bare witness.
    #[arg(long)]
    pub witness: Option<PathBuf>,
    /// Explicit set, e.g. `{2,3,1000}`.
    #[arg(long)]
    pub set: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List (or count) the exactly large subsets of the universe.
    Enumerate {
        #[arg(long)]
        count: bool,
    },
    /// Color one set, or write a CSV trace for the whole universe.
    Color {
        #[arg(long)]
        set: Option<String>,
        /// Only this many seeded random sets.
        #[arg(long)]
        sample: Option<usize>,
    },
    /// Search the universe for a witness and re-verify it.
    Search {
        #[arg(long, value_enum)]
        mode: Option<Mode>,
        /// Witness size for homogeneous and min-homogeneous search; target for extract.
        #[arg(long)]
        size: Option<usize>,
        /// Start the chain here instead of at min(U).
        #[arg(long)]
        a0: Option<u64>,
    },
    /// Re-check a witness, a set or a coloring trace.
    Verify {
        #[command(flatten)]
        source: SetSource,
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
        /// CSV trace with `set,color` rows.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Read jump information back out of a homogeneous set.
    Decode {
        #[command(flatten)]
        source: SetSource,
        /// `i,j` asks whether j is in the i-th jump; `eH` names the HALT program.
        #[arg(long)]
        query: Vec<String>,
        /// Rebuild X_0..X_{n-1} from a dh-homogeneous set using h = 2n.
        #[arg(long)]
        reconstruct: Option<u64>,
    },
    /// Translate between regressive and ordinary homogeneity.
    Reduce {
        #[arg(value_enum, value_name = "DIRECTION")]
        which: ReduceDirection,
        #[command(flatten)]
        source: SetSource,
    },
}
