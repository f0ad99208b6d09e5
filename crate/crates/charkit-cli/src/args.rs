//! Argument definitions.

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "charkit",
    about = "Exact character values of classical-group and G2 representations at order-2 elements",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate one character value by the closed form and/or the oracle.
    Eval(EvalArgs),
    /// Sweep the closed forms against the oracle and report matches.
    Verify(VerifyArgs),
    /// Emit a character-value table.
    Table(TableArgs),
    /// Print the Weyl dimension of a highest-weight representation.
    Dim(WeightArgs),
    /// Print the parity split of lambda + rho.
    Eta(WeightArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Closed,
    Oracle,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvalFormat {
    Text,
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    /// Group family: gl, sp, so_even, so_odd, g2.
    #[arg(long)]
    pub group: String,
    /// Rank n (GL(n), Sp(2n), SO(2n), SO(2n+1)). Ignored for g2.
    #[arg(long)]
    pub rank: Option<usize>,
    /// Highest weight, comma-separated; halves written as p/2 (e.g. 3/2,1/2).
    #[arg(long)]
    pub lambda: Option<String>,
    /// Number of -1 coordinates of the order-2 element.
    #[arg(long)]
    pub k: Option<usize>,
    /// G2 highest weight as k,l (fundamental-weight coordinates).
    #[arg(long = "k-l")]
    pub k_l: Option<String>,
    #[arg(long, value_enum, default_value = "closed")]
    pub method: Method,
    #[arg(long, value_enum, default_value = "text")]
    pub format: EvalFormat,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Comma-separated families to sweep (default: all).
    #[arg(long, default_value = "gl,sp,so_even,so_odd,g2")]
    pub families: String,
    /// Largest rank swept per classical family.
    #[arg(long, default_value_t = 4)]
    pub max_rank: usize,
    /// Exhaustive sweep bound on weight entries.
    #[arg(long, default_value_t = 3)]
    pub max_entry: i64,
    /// G2 sweep bound on (k, l).
    #[arg(long, default_value_t = 8)]
    pub max_kl: u32,
    /// Seeded random weights per classical family, on top of the
    /// exhaustive sweep.
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
    /// Entry bound for the sampled weights.
    #[arg(long, default_value_t = 6)]
    pub sample_max_entry: i64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads (default: available parallelism).
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: ReportFormat,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
    /// Testing aid: corrupt a known constant to prove the sweep catches it.
    /// Recognized tags: gl-two-power.
    #[arg(long)]
    pub inject_fault: Option<String>,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long, default_value = "gl,sp,so_even,so_odd,g2")]
    pub families: String,
    #[arg(long, default_value_t = 3)]
    pub max_rank: usize,
    #[arg(long, default_value_t = 2)]
    pub max_entry: i64,
    #[arg(long, default_value_t = 4)]
    pub max_kl: u32,
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: ReportFormat,
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Args, Debug)]
pub struct WeightArgs {
    #[arg(long)]
    pub group: String,
    #[arg(long)]
    pub rank: Option<usize>,
    #[arg(long)]
    pub lambda: String,
}
