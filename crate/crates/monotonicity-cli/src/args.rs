//! Command-line surface.

use clap::{Args, Parser, Subcommand, ValueEnum};
use monotonicity::SampleRule;
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(
    name = "monotonicity",
    version,
    about = "Measure how far a function is from being non-decreasing"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute both indices for a built-in function or a CSV sample.
    Index(IndexArgs),
    /// Reproduce the built-in sin/cos index tables (unit domain and [0, M]).
    Table(TableArgs),
    /// Emit the step function, its rearrangement, and both cumulative
    /// integral curves as CSV, one row per grid cell.
    Rearrange(RearrangeArgs),
    /// Double the grid until both unit-domain index estimates stabilize.
    Converge(ConvergeArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FunctionKind {
    /// sin(tM) on the unit grid.
    Sin,
    /// cos(tM) on the unit grid.
    Cos,
    /// t on [0, 1/2], then alpha*t + (1-alpha)*(1-t).
    Halpha,
    /// A constant level (see --value).
    Constant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RuleArg {
    Midpoint,
    Left,
    Right,
}

impl From<RuleArg> for SampleRule {
    fn from(rule: RuleArg) -> Self {
        match rule {
            RuleArg::Midpoint => SampleRule::Midpoint,
            RuleArg::Left => SampleRule::Left,
            RuleArg::Right => SampleRule::Right,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

/// Where the samples come from: exactly one of a built-in function or a
/// CSV file.
#[derive(Debug, Args)]
pub struct SourceArgs {
    /// Built-in function to sample.
    #[arg(
        long = "function",
        value_enum,
        required_unless_present = "csv",
        conflicts_with = "csv"
    )]
    pub function: Option<FunctionKind>,

    /// Domain length M. sin/cos are read as sin(tM)/cos(tM) on the unit
    /// grid and the indices are scaled to [0, M]; for CSV pairs this
    /// overrides the domain inferred from the abscissa spacing.
    #[arg(long = "M", value_name = "M")]
    pub domain: Option<f64>,

    /// Kink parameter of halpha, in [0, 1].
    #[arg(long, required_if_eq("function", "halpha"))]
    pub alpha: Option<f64>,

    /// Level of the constant function.
    #[arg(long, default_value_t = 0.0, conflicts_with = "csv")]
    pub value: f64,

    /// Grid size for built-in sources (CSV files carry their own).
    #[arg(long, conflicts_with = "csv")]
    pub n: Option<usize>,

    /// Which point of each grid cell to sample.
    #[arg(long, value_enum, default_value_t = RuleArg::Midpoint, conflicts_with = "csv")]
    pub rule: RuleArg,

    /// Read samples from a CSV file: one value per line, or uniformly
    /// spaced t,value rows.
    #[arg(long, value_name = "PATH")]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct IndexArgs {
    #[command(flatten)]
    pub source: SourceArgs,

    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub out: OutputFormat,

    /// Write to a file instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Grid size per table cell.
    #[arg(long, default_value_t = 100_000)]
    pub n: usize,

    /// Which point of each grid cell to sample.
    #[arg(long, value_enum, default_value_t = RuleArg::Midpoint)]
    pub rule: RuleArg,

    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub out: OutputFormat,

    /// Write to a file instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RearrangeArgs {
    #[command(flatten)]
    pub source: SourceArgs,

    /// Write to a file instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ConvergeArgs {
    /// Built-in function to sample.
    #[arg(long = "function", value_enum)]
    pub function: FunctionKind,

    /// Frequency parameter for sin/cos: the function is sin(tM)/cos(tM)
    /// on the unit grid. Estimates stay on the unit domain.
    #[arg(long = "M", value_name = "M")]
    pub domain: Option<f64>,

    /// Kink parameter of halpha, in [0, 1].
    #[arg(long, required_if_eq("function", "halpha"))]
    pub alpha: Option<f64>,

    /// Level of the constant function.
    #[arg(long, default_value_t = 0.0)]
    pub value: f64,

    /// Doubling-gap tolerance both index estimates must reach.
    #[arg(long)]
    pub tol: f64,

    /// Starting grid size.
    #[arg(long, default_value_t = 128)]
    pub n0: usize,

    /// Doublings to attempt before reporting non-convergence.
    #[arg(long, default_value_t = 14)]
    pub max_doublings: u32,

    /// Which point of each grid cell to sample.
    #[arg(long, value_enum, default_value_t = RuleArg::Midpoint)]
    pub rule: RuleArg,

    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub out: OutputFormat,

    /// Write to a file instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,
}
