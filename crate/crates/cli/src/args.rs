//! Command-line surface.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lpfrontier::KernelSpec;
use serde::{Deserialize, Serialize};

#[derive(Debug, Parser)]
#[command(
    name = "lpfrontier",
    version,
    about = "Local-polynomial frontier estimation"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output file. Companion files are written next to it.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Base seed for every random stream.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Worker threads; results do not depend on this.
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Estimate the frontier of a CSV sample on a grid.
    Estimate(EstimateArgs),
    /// Draw a sample from the simulation model.
    Simulate(SimulateArgs),
    /// Monte-Carlo campaign: L1 errors plus best and worst curves.
    Experiment(ExperimentArgs),
    /// Pointwise RMSE at x = 0.5 along a ladder of sample sizes.
    Ratestudy(RateStudyArgs),
    /// Kernel moments and the degree-k constants.
    KernelTable(KernelTableArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RuleName {
    #[default]
    Practical,
    Schedule,
}

/// Estimator settings shared by `estimate` and `experiment`.
#[derive(Debug, Clone, Args)]
pub struct SmoothingArgs {
    /// Polynomial degree.
    #[arg(long, default_value_t = 1)]
    pub k: usize,

    /// Bandwidth; must be given together with --p.
    #[arg(long)]
    pub h: Option<f64>,

    /// Power; must be given together with --h.
    #[arg(long)]
    pub p: Option<f64>,

    /// Rule for (h, p) when they are not given explicitly.
    #[arg(long, value_enum, default_value_t = RuleName::Practical)]
    pub rule: RuleName,

    /// Schedule exponent tau.
    #[arg(long, default_value_t = 1.0)]
    pub tau: f64,

    /// Schedule bandwidth constant (default: matched to the practical rule).
    #[arg(long = "c-h")]
    pub c_h: Option<f64>,

    /// Schedule power constant (default: matched to the practical rule).
    #[arg(long = "c-p")]
    pub c_p: Option<f64>,

    #[arg(long, default_value_t = KernelSpec::CosineSquared)]
    pub kernel: KernelSpec,

    #[arg(long = "grid-size", default_value_t = lpfrontier::experiments::DEFAULT_GRID_SIZE)]
    pub grid_size: usize,
}

#[derive(Debug, Clone, Args)]
pub struct EstimateArgs {
    /// Sample CSV with header `x,y`.
    #[arg(long)]
    pub input: PathBuf,

    #[command(flatten)]
    pub smoothing: SmoothingArgs,

    /// Left end of the grid (default: smallest x).
    #[arg(long = "grid-min")]
    pub grid_min: Option<f64>,

    /// Right end of the grid (default: largest x).
    #[arg(long = "grid-max")]
    pub grid_max: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct SimulateArgs {
    #[arg(long, default_value_t = 500)]
    pub n: usize,

    #[arg(long, default_value_t = 1.0)]
    pub gamma: f64,
}

#[derive(Debug, Clone, Args)]
pub struct ExperimentArgs {
    #[arg(long, default_value_t = 500)]
    pub n: usize,

    /// Replications (default 100, or 500 with --full).
    #[arg(long)]
    pub m: Option<usize>,

    /// Full-scale campaign of 500 replications.
    #[arg(long)]
    pub full: bool,

    #[arg(long, default_value_t = 1.0)]
    pub gamma: f64,

    #[command(flatten)]
    pub smoothing: SmoothingArgs,
}

#[derive(Debug, Clone, Args)]
pub struct RateStudyArgs {
    /// Comma-separated, strictly increasing sample sizes.
    #[arg(long, value_delimiter = ',', default_values_t = [1000, 4000, 16000])]
    pub sizes: Vec<usize>,

    #[arg(long, default_value_t = 200)]
    pub reps: usize,

    #[arg(long, default_value_t = 1.0)]
    pub gamma: f64,

    #[arg(long, default_value_t = 1)]
    pub k: usize,

    #[arg(long, default_value_t = 1.0)]
    pub tau: f64,

    #[arg(long = "c-h")]
    pub c_h: Option<f64>,

    #[arg(long = "c-p")]
    pub c_p: Option<f64>,

    #[arg(long, default_value_t = KernelSpec::CosineSquared)]
    pub kernel: KernelSpec,
}

#[derive(Debug, Clone, Args)]
pub struct KernelTableArgs {
    #[arg(long, default_value_t = KernelSpec::CosineSquared)]
    pub kernel: KernelSpec,

    #[arg(long, default_value_t = 1)]
    pub k: usize,
}
