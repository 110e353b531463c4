//! Resolved run configuration.
//!
//! [`RunConfig::from_cli`] fills in every default and validates the
//! per-command requirements before anything runs. The [`Job`] part is
//! embedded in every output file; the output path, format and thread count
//! are left out so that the same job produces the same documents wherever
//! and however it is run.

use std::path::PathBuf;

use lpfrontier::experiments::{
    ExperimentConfig, ParameterRule, RateStudyConfig, DEFAULT_REPLICATIONS, FULL_REPLICATIONS,
};
use lpfrontier::{KernelSpec, ScheduleParams, SimulationModel};
use serde::{Deserialize, Serialize};

use crate::args::{Cli, Command, Format, RuleName, SmoothingArgs};
use crate::error::{CliError, CliResult};

/// Version of every JSON document written by the tool.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EstimateJob {
    pub input: PathBuf,
    pub degree: usize,
    pub kernel: KernelSpec,
    pub rule: ParameterRule,
    pub grid_size: usize,
    pub grid_min: Option<f64>,
    pub grid_max: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimulateJob {
    pub model: SimulationModel,
    pub n: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RateStudyJob {
    pub study: RateStudyConfig,
    pub sizes: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KernelTableJob {
    pub kernel: KernelSpec,
    pub degree: usize,
}

/// What to compute, with every default resolved.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Job {
    Estimate(EstimateJob),
    Simulate(SimulateJob),
    Experiment(ExperimentConfig),
    Ratestudy(RateStudyJob),
    KernelTable(KernelTableJob),
}

impl Job {
    pub fn name(&self) -> &'static str {
        match self {
            Job::Estimate(_) => "estimate",
            Job::Simulate(_) => "simulate",
            Job::Experiment(_) => "experiment",
            Job::Ratestudy(_) => "ratestudy",
            Job::KernelTable(_) => "kernel-table",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub job: Job,
    pub output: PathBuf,
    pub format: Format,
    pub threads: Option<usize>,
}

fn schedule_params(tau: f64, c_h: Option<f64>, c_p: Option<f64>) -> CliResult<ScheduleParams> {
    let matched = ScheduleParams::matched_to_practical(tau);
    let params = ScheduleParams {
        tau,
        c_h: c_h.unwrap_or(matched.c_h),
        c_p: c_p.unwrap_or(matched.c_p),
    };
    params.validate()?;
    Ok(params)
}

fn parameter_rule(s: &SmoothingArgs) -> CliResult<ParameterRule> {
    match (s.h, s.p) {
        (Some(h), Some(p)) => {
            if !(h > 0.0 && h.is_finite() && p >= 1.0 && p.is_finite()) {
                return Err(CliError::Config(format!(
                    "need h > 0 and p >= 1, got h = {h}, p = {p}"
                )));
            }
            Ok(ParameterRule::Fixed { h, p })
        }
        (None, None) => Ok(match s.rule {
            RuleName::Practical => ParameterRule::Practical,
            RuleName::Schedule => ParameterRule::Schedule(schedule_params(s.tau, s.c_h, s.c_p)?),
        }),
        _ => Err(CliError::Config(
            "--h and --p must be given together".into(),
        )),
    }
}

fn check_degree(k: usize) -> CliResult<()> {
    if k > lpfrontier::kernels::MAX_DEGREE {
        return Err(CliError::Config(format!(
            "degree {k} exceeds the maximum of {}",
            lpfrontier::kernels::MAX_DEGREE
        )));
    }
    Ok(())
}

impl RunConfig {
    /// Resolves defaults and validates the arguments of one invocation.
    pub fn from_cli(cli: Cli) -> CliResult<Self> {
        let output = cli
            .output
            .ok_or_else(|| CliError::Config("--output is required".into()))?;
        if cli.threads == Some(0) {
            return Err(CliError::Config("--threads must be at least 1".into()));
        }
        let (job, default_format) = match cli.command {
            Command::Estimate(a) => {
                check_degree(a.smoothing.k)?;
                if a.smoothing.grid_size == 0 {
                    return Err(CliError::Config("--grid-size must be at least 1".into()));
                }
                if let (Some(lo), Some(hi)) = (a.grid_min, a.grid_max) {
                    if lo.is_nan() || hi.is_nan() || lo > hi {
                        return Err(CliError::Config("--grid-min exceeds --grid-max".into()));
                    }
                }
                let job = EstimateJob {
                    input: a.input,
                    degree: a.smoothing.k,
                    kernel: a.smoothing.kernel,
                    rule: parameter_rule(&a.smoothing)?,
                    grid_size: a.smoothing.grid_size,
                    grid_min: a.grid_min,
                    grid_max: a.grid_max,
                };
                (Job::Estimate(job), Format::Csv)
            }
            Command::Simulate(a) => {
                let job = SimulateJob {
                    model: SimulationModel::bimodal(a.gamma),
                    n: a.n,
                    seed: cli.seed,
                };
                job.model.validate()?;
                if job.n == 0 {
                    return Err(CliError::Config("--n must be at least 1".into()));
                }
                (Job::Simulate(job), Format::Csv)
            }
            Command::Experiment(a) => {
                check_degree(a.smoothing.k)?;
                let m = a.m.unwrap_or(if a.full {
                    FULL_REPLICATIONS
                } else {
                    DEFAULT_REPLICATIONS
                });
                let cfg = ExperimentConfig {
                    model: SimulationModel::bimodal(a.gamma),
                    n: a.n,
                    m,
                    grid_size: a.smoothing.grid_size,
                    degree: a.smoothing.k,
                    kernel: a.smoothing.kernel,
                    rule: parameter_rule(&a.smoothing)?,
                    base_seed: cli.seed,
                };
                cfg.validate()?;
                if cli.format == Some(Format::Csv) {
                    return Err(CliError::Config(
                        "the experiment report is always JSON; curves are always CSV".into(),
                    ));
                }
                (Job::Experiment(cfg), Format::Json)
            }
            Command::Ratestudy(a) => {
                check_degree(a.k)?;
                let study = RateStudyConfig {
                    model: SimulationModel::bimodal(a.gamma),
                    degree: a.k,
                    kernel: a.kernel,
                    params: schedule_params(a.tau, a.c_h, a.c_p)?,
                    reps: a.reps,
                    base_seed: cli.seed,
                };
                study.model.validate()?;
                if a.sizes.len() < 2 || a.sizes.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(CliError::Config(
                        "--sizes needs at least two strictly increasing values".into(),
                    ));
                }
                if a.reps < 2 {
                    return Err(CliError::Config("--reps must be at least 2".into()));
                }
                (
                    Job::Ratestudy(RateStudyJob {
                        study,
                        sizes: a.sizes,
                    }),
                    Format::Json,
                )
            }
            Command::KernelTable(a) => {
                check_degree(a.k)?;
                (
                    Job::KernelTable(KernelTableJob {
                        kernel: a.kernel,
                        degree: a.k,
                    }),
                    Format::Json,
                )
            }
        };
        Ok(Self {
            job,
            output,
            format: cli.format.unwrap_or(default_format),
            threads: cli.threads,
        })
    }
}
