//! Command implementations. Data goes to files, diagnostics to stderr.

use std::path::Path;

use lpfrontier::experiments::{
    rate_study, run_replications, uniform_grid, with_threads, ExperimentConfig, ExperimentReport,
    FlagCounts, RateStudyReport,
};
use lpfrontier::frontier::Smoothing;
use lpfrontier::simgen::{generate_sample, SeededRng};
use lpfrontier::{estimate_grid, EstimatorConfig, FrontierCurve, MomentTable, PointFlag};
use serde::Serialize;

use crate::args::Format;
use crate::config::{
    EstimateJob, Job, KernelTableJob, RateStudyJob, RunConfig, SimulateJob, SCHEMA_VERSION,
};
use crate::error::{CliError, CliResult};
use crate::io::{
    format_f64, read_sample_csv, sibling, sidecar_path, write_curve_csv, write_json,
    write_sample_csv,
};

/// Runs one resolved invocation.
pub fn run(cfg: &RunConfig) -> CliResult<()> {
    with_threads(cfg.threads, || match &cfg.job {
        Job::Estimate(job) => cmd_estimate(cfg, job),
        Job::Simulate(job) => cmd_simulate(cfg, job),
        Job::Experiment(job) => cmd_experiment(cfg, job),
        Job::Ratestudy(job) => cmd_ratestudy(cfg, job),
        Job::KernelTable(job) => cmd_kernel_table(cfg, job),
    })?
}

/// Metadata written next to a CSV file.
#[derive(Serialize)]
struct Sidecar<'a, T: Serialize> {
    schema_version: u32,
    config: &'a Job,
    #[serde(flatten)]
    details: T,
}

fn write_sidecar<T: Serialize>(csv_path: &Path, job: &Job, details: T) -> CliResult<()> {
    write_json(
        &sidecar_path(csv_path),
        &Sidecar {
            schema_version: SCHEMA_VERSION,
            config: job,
            details,
        },
    )
}

fn flag_summary(counts: &FlagCounts) -> String {
    format!(
        "ok={} degraded={} nonpositive_fallback={} empty_window={}",
        counts.ok, counts.degraded, counts.nonpositive_fallback, counts.empty_window
    )
}

#[derive(Serialize)]
struct CurveDetails {
    smoothing: Smoothing,
    degree: usize,
    flag_counts: FlagCounts,
}

#[derive(Serialize)]
struct CurveDocument<'a> {
    schema_version: u32,
    config: &'a Job,
    smoothing: Smoothing,
    degree: usize,
    flag_counts: FlagCounts,
    grid: &'a [f64],
    /// `null` on empty-window points.
    values: Vec<Option<f64>>,
    flags: &'a [PointFlag],
}

fn estimate_grid_points(job: &EstimateJob, xs: &[f64]) -> Vec<f64> {
    let lo = job
        .grid_min
        .unwrap_or_else(|| xs.iter().copied().fold(f64::INFINITY, f64::min));
    let hi = job
        .grid_max
        .unwrap_or_else(|| xs.iter().copied().fold(f64::NEG_INFINITY, f64::max));
    uniform_grid(job.grid_size)
        .into_iter()
        .map(|t| lo + t * (hi - lo))
        .collect()
}

pub fn cmd_estimate(cfg: &RunConfig, job: &EstimateJob) -> CliResult<()> {
    let sample = read_sample_csv(&job.input)?;
    let smoothing = job.rule.select(&sample, job.degree)?;
    let est = EstimatorConfig::new(smoothing.h, smoothing.p)
        .with_degree(job.degree)
        .with_kernel(job.kernel);
    let grid = estimate_grid_points(job, sample.x());
    let curve = estimate_grid(&sample, &grid, &est)?;
    let counts = FlagCounts::from_curve(&curve);

    eprintln!(
        "estimate: n={} h={} p={} k={} kernel={}",
        sample.len(),
        smoothing.h,
        smoothing.p,
        job.degree,
        job.kernel
    );
    eprintln!("flags: {}", flag_summary(&counts));
    if counts.empty_window > 0 {
        eprintln!(
            "warning: {} grid points have no observation within h and are reported as NaN",
            counts.empty_window
        );
    }

    match cfg.format {
        Format::Csv => {
            write_curve_csv(&cfg.output, &curve)?;
            write_sidecar(
                &cfg.output,
                &cfg.job,
                CurveDetails {
                    smoothing,
                    degree: job.degree,
                    flag_counts: counts,
                },
            )
        }
        Format::Json => write_json(
            &cfg.output,
            &CurveDocument {
                schema_version: SCHEMA_VERSION,
                config: &cfg.job,
                smoothing,
                degree: job.degree,
                flag_counts: counts,
                grid: &curve.grid,
                values: curve
                    .values
                    .iter()
                    .map(|v| v.is_finite().then_some(*v))
                    .collect(),
                flags: &curve.flags,
            },
        ),
    }
}

#[derive(Serialize)]
struct SampleDocument<'a> {
    schema_version: u32,
    config: &'a Job,
    x: &'a [f64],
    y: &'a [f64],
}

#[derive(Serialize)]
struct SampleDetails {
    n: usize,
}

pub fn cmd_simulate(cfg: &RunConfig, job: &SimulateJob) -> CliResult<()> {
    let sample = generate_sample(&job.model, job.n, &mut SeededRng::new(job.seed))?;
    eprintln!(
        "simulate: n={} gamma={} seed={}",
        job.n, job.model.gamma, job.seed
    );
    match cfg.format {
        Format::Csv => {
            write_sample_csv(&cfg.output, &sample)?;
            write_sidecar(&cfg.output, &cfg.job, SampleDetails { n: sample.len() })
        }
        Format::Json => write_json(
            &cfg.output,
            &SampleDocument {
                schema_version: SCHEMA_VERSION,
                config: &cfg.job,
                x: sample.x(),
                y: sample.y(),
            },
        ),
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
struct ReplicationSummary {
    index: usize,
    seed: u64,
    h: f64,
    p: f64,
    l1: Option<f64>,
    max_frontier_ratio: f64,
    interior_ok_fraction: f64,
}

#[derive(Debug, Clone, Serialize)]
struct CurveFiles {
    best: Option<String>,
    worst: Option<String>,
    frontier: String,
}

#[derive(Serialize)]
struct ExperimentDocument<'a> {
    schema_version: u32,
    config: &'a Job,
    l1_errors: &'a [Option<f64>],
    median_l1: Option<f64>,
    best_index: Option<usize>,
    worst_index: Option<usize>,
    fallback_counts: &'a [FlagCounts],
    replications: Vec<ReplicationSummary>,
    files: CurveFiles,
}

#[derive(Serialize)]
struct ExtremeCurveDetails {
    role: &'static str,
    replication: ReplicationSummary,
}

fn summary(report: &ExperimentReport, index: usize) -> ReplicationSummary {
    let r = &report.replications[index];
    ReplicationSummary {
        index: r.index,
        seed: r.seed,
        h: r.smoothing.h,
        p: r.smoothing.p,
        l1: r.l1,
        max_frontier_ratio: r.max_frontier_ratio,
        interior_ok_fraction: r.interior_ok_fraction,
    }
}

fn file_name(path: &Path) -> String {
    path.file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default()
}

/// Writes `grid,frontier` for the true frontier.
fn write_truth_csv(path: &Path, grid: &[f64], truth: &[f64]) -> CliResult<()> {
    let mut body = String::from("grid,frontier\n");
    for (x, g) in grid.iter().zip(truth) {
        body.push_str(&format_f64(*x));
        body.push(',');
        body.push_str(&format_f64(*g));
        body.push('\n');
    }
    std::fs::write(path, body).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn cmd_experiment(cfg: &RunConfig, job: &ExperimentConfig) -> CliResult<()> {
    let report = run_replications(job)?;

    let best_path = sibling(&cfg.output, "best.csv");
    let worst_path = sibling(&cfg.output, "worst.csv");
    let truth_path = sibling(&cfg.output, "frontier.csv");
    let curves: [(&str, Option<usize>, &Option<FrontierCurve>, &Path); 2] = [
        ("best", report.best_index, &report.best_curve, &best_path),
        (
            "worst",
            report.worst_index,
            &report.worst_curve,
            &worst_path,
        ),
    ];
    for (role, index, curve, path) in curves {
        if let (Some(i), Some(curve)) = (index, curve) {
            write_curve_csv(path, curve)?;
            write_sidecar(
                path,
                &cfg.job,
                ExtremeCurveDetails {
                    role,
                    replication: summary(&report, i),
                },
            )?;
        }
    }
    write_truth_csv(&truth_path, &report.grid, &report.truth)?;
    write_sidecar(
        &truth_path,
        &cfg.job,
        SampleDetails {
            n: report.grid.len(),
        },
    )?;

    let doc = ExperimentDocument {
        schema_version: SCHEMA_VERSION,
        config: &cfg.job,
        l1_errors: &report.l1_errors,
        median_l1: report.median_l1(),
        best_index: report.best_index,
        worst_index: report.worst_index,
        fallback_counts: &report.fallback_counts,
        replications: (0..report.replications.len())
            .map(|i| summary(&report, i))
            .collect(),
        files: CurveFiles {
            best: report.best_index.map(|_| file_name(&best_path)),
            worst: report.worst_index.map(|_| file_name(&worst_path)),
            frontier: file_name(&truth_path),
        },
    };
    write_json(&cfg.output, &doc)?;

    let total = report
        .fallback_counts
        .iter()
        .fold(FlagCounts::default(), |a, c| FlagCounts {
            ok: a.ok + c.ok,
            degraded: a.degraded + c.degraded,
            nonpositive_fallback: a.nonpositive_fallback + c.nonpositive_fallback,
            empty_window: a.empty_window + c.empty_window,
        });
    eprintln!(
        "experiment: gamma={} n={} m={} k={} median L1={}",
        job.model.gamma,
        job.n,
        job.m,
        job.degree,
        doc.median_l1.map_or("n/a".into(), |v| format!("{v:.6}"))
    );
    eprintln!("flags over all replications: {}", flag_summary(&total));
    if report.failed_replications() > 0 {
        eprintln!(
            "warning: {} replications had no usable grid point",
            report.failed_replications()
        );
    }
    Ok(())
}

#[derive(Serialize)]
struct RateStudyDocument<'a> {
    schema_version: u32,
    config: &'a Job,
    report: &'a RateStudyReport,
    scaled_variance_spread: f64,
}

pub fn cmd_ratestudy(cfg: &RunConfig, job: &RateStudyJob) -> CliResult<()> {
    let report = rate_study(&job.study, &job.sizes)?;
    let spread = report.scaled_variance_spread();
    for r in &report.rows {
        eprintln!(
            "n={:>7} h={:.5} p={:.3} rmse={:.3e} bias={:+.3e} var*nhp={:.4}",
            r.n, r.h, r.p, r.rmse, r.bias, r.scaled_variance
        );
    }
    eprintln!(
        "slope vs h(hp)^k: {:.4}  slope vs log(nh)/sqrt(nhp): {:.4}  variance spread: {:.3}",
        report.fitted_slope, report.mse_slope, spread
    );
    match cfg.format {
        Format::Json => write_json(
            &cfg.output,
            &RateStudyDocument {
                schema_version: SCHEMA_VERSION,
                config: &cfg.job,
                report: &report,
                scaled_variance_spread: spread,
            },
        ),
        Format::Csv => {
            let mut body = String::from(
                "n,h,p,bias,median_error,variance,rmse,bias_rate,mse_rate,scaled_variance,nonpositive_fallbacks,empty_windows\n",
            );
            for r in &report.rows {
                let nums = [
                    r.h,
                    r.p,
                    r.bias,
                    r.median_error,
                    r.variance,
                    r.rmse,
                    r.bias_rate,
                    r.mse_rate,
                    r.scaled_variance,
                ]
                .map(format_f64)
                .join(",");
                body.push_str(&format!(
                    "{},{nums},{},{}\n",
                    r.n, r.nonpositive_fallbacks, r.empty_windows
                ));
            }
            std::fs::write(&cfg.output, body).map_err(|source| CliError::Io {
                path: cfg.output.clone(),
                source,
            })?;
            #[derive(Serialize)]
            struct Fit {
                fitted_slope: f64,
                mse_slope: f64,
                scaled_variance_spread: f64,
            }
            write_sidecar(
                &cfg.output,
                &cfg.job,
                Fit {
                    fitted_slope: report.fitted_slope,
                    mse_slope: report.mse_slope,
                    scaled_variance_spread: spread,
                },
            )
        }
    }
}

#[derive(Serialize)]
struct KernelTableDocument<'a> {
    schema_version: u32,
    config: &'a Job,
    table: &'a MomentTable,
    first_row_residual: f64,
}

pub fn cmd_kernel_table(cfg: &RunConfig, job: &KernelTableJob) -> CliResult<()> {
    let table = MomentTable::build(job.kernel, job.degree)?;
    let residual = table.first_row_residual();
    eprintln!(
        "kernel-table: kernel={} k={} C={} residual={:.1e}",
        job.kernel,
        job.degree,
        table.variance_constant(),
        residual
    );
    match cfg.format {
        Format::Json => write_json(
            &cfg.output,
            &KernelTableDocument {
                schema_version: SCHEMA_VERSION,
                config: &cfg.job,
                table: &table,
                first_row_residual: residual,
            },
        ),
        Format::Csv => {
            let mut body = String::from("j,mu,nu\n");
            for (j, mu) in table.mu().iter().enumerate() {
                let nu = table.nu().get(j).map_or(String::new(), |v| format_f64(*v));
                body.push_str(&format!("{j},{},{nu}\n", format_f64(*mu)));
            }
            std::fs::write(&cfg.output, body).map_err(|source| CliError::Io {
                path: cfg.output.clone(),
                source,
            })?;
            #[derive(Serialize)]
            struct Constants<'a> {
                u: &'a [f64],
                variance_constant: f64,
                first_row_residual: f64,
            }
            write_sidecar(
                &cfg.output,
                &cfg.job,
                Constants {
                    u: table.u(),
                    variance_constant: table.variance_constant(),
                    first_row_residual: residual,
                },
            )
        }
    }
}
