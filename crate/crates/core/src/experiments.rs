//! Monte-Carlo harness around the frontier estimator.
//!
//! A campaign simulates `m` independent samples, estimates the frontier of
//! each on a grid and records the L1 distance to the true frontier. Rate
//! studies follow the estimate at a single interior point along an
//! increasing ladder of sample sizes, with `(h, p)` driven by the asymptotic
//! schedule.
//!
//! Every replication draws from its own derived seed and results are reduced
//! in replication order, so reports do not depend on the number of worker
//! threads.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frontier::{
    estimate_at, estimate_grid, select_practical, select_schedule, EstimatorConfig, FrontierCurve,
    PointFlag, ScheduleParams, Smoothing,
};
use crate::kernels::KernelSpec;
use crate::simgen::{derive_seed, generate_sample, SeededRng, SimulationModel};

/// Default number of grid points on `[0, 1]`.
pub const DEFAULT_GRID_SIZE: usize = 201;

/// Default replication count; a full-scale campaign uses [`FULL_REPLICATIONS`].
pub const DEFAULT_REPLICATIONS: usize = 100;
pub const FULL_REPLICATIONS: usize = 500;

/// Interior band used when reporting the share of `ok` grid points.
pub const INTERIOR: (f64, f64) = (0.05, 0.95);

/// How `(h, p)` is chosen for each simulated sample.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "rule")]
pub enum ParameterRule {
    /// `h = 4 sd(x) n^{-1/2}`, `p = n^{1/2}`.
    Practical,
    /// The asymptotic schedule.
    Schedule(ScheduleParams),
    /// Fixed values.
    Fixed { h: f64, p: f64 },
}

impl ParameterRule {
    pub fn select(&self, sample: &crate::Sample, degree: usize) -> Result<Smoothing> {
        match *self {
            ParameterRule::Practical => select_practical(sample),
            ParameterRule::Schedule(params) => {
                let s = select_schedule(sample.len(), degree, &params)?;
                Ok(Smoothing { h: s.h, p: s.p })
            }
            ParameterRule::Fixed { h, p } => Ok(Smoothing { h, p }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub model: SimulationModel,
    pub n: usize,
    pub m: usize,
    pub grid_size: usize,
    pub degree: usize,
    pub kernel: KernelSpec,
    pub rule: ParameterRule,
    pub base_seed: u64,
}

impl ExperimentConfig {
    /// Degree 1, cosine-squared kernel, practical rule, 201-point grid.
    pub fn new(model: SimulationModel, n: usize, m: usize, base_seed: u64) -> Self {
        Self {
            model,
            n,
            m,
            grid_size: DEFAULT_GRID_SIZE,
            degree: 1,
            kernel: KernelSpec::default(),
            rule: ParameterRule::Practical,
            base_seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.model.validate()?;
        if self.n == 0 || self.m == 0 || self.grid_size == 0 {
            return Err(Error::InvalidConfig(
                "n, m and grid_size must all be at least 1".into(),
            ));
        }
        if let ParameterRule::Schedule(p) = self.rule {
            p.validate()?;
        }
        Ok(())
    }

    pub fn grid(&self) -> Vec<f64> {
        uniform_grid(self.grid_size)
    }
}

/// `size` equispaced points on `[0, 1]`; a single point sits at `0.5`.
pub fn uniform_grid(size: usize) -> Vec<f64> {
    match size {
        0 => Vec::new(),
        1 => vec![0.5],
        _ => {
            let step = 1.0 / (size - 1) as f64;
            (0..size).map(|i| i as f64 * step).collect()
        }
    }
}

/// Per-flag tallies over one curve.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagCounts {
    pub ok: usize,
    pub degraded: usize,
    pub nonpositive_fallback: usize,
    pub empty_window: usize,
}

impl FlagCounts {
    pub fn from_curve(curve: &FrontierCurve) -> Self {
        let mut c = Self::default();
        for f in &curve.flags {
            match f {
                PointFlag::Ok => c.ok += 1,
                PointFlag::Degraded => c.degraded += 1,
                PointFlag::NonpositiveFallback => c.nonpositive_fallback += 1,
                PointFlag::EmptyWindow => c.empty_window += 1,
            }
        }
        c
    }

    pub fn total(&self) -> usize {
        self.ok + self.degraded + self.nonpositive_fallback + self.empty_window
    }
}

/// Trapezoid L1 distance and the number of grid points left out.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct L1Error {
    pub value: f64,
    pub excluded: usize,
}

/// Trapezoid approximation of `∫ |curve - truth|` over the grid, skipping
/// points flagged [`PointFlag::EmptyWindow`].
pub fn l1_error<F: Fn(f64) -> f64>(curve: &FrontierCurve, truth: F) -> Result<L1Error> {
    let kept: Vec<(f64, f64)> = curve
        .grid
        .iter()
        .zip(&curve.values)
        .zip(&curve.flags)
        .filter(|(_, &f)| f != PointFlag::EmptyWindow)
        .map(|((&x, &v), _)| (x, (v - truth(x)).abs()))
        .collect();
    if kept.is_empty() {
        return Err(Error::AllEmpty);
    }
    let value = kept
        .windows(2)
        .map(|w| 0.5 * (w[1].0 - w[0].0) * (w[0].1 + w[1].1))
        .sum();
    Ok(L1Error {
        value,
        excluded: curve.len() - kept.len(),
    })
}

/// Outcome of one simulated replication.
#[derive(Debug, Clone, PartialEq)]
pub struct Replication {
    pub index: usize,
    pub seed: u64,
    pub smoothing: Smoothing,
    /// `None` when every grid point had an empty window.
    pub l1: Option<f64>,
    pub flags: FlagCounts,
    /// `max_i y_i / g(x_i)`: how close the sample came to the frontier.
    pub max_frontier_ratio: f64,
    pub interior_ok_fraction: f64,
    pub curve: FrontierCurve,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentReport {
    pub config: ExperimentConfig,
    pub grid: Vec<f64>,
    /// True frontier on the grid.
    pub truth: Vec<f64>,
    pub l1_errors: Vec<Option<f64>>,
    pub best_index: Option<usize>,
    pub worst_index: Option<usize>,
    pub best_curve: Option<FrontierCurve>,
    pub worst_curve: Option<FrontierCurve>,
    pub fallback_counts: Vec<FlagCounts>,
    pub replications: Vec<Replication>,
}

impl ExperimentReport {
    /// Median over the replications that produced an L1 error.
    pub fn median_l1(&self) -> Option<f64> {
        let v: Vec<f64> = self.l1_errors.iter().flatten().copied().collect();
        median(&v)
    }

    /// Replications whose L1 error is missing.
    pub fn failed_replications(&self) -> usize {
        self.l1_errors.iter().filter(|e| e.is_none()).count()
    }
}

/// Index of the smallest and largest entries, ties going to the lowest index.
/// Missing entries are skipped.
pub fn arg_extremes(values: &[Option<f64>]) -> (Option<usize>, Option<usize>) {
    let mut best: Option<(usize, f64)> = None;
    let mut worst: Option<(usize, f64)> = None;
    for (i, v) in values.iter().enumerate() {
        let Some(v) = *v else { continue };
        if best.is_none_or(|(_, b)| v < b) {
            best = Some((i, v));
        }
        if worst.is_none_or(|(_, w)| v > w) {
            worst = Some((i, v));
        }
    }
    (best.map(|b| b.0), worst.map(|w| w.0))
}

pub fn median(values: &[f64]) -> Option<f64> {
    if values.is_empty() {
        return None;
    }
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let n = v.len();
    Some(if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    })
}

fn replicate(cfg: &ExperimentConfig, grid: &[f64], index: usize) -> Result<Replication> {
    let seed = derive_seed(cfg.base_seed, index as u64);
    let mut rng = SeededRng::new(seed);
    let sample = generate_sample(&cfg.model, cfg.n, &mut rng)?;
    let smoothing = cfg.rule.select(&sample, cfg.degree)?;
    let est = EstimatorConfig {
        degree: cfg.degree,
        bandwidth: smoothing.h,
        power: smoothing.p,
        kernel: cfg.kernel,
    };
    let curve = estimate_grid(&sample, grid, &est)?;
    let l1 = l1_error(&curve, |x| cfg.model.frontier_at(x))
        .ok()
        .map(|e| e.value);
    let max_frontier_ratio = sample
        .iter()
        .map(|(x, y)| y / cfg.model.frontier_at(x))
        .fold(0.0, f64::max);
    Ok(Replication {
        index,
        seed,
        smoothing,
        l1,
        flags: FlagCounts::from_curve(&curve),
        max_frontier_ratio,
        interior_ok_fraction: curve.ok_fraction_within(INTERIOR.0, INTERIOR.1),
        curve,
    })
}

/// Runs the `m` replications of a campaign on the current rayon pool.
///
/// A replication whose grid is entirely empty is kept with a missing L1
/// entry; configuration and selection errors abort the campaign.
pub fn run_replications(cfg: &ExperimentConfig) -> Result<ExperimentReport> {
    cfg.validate()?;
    let grid = cfg.grid();
    let replications = (0..cfg.m)
        .into_par_iter()
        .map(|r| replicate(cfg, &grid, r))
        .collect::<Result<Vec<_>>>()?;

    let l1_errors: Vec<Option<f64>> = replications.iter().map(|r| r.l1).collect();
    let (best_index, worst_index) = arg_extremes(&l1_errors);
    let truth = grid.iter().map(|&x| cfg.model.frontier_at(x)).collect();
    Ok(ExperimentReport {
        config: *cfg,
        truth,
        fallback_counts: replications.iter().map(|r| r.flags).collect(),
        best_curve: best_index.map(|i| replications[i].curve.clone()),
        worst_curve: worst_index.map(|i| replications[i].curve.clone()),
        grid,
        l1_errors,
        best_index,
        worst_index,
        replications,
    })
}

/// Pointwise Monte-Carlo summary at one sample size.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RateRow {
    pub n: usize,
    pub h: f64,
    pub p: f64,
    pub bias: f64,
    pub median_error: f64,
    pub variance: f64,
    pub rmse: f64,
    /// `h (h p)^k`.
    pub bias_rate: f64,
    /// `log(n h) / sqrt(n h p)`.
    pub mse_rate: f64,
    /// `variance * n h p`.
    pub scaled_variance: f64,
    pub nonpositive_fallbacks: usize,
    pub empty_windows: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RateStudyReport {
    pub x0: f64,
    pub truth: f64,
    pub degree: usize,
    pub params: ScheduleParams,
    pub reps: usize,
    pub rows: Vec<RateRow>,
    /// Least-squares slope of `log rmse` against `log h (h p)^k`.
    pub fitted_slope: f64,
    /// Same against `log(n h) / sqrt(n h p)`.
    pub mse_slope: f64,
}

impl RateStudyReport {
    pub fn sizes(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.n).collect()
    }

    /// Largest over smallest `variance * n h p` across sizes.
    pub fn scaled_variance_spread(&self) -> f64 {
        let v: Vec<f64> = self.rows.iter().map(|r| r.scaled_variance).collect();
        let max = v.iter().cloned().fold(f64::MIN, f64::max);
        let min = v.iter().cloned().fold(f64::MAX, f64::min);
        max / min
    }
}

/// Ordinary least-squares slope of `y` on `x`.
pub fn ols_slope(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = x.iter().map(|a| (a - mx) * (a - mx)).sum();
    sxy / sxx
}

/// Point at which rate studies are measured.
pub const RATE_POINT: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RateStudyConfig {
    pub model: SimulationModel,
    pub degree: usize,
    pub kernel: KernelSpec,
    pub params: ScheduleParams,
    pub reps: usize,
    pub base_seed: u64,
}

/// Estimates `g(x0)` at `x0 = 0.5` over `reps` samples per size with the
/// schedule-driven `(h, p)`, then relates the empirical RMSE to the
/// theoretical rates.
pub fn rate_study(cfg: &RateStudyConfig, sizes: &[usize]) -> Result<RateStudyReport> {
    cfg.model.validate()?;
    if sizes.len() < 2 || sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidConfig(
            "rate study needs at least two strictly increasing sizes".into(),
        ));
    }
    if cfg.reps < 2 {
        return Err(Error::InvalidConfig(
            "rate study needs at least two replications".into(),
        ));
    }
    let x0 = RATE_POINT;
    let truth = cfg.model.frontier_at(x0);
    let k = cfg.degree;

    let mut rows = Vec::with_capacity(sizes.len());
    for (si, &n) in sizes.iter().enumerate() {
        let sched = select_schedule(n, k, &cfg.params)?;
        let est = EstimatorConfig {
            degree: k,
            bandwidth: sched.h,
            power: sched.p,
            kernel: cfg.kernel,
        };
        let size_seed = derive_seed(cfg.base_seed, si as u64);
        let estimates = (0..cfg.reps)
            .into_par_iter()
            .map(|r| {
                let mut rng = SeededRng::derived(size_seed, r as u64);
                let sample = generate_sample(&cfg.model, n, &mut rng)?;
                estimate_at(&sample, x0, &est)
            })
            .collect::<Result<Vec<_>>>()?;

        let errors: Vec<f64> = estimates
            .iter()
            .filter(|e| e.flag != PointFlag::EmptyWindow)
            .map(|e| e.value - truth)
            .collect();
        let empty_windows = estimates.len() - errors.len();
        let count = errors.len() as f64;
        let bias = errors.iter().sum::<f64>() / count;
        let variance = errors.iter().map(|e| (e - bias) * (e - bias)).sum::<f64>() / (count - 1.0);
        let rmse = (errors.iter().map(|e| e * e).sum::<f64>() / count).sqrt();
        let nf = n as f64;
        let nh = nf * sched.h;
        let nhp = nh * sched.p;
        rows.push(RateRow {
            n,
            h: sched.h,
            p: sched.p,
            bias,
            median_error: median(&errors).unwrap_or(f64::NAN),
            variance,
            rmse,
            bias_rate: sched.h * (sched.h * sched.p).powi(k as i32),
            mse_rate: nh.ln() / nhp.sqrt(),
            scaled_variance: variance * nhp,
            nonpositive_fallbacks: estimates
                .iter()
                .filter(|e| e.flag == PointFlag::NonpositiveFallback)
                .count(),
            empty_windows,
        });
    }

    let log_rmse: Vec<f64> = rows.iter().map(|r| r.rmse.ln()).collect();
    let log_bias_rate: Vec<f64> = rows.iter().map(|r| r.bias_rate.ln()).collect();
    let log_mse_rate: Vec<f64> = rows.iter().map(|r| r.mse_rate.ln()).collect();
    Ok(RateStudyReport {
        x0,
        truth,
        degree: k,
        params: cfg.params,
        reps: cfg.reps,
        fitted_slope: ols_slope(&log_bias_rate, &log_rmse),
        mse_slope: ols_slope(&log_mse_rate, &log_rmse),
        rows,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConsistencyRow {
    pub n: usize,
    pub median_l1: f64,
    pub mean_l1: f64,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConsistencyTable {
    pub gamma: f64,
    pub rows: Vec<ConsistencyRow>,
    /// `None` for a single-size ladder.
    pub strictly_decreasing: Option<bool>,
}

/// Median L1 error per sample size. `template` supplies everything but `n`;
/// each size gets its own derived base seed.
pub fn consistency_check(template: &ExperimentConfig, sizes: &[usize]) -> Result<ConsistencyTable> {
    let mut rows = Vec::with_capacity(sizes.len());
    for (si, &n) in sizes.iter().enumerate() {
        let cfg = ExperimentConfig {
            n,
            base_seed: derive_seed(template.base_seed, si as u64),
            ..*template
        };
        let report = run_replications(&cfg)?;
        let l1: Vec<f64> = report.l1_errors.iter().flatten().copied().collect();
        rows.push(ConsistencyRow {
            n,
            median_l1: median(&l1).unwrap_or(f64::NAN),
            mean_l1: l1.iter().sum::<f64>() / l1.len() as f64,
            failed: report.failed_replications(),
        });
    }
    let strictly_decreasing =
        (rows.len() > 1).then(|| rows.windows(2).all(|w| w[1].median_l1 < w[0].median_l1));
    Ok(ConsistencyTable {
        gamma: template.model.gamma,
        rows,
        strictly_decreasing,
    })
}

/// Simulates a uniform design on `[0, 1]` and returns, at `x = 0.5`,
/// `S_{n,j} / (n h^j f(x) mu_j)` for even `j` and `S_{n,j} / (n h^j f(x))`
/// for odd `j` (whose limit is zero), where
/// `S_{n,j} = sum_i (X_i - x)^j K_h(X_i - x)`.
pub fn sn_concentration_check(
    n: usize,
    h: f64,
    j: u32,
    kernel: KernelSpec,
    seed: u64,
) -> Result<f64> {
    if n == 0 || h.is_nan() || h <= 0.0 {
        return Err(Error::InvalidConfig("need n >= 1 and h > 0".into()));
    }
    let x = 0.5;
    let f = 1.0;
    let mut rng = SeededRng::new(seed);
    let mut s = 0.0;
    for _ in 0..n {
        let d = rng.uniform() - x;
        let w = kernel.eval(d / h) / h;
        if w != 0.0 {
            s += d.powi(j as i32) * w;
        }
    }
    let norm = n as f64 * h.powi(j as i32) * f;
    if j % 2 == 1 {
        Ok(s / norm)
    } else {
        Ok(s / (norm * kernel.moment(j, false)?))
    }
}

/// One-sample Kolmogorov-Smirnov statistic of `values` against the uniform
/// law on `[0, 1]`.
pub fn ks_uniform(values: &[f64]) -> f64 {
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let n = v.len() as f64;
    v.iter()
        .enumerate()
        .map(|(i, &u)| {
            let u = u.clamp(0.0, 1.0);
            ((i + 1) as f64 / n - u).max(u - i as f64 / n)
        })
        .fold(0.0, f64::max)
}

/// Asymptotic 1% critical value of the KS statistic, `1.6276 / sqrt(n)`.
pub fn ks_critical_1pct(n: usize) -> f64 {
    1.627_6 / (n as f64).sqrt()
}

/// Runs `f` on a dedicated pool of `threads` workers, or on the global pool
/// when `threads` is `None`. Results never depend on the worker count.
pub fn with_threads<T, F>(threads: Option<usize>, f: F) -> Result<T>
where
    T: Send,
    F: FnOnce() -> T + Send,
{
    match threads {
        None => Ok(f()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| Error::InvalidConfig(format!("cannot start worker pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(grid: Vec<f64>, values: Vec<f64>) -> FrontierCurve {
        let flags = vec![PointFlag::Ok; grid.len()];
        FrontierCurve {
            grid,
            values,
            flags,
        }
    }

    #[test]
    fn ks_of_exact_quantiles() {
        let n = 100;
        let u: Vec<f64> = (0..n).map(|i| (i as f64 + 0.5) / n as f64).collect();
        assert!((ks_uniform(&u) - 0.5 / n as f64).abs() < 1e-15);
        assert!((ks_uniform(&[0.0; 4]) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn l1_of_identical_curve_is_zero() {
        let grid = uniform_grid(201);
        let values = grid.iter().map(|&x| x * x).collect();
        let e = l1_error(&curve(grid, values), |x| x * x).unwrap();
        assert_eq!(e.value, 0.0);
        assert_eq!(e.excluded, 0);
    }

    #[test]
    fn l1_of_constant_offset() {
        let grid = uniform_grid(201);
        let values = grid.iter().map(|&x| x.sin() + 0.1).collect();
        let e = l1_error(&curve(grid, values), f64::sin).unwrap();
        assert!((e.value - 0.1).abs() < 1e-12);
    }

    #[test]
    fn l1_of_linear_offset() {
        let grid = uniform_grid(201);
        let values = grid.iter().map(|&x| 1.0 + x).collect();
        let e = l1_error(&curve(grid, values), |_| 1.0).unwrap();
        assert!((e.value - 0.5).abs() <= 1e-4);
    }

    #[test]
    fn l1_skips_empty_points() {
        let grid = uniform_grid(5);
        let mut c = curve(grid, vec![1.0, 1.0, f64::NAN, 1.0, 1.0]);
        c.flags[2] = PointFlag::EmptyWindow;
        let e = l1_error(&c, |_| 0.0).unwrap();
        assert_eq!(e.excluded, 1);
        assert!((e.value - 1.0).abs() < 1e-15);
        c.flags = vec![PointFlag::EmptyWindow; 5];
        assert_eq!(l1_error(&c, |_| 0.0), Err(Error::AllEmpty));
    }

    #[test]
    fn extremes_break_ties_by_lowest_index() {
        let v = [Some(2.0), Some(1.0), None, Some(1.0), Some(3.0), Some(3.0)];
        assert_eq!(arg_extremes(&v), (Some(1), Some(4)));
        assert_eq!(arg_extremes(&[None, None]), (None, None));
    }

    #[test]
    fn grid_shapes() {
        assert_eq!(uniform_grid(1), vec![0.5]);
        let g = uniform_grid(201);
        assert_eq!(g.len(), 201);
        assert_eq!(g[0], 0.0);
        assert_eq!(g[200], 1.0);
    }

    #[test]
    fn small_campaign_bookkeeping() {
        let cfg = ExperimentConfig::new(SimulationModel::bimodal(1.0), 200, 3, 11);
        let report = run_replications(&cfg).unwrap();
        assert_eq!(report.l1_errors.len(), 3);
        let l1: Vec<f64> = report.l1_errors.iter().map(|e| e.unwrap()).collect();
        let best = report.best_index.unwrap();
        let worst = report.worst_index.unwrap();
        assert!(l1.iter().all(|&v| v >= l1[best] && v <= l1[worst]));
        assert_eq!(report.fallback_counts.len(), 3);
        assert!(report.fallback_counts.iter().all(|c| c.total() == 201));
        assert_eq!(
            report.best_curve.as_ref().unwrap(),
            &report.replications[best].curve
        );
    }

    #[test]
    fn median_and_slope_helpers() {
        assert_eq!(median(&[3.0, 1.0, 2.0]), Some(2.0));
        assert_eq!(median(&[4.0, 1.0, 2.0, 3.0]), Some(2.5));
        assert_eq!(median(&[]), None);
        let x = [0.0, 1.0, 2.0, 3.0];
        let y = [1.0, 3.0, 5.0, 7.0];
        assert!((ols_slope(&x, &y) - 2.0).abs() < 1e-15);
    }

    #[test]
    fn single_size_ladder_has_no_verdict() {
        let mut cfg = ExperimentConfig::new(SimulationModel::bimodal(1.0), 100, 2, 3);
        cfg.grid_size = 21;
        let table = consistency_check(&cfg, &[100]).unwrap();
        assert_eq!(table.rows.len(), 1);
        assert_eq!(table.strictly_decreasing, None);
    }
}
