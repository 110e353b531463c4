//! The frontier estimate `g_n(x) = beta0^(1/p)` and its parameter rules.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernels::{KernelSpec, MAX_DEGREE};
use crate::local_fit::{fit_points, LocalFit, Sample};

/// Tuning of the estimator: polynomial degree `k`, bandwidth `h`, power `p`
/// and kernel.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EstimatorConfig {
    pub degree: usize,
    pub bandwidth: f64,
    pub power: f64,
    pub kernel: KernelSpec,
}

impl EstimatorConfig {
    /// Degree 1 with the cosine-squared kernel.
    pub fn new(bandwidth: f64, power: f64) -> Self {
        Self {
            degree: 1,
            bandwidth,
            power,
            kernel: KernelSpec::default(),
        }
    }

    pub fn with_degree(mut self, degree: usize) -> Self {
        self.degree = degree;
        self
    }

    pub fn with_kernel(mut self, kernel: KernelSpec) -> Self {
        self.kernel = kernel;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.bandwidth > 0.0 && self.bandwidth.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "bandwidth must be positive, got {}",
                self.bandwidth
            )));
        }
        if !(self.power >= 1.0 && self.power.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "power must be at least 1, got {}",
                self.power
            )));
        }
        if self.degree > MAX_DEGREE {
            return Err(Error::InvalidConfig(format!(
                "degree {} exceeds the supported maximum {MAX_DEGREE}",
                self.degree
            )));
        }
        Ok(())
    }
}

/// Outcome attached to every estimated point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PointFlag {
    Ok,
    /// Fitted at a lower degree than requested.
    Degraded,
    /// The intercept was not positive; the value comes from a degree-0 refit.
    NonpositiveFallback,
    /// No observation carries kernel weight; the value is NaN.
    EmptyWindow,
}

impl PointFlag {
    pub const ALL: [PointFlag; 4] = [
        PointFlag::Ok,
        PointFlag::Degraded,
        PointFlag::NonpositiveFallback,
        PointFlag::EmptyWindow,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PointFlag::Ok => "ok",
            PointFlag::Degraded => "degraded",
            PointFlag::NonpositiveFallback => "nonpositive_fallback",
            PointFlag::EmptyWindow => "empty_window",
        }
    }
}

impl fmt::Display for PointFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PointFlag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PointFlag::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown point flag '{s}'")))
    }
}

/// A frontier estimate at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub flag: PointFlag,
}

/// Estimates evaluated on a strictly increasing grid.
#[derive(Debug, Clone, PartialEq)]
pub struct FrontierCurve {
    pub grid: Vec<f64>,
    pub values: Vec<f64>,
    pub flags: Vec<PointFlag>,
}

impl FrontierCurve {
    pub fn len(&self) -> usize {
        self.grid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grid.is_empty()
    }

    pub fn count(&self, flag: PointFlag) -> usize {
        self.flags.iter().filter(|&&f| f == flag).count()
    }

    /// Fraction of grid points inside `[lo, hi]` flagged [`PointFlag::Ok`].
    pub fn ok_fraction_within(&self, lo: f64, hi: f64) -> f64 {
        let (inside, ok) = self
            .grid
            .iter()
            .zip(&self.flags)
            .filter(|(&g, _)| g >= lo && g <= hi)
            .fold((0usize, 0usize), |(n, ok), (_, &f)| {
                (n + 1, ok + usize::from(f == PointFlag::Ok))
            });
        if inside == 0 {
            return 0.0;
        }
        ok as f64 / inside as f64
    }
}

fn value_from_fit(fit: &LocalFit, p: f64) -> f64 {
    fit.scale * fit.beta0_scaled.powf(1.0 / p)
}

fn estimate_points(xs: &[f64], ys: &[f64], x: f64, cfg: &EstimatorConfig) -> Estimate {
    let fit = match fit_points(xs, ys, x, cfg) {
        Ok(fit) => fit,
        Err(_) => {
            return Estimate {
                value: f64::NAN,
                flag: PointFlag::EmptyWindow,
            }
        }
    };
    let base_flag = if fit.degraded_to < cfg.degree {
        PointFlag::Degraded
    } else {
        PointFlag::Ok
    };
    if fit.beta0_scaled > 0.0 {
        return Estimate {
            value: value_from_fit(&fit, cfg.power),
            flag: base_flag,
        };
    }
    if fit.window_max == 0.0 {
        return Estimate {
            value: 0.0,
            flag: base_flag,
        };
    }
    // A signed equivalent kernel can push the intercept to zero or below;
    // the degree-0 weights are nonnegative so the refit cannot.
    let refit_cfg = cfg.with_degree(0);
    match fit_points(xs, ys, x, &refit_cfg) {
        Ok(refit) => Estimate {
            value: value_from_fit(&refit, cfg.power).max(0.0),
            flag: PointFlag::NonpositiveFallback,
        },
        Err(_) => Estimate {
            value: f64::NAN,
            flag: PointFlag::EmptyWindow,
        },
    }
}

/// Frontier estimate at `x`. Failures are carried in the returned flag; the
/// only error is an invalid configuration.
pub fn estimate_at(sample: &Sample, x: f64, cfg: &EstimatorConfig) -> Result<Estimate> {
    cfg.validate()?;
    Ok(estimate_points(sample.x(), sample.y(), x, cfg))
}

/// Evaluates [`estimate_at`] at every grid point.
///
/// Observations are indexed by abscissa once so that each point only visits
/// its window. Window members are visited in their original sample order, so
/// every value is bitwise identical to a direct [`estimate_at`] call.
pub fn estimate_grid(
    sample: &Sample,
    grid: &[f64],
    cfg: &EstimatorConfig,
) -> Result<FrontierCurve> {
    cfg.validate()?;
    if grid
        .windows(2)
        .any(|w| w[0].partial_cmp(&w[1]) != Some(std::cmp::Ordering::Less))
    {
        return Err(Error::InvalidConfig(
            "grid must be strictly increasing".into(),
        ));
    }
    let mut order: Vec<usize> = (0..sample.len()).collect();
    order.sort_by(|&a, &b| sample.x()[a].total_cmp(&sample.x()[b]));
    let sorted_x: Vec<f64> = order.iter().map(|&i| sample.x()[i]).collect();
    let h = cfg.bandwidth;

    let mut values = Vec::with_capacity(grid.len());
    let mut flags = Vec::with_capacity(grid.len());
    let mut idx = Vec::new();
    let mut wx = Vec::new();
    let mut wy = Vec::new();
    for &g in grid {
        // Slightly widened bracket; fit_points applies the exact window test.
        let lo = sorted_x.partition_point(|&v| v < g - 2.0 * h);
        let hi = sorted_x.partition_point(|&v| v <= g + 2.0 * h);
        idx.clear();
        idx.extend_from_slice(&order[lo..hi]);
        idx.sort_unstable();
        wx.clear();
        wy.clear();
        wx.extend(idx.iter().map(|&i| sample.x()[i]));
        wy.extend(idx.iter().map(|&i| sample.y()[i]));
        let e = estimate_points(&wx, &wy, g, cfg);
        values.push(e.value);
        flags.push(e.flag);
    }
    Ok(FrontierCurve {
        grid: grid.to_vec(),
        values,
        flags,
    })
}

/// A bandwidth and power pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Smoothing {
    pub h: f64,
    pub p: f64,
}

/// Practical rule: `h = 4 sd(x) n^{-1/2}` and `p = n^{1/2}`.
pub fn select_practical(sample: &Sample) -> Result<Smoothing> {
    let n = sample.len();
    let sd = sample
        .x_std_dev()
        .ok_or(Error::TooFewObservations { n, min: 2 })?;
    if sd == 0.0 {
        return Err(Error::ZeroSpread);
    }
    let root_n = (n as f64).sqrt();
    Ok(Smoothing {
        h: 4.0 * sd / root_n,
        p: root_n,
    })
}

/// Constants of the asymptotic schedule.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScheduleParams {
    pub tau: f64,
    pub c_h: f64,
    pub c_p: f64,
}

impl ScheduleParams {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("tau", self.tau), ("c_h", self.c_h), ("c_p", self.c_p)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::InvalidConfig(format!(
                    "{name} must be positive, got {v}"
                )));
            }
        }
        Ok(())
    }
}

impl ScheduleParams {
    /// Sample size at which [`ScheduleParams::matched_to_practical`] pins the
    /// schedule to the practical rule.
    pub const REFERENCE_N: usize = 500;

    /// Constants for which the schedule returns exactly the practical rule's
    /// `(h, p)` at `n = 500` for a uniform design on `[0, 1]`
    /// (`sd = 1/sqrt(12)`).
    pub fn matched_to_practical(tau: f64) -> Self {
        let log_n = (Self::REFERENCE_N as f64).ln();
        let sd = 1.0 / 12f64.sqrt();
        Self {
            tau,
            c_h: 4.0 * sd * log_n.powf(-1.0 - 0.6 * tau),
            c_p: log_n.powf(1.0 + tau),
        }
    }
}

impl Default for ScheduleParams {
    /// `tau = 1` with [`ScheduleParams::matched_to_practical`] constants.
    fn default() -> Self {
        Self::matched_to_practical(1.0)
    }
}

/// Output of [`select_schedule`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Schedule {
    pub h: f64,
    pub p: f64,
    /// `(p / (n h)) log^2(n h) / (h p)^{2k+2}`; stays bounded along the
    /// schedule when the bias and variance orders balance.
    pub balance_ratio: f64,
}

/// Schedule `h = c_h n^{-1/2} (log n)^{1 + 3 tau / 5}`,
/// `p = c_p n^{1/2} (log n)^{-1 - tau}`.
pub fn select_schedule(n: usize, k: usize, params: &ScheduleParams) -> Result<Schedule> {
    if n < 3 {
        return Err(Error::TooFewObservations { n, min: 3 });
    }
    params.validate()?;
    let nf = n as f64;
    let log_n = nf.ln();
    let h = params.c_h * nf.powf(-0.5) * log_n.powf(1.0 + 0.6 * params.tau);
    let p = params.c_p * nf.sqrt() * log_n.powf(-1.0 - params.tau);
    let nh = nf * h;
    let balance_ratio = (p / nh) * nh.ln().powi(2) / (h * p).powi(2 * k as i32 + 2);
    Ok(Schedule {
        h,
        p,
        balance_ratio,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::E;

    #[test]
    fn constant_window_gives_corrected_level() {
        let c = 0.8;
        let p = 12.0;
        let sample = Sample::new(vec![0.45, 0.5, 0.52, 0.6], vec![c; 4]).unwrap();
        let cfg = EstimatorConfig::new(0.2, p).with_degree(0);
        let e = estimate_at(&sample, 0.5, &cfg).unwrap();
        assert_eq!(e.flag, PointFlag::Ok);
        let expected = c * (p + 1.0).powf(1.0 / p);
        assert!((e.value - expected).abs() < 1e-12 * expected);
    }

    #[test]
    fn p_one_degree_zero_is_twice_the_mean() {
        // Three points at x itself get equal weights.
        let sample = Sample::new(vec![0.5; 3], vec![0.2, 0.4, 0.6]).unwrap();
        let cfg = EstimatorConfig::new(0.1, 1.0).with_degree(0);
        let e = estimate_at(&sample, 0.5, &cfg).unwrap();
        assert!((e.value - 0.8).abs() < 1e-14);
    }

    #[test]
    fn empty_window_is_flagged() {
        let sample = Sample::new(vec![0.0, 0.1], vec![1.0, 1.0]).unwrap();
        let cfg = EstimatorConfig::new(0.05, 3.0);
        let e = estimate_at(&sample, 0.9, &cfg).unwrap();
        assert_eq!(e.flag, PointFlag::EmptyWindow);
        assert!(e.value.is_nan());
    }

    #[test]
    fn nonpositive_intercept_falls_back_to_degree_zero() {
        // At the left edge the linear fit extrapolates a steep decreasing
        // trend below zero.
        let sample = Sample::new(
            vec![0.02, 0.04, 0.9, 0.95, 0.99],
            vec![0.0, 0.0, 1.0, 1.0, 1.0],
        )
        .unwrap();
        let cfg = EstimatorConfig::new(1.0, 1.0).with_degree(1);
        let fit = crate::local_fit_at(&sample, 0.0, &cfg).unwrap();
        assert!(fit.beta0_scaled <= 0.0, "{}", fit.beta0_scaled);
        let e = estimate_at(&sample, 0.0, &cfg).unwrap();
        assert_eq!(e.flag, PointFlag::NonpositiveFallback);
        assert!(e.value >= 0.0 && e.value.is_finite());
    }

    #[test]
    fn invalid_configs_are_rejected() {
        let sample = Sample::new(vec![0.0], vec![1.0]).unwrap();
        for cfg in [
            EstimatorConfig::new(0.0, 2.0),
            EstimatorConfig::new(0.1, 0.5),
            EstimatorConfig::new(0.1, 2.0).with_degree(6),
        ] {
            assert!(estimate_at(&sample, 0.0, &cfg).is_err());
        }
    }

    #[test]
    fn grid_must_increase() {
        let sample = Sample::new(vec![0.0, 1.0], vec![1.0, 1.0]).unwrap();
        let cfg = EstimatorConfig::new(0.5, 2.0);
        assert!(estimate_grid(&sample, &[0.0, 0.0], &cfg).is_err());
        assert!(estimate_grid(&sample, &[0.5, 0.1], &cfg).is_err());
    }

    #[test]
    fn practical_rule_arithmetic() {
        // Symmetric design with sd exactly 0.25 at n = 400.
        let half = 200;
        let a = 0.25 * (399.0f64 / 400.0).sqrt();
        let x: Vec<f64> = (0..half).flat_map(|_| [0.5 - a, 0.5 + a]).collect();
        let sample = Sample::new(x, vec![1.0; 400]).unwrap();
        let s = select_practical(&sample).unwrap();
        assert!((s.h - 0.05).abs() < 1e-12);
        assert!((s.p - 20.0).abs() < 1e-12);
    }

    #[test]
    fn practical_rule_rejects_degenerate_designs() {
        let flat = Sample::new(vec![0.3; 5], vec![1.0; 5]).unwrap();
        assert_eq!(select_practical(&flat), Err(Error::ZeroSpread));
        let single = Sample::new(vec![0.3], vec![1.0]).unwrap();
        assert!(matches!(
            select_practical(&single),
            Err(Error::TooFewObservations { .. })
        ));
    }

    #[test]
    fn schedule_at_e_squared() {
        // n is an integer in the API; evaluate the formula at n = e^2 directly.
        let params = ScheduleParams {
            tau: 1.0,
            c_h: 1.0,
            c_p: 1.0,
        };
        let n = E * E;
        let h = params.c_h * n.powf(-0.5) * n.ln().powf(1.6);
        let p = params.c_p * n.sqrt() * n.ln().powf(-2.0);
        assert!((h - 2f64.powf(1.6) / E).abs() < 1e-14);
        assert!((p - E / 4.0).abs() < 1e-14);
    }

    #[test]
    fn schedule_limits() {
        let params = ScheduleParams {
            tau: 1.0,
            c_h: 1.0,
            c_p: 1.0,
        };
        let a = select_schedule(1_000, 1, &params).unwrap();
        let b = select_schedule(1_000_000, 1, &params).unwrap();
        assert!(b.h < a.h);
        assert!(b.p > a.p);
        assert!(b.h * b.p < a.h * a.p);
        assert!(1e6 * b.h > 1e3 * a.h);
        assert!(select_schedule(2, 1, &params).is_err());
    }

    #[test]
    fn schedule_balance_ratio_is_stable() {
        let params = ScheduleParams {
            tau: 1.0,
            c_h: 1.0,
            c_p: 1.0,
        };
        let ratios: Vec<f64> = [1_000, 10_000, 100_000, 1_000_000]
            .iter()
            .map(|&n| select_schedule(n, 1, &params).unwrap().balance_ratio)
            .collect();
        let max = ratios.iter().cloned().fold(f64::MIN, f64::max);
        let min = ratios.iter().cloned().fold(f64::MAX, f64::min);
        assert!(max / min < 10.0, "{ratios:?}");
    }

    #[test]
    fn matched_constants_reproduce_practical_rule() {
        for tau in [0.5, 1.0, 3.0] {
            let params = ScheduleParams::matched_to_practical(tau);
            let s = select_schedule(500, 1, &params).unwrap();
            let h = 4.0 / 12f64.sqrt() / 500f64.sqrt();
            assert!((s.h - h).abs() < 1e-14, "tau={tau}");
            assert!((s.p - 500f64.sqrt()).abs() < 1e-10, "tau={tau}");
        }
        let d = ScheduleParams::default();
        assert_eq!(d.tau, 1.0);
        assert!((d.c_h - 0.0621).abs() < 1e-3 && (d.c_p - 38.62).abs() < 1e-2);
    }

    #[test]
    fn flags_round_trip_through_strings() {
        for f in PointFlag::ALL {
            assert_eq!(f.as_str().parse::<PointFlag>().unwrap(), f);
        }
    }
}
