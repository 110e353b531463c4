//! Kernel-weighted least-squares polynomial fit of the power-transformed
//! responses at a single query point.
//!
//! The design is built in centered, bandwidth-scaled coordinates
//! `t_i = (x_i - x) / h`, which leaves the intercept unchanged and keeps the
//! normal matrix well scaled. Responses are divided by the window maximum
//! `s` before powering, so the transformed values `(p + 1)(y_i / s)^p` stay in
//! `[0, p + 1]` whatever the size of `p`. The estimator is exactly
//! scale-equivariant, so the factor is restored at the end as `s * beta0^(1/p)`.

use crate::error::{Error, Result};
use crate::frontier::EstimatorConfig;
use crate::kernels::KernelSpec;
use crate::linalg::Ldl;

/// Pivot-ratio threshold above which a fit drops one degree.
pub const CONDITION_LIMIT: f64 = 1e10;

/// Observations `(x_i, y_i)` with `y_i >= 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    x: Vec<f64>,
    y: Vec<f64>,
}

impl Sample {
    pub fn new(x: Vec<f64>, y: Vec<f64>) -> Result<Self> {
        if x.len() != y.len() {
            return Err(Error::InvalidConfig(format!(
                "abscissae and responses differ in length ({} vs {})",
                x.len(),
                y.len()
            )));
        }
        if x.is_empty() {
            return Err(Error::EmptySample);
        }
        for (index, (&xi, &yi)) in x.iter().zip(&y).enumerate() {
            if !xi.is_finite() || !yi.is_finite() {
                return Err(Error::NonFinite { index });
            }
            if yi < 0.0 {
                return Err(Error::NegativeResponse { index });
            }
        }
        Ok(Self { x, y })
    }

    pub fn from_pairs<I: IntoIterator<Item = (f64, f64)>>(pairs: I) -> Result<Self> {
        let (x, y) = pairs.into_iter().unzip();
        Self::new(x, y)
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    pub fn x(&self) -> &[f64] {
        &self.x
    }

    pub fn y(&self) -> &[f64] {
        &self.y
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.x.iter().copied().zip(self.y.iter().copied())
    }

    /// Sample standard deviation of the abscissae, `n - 1` denominator.
    pub fn x_std_dev(&self) -> Option<f64> {
        let n = self.x.len();
        if n < 2 {
            return None;
        }
        let mean = self.x.iter().sum::<f64>() / n as f64;
        let ss: f64 = self.x.iter().map(|&v| (v - mean) * (v - mean)).sum();
        Some((ss / (n - 1) as f64).sqrt())
    }

    /// Returns a copy with every response multiplied by `c > 0`.
    pub fn scaled(&self, c: f64) -> Result<Self> {
        Self::new(self.x.clone(), self.y.iter().map(|&v| v * c).collect())
    }

    /// Returns a copy with every abscissa shifted by `d`.
    pub fn shifted(&self, d: f64) -> Result<Self> {
        Self::new(self.x.iter().map(|&v| v + d).collect(), self.y.clone())
    }
}

/// The solved local fit at one query point.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalFit {
    /// Intercept of the fit to the rescaled transformed responses.
    pub beta0_scaled: f64,
    /// Response rescale factor `s` (window maximum, or 1 when it is zero).
    pub scale: f64,
    /// Largest response in the window.
    pub window_max: f64,
    /// Coefficients in `t = (x_i - x) / h` coordinates, length `degraded_to + 1`.
    pub beta_scaled: Vec<f64>,
    /// Number of observations with `|x_i - x| <= h`.
    pub window_count: usize,
    pub condition_estimate: f64,
    /// Degree actually fitted after the fallback ladder.
    pub degraded_to: usize,
}

/// Normal equations `sum_i w_i t_i^{j+l}` and right-hand side `sum_i w_i t_i^j z_i`
/// with `w_i = K(t_i) / h`.
#[derive(Debug, Clone, PartialEq)]
pub struct DesignSystem {
    degree: usize,
    normal: Vec<f64>,
    rhs: Vec<f64>,
    window_count: usize,
}

impl DesignSystem {
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Row-major `(k+1) x (k+1)` normal matrix.
    pub fn normal_matrix(&self) -> &[f64] {
        &self.normal
    }

    pub fn rhs(&self) -> &[f64] {
        &self.rhs
    }

    pub fn window_count(&self) -> usize {
        self.window_count
    }

    /// Leading block for degree `d <= self.degree`.
    fn truncated(&self, d: usize) -> (Vec<f64>, Vec<f64>) {
        let n = self.degree + 1;
        let m = d + 1;
        let mut a = Vec::with_capacity(m * m);
        for i in 0..m {
            a.extend_from_slice(&self.normal[i * n..i * n + m]);
        }
        (a, self.rhs[..m].to_vec())
    }
}

/// Solution of a [`DesignSystem`].
#[derive(Debug, Clone, PartialEq)]
pub struct SolvedFit {
    pub beta_scaled: Vec<f64>,
    pub condition_estimate: f64,
    pub degraded_to: usize,
}

/// `(p + 1) (y_i / scale)^p`, evaluated in the log domain. Zero responses map
/// to zero.
pub fn power_transform(responses: &[f64], p: f64, scale: f64) -> Vec<f64> {
    debug_assert!(scale > 0.0);
    responses
        .iter()
        .map(|&y| {
            if y == 0.0 {
                0.0
            } else {
                (p + 1.0) * (p * (y / scale).ln()).exp()
            }
        })
        .collect()
}

/// Builds the weighted normal equations at `x`. `z` is aligned with `xs`.
pub fn assemble_system(
    xs: &[f64],
    x: f64,
    h: f64,
    k: usize,
    kernel: KernelSpec,
    z: &[f64],
) -> DesignSystem {
    debug_assert_eq!(xs.len(), z.len());
    let dim = k + 1;
    let mut power_sums = vec![0.0; 2 * k + 1];
    let mut rhs = vec![0.0; dim];
    let mut window_count = 0;
    for (&xi, &zi) in xs.iter().zip(z) {
        let d = xi - x;
        if d.abs() > h {
            continue;
        }
        window_count += 1;
        let t = d / h;
        let w = kernel.eval(t) / h;
        if w == 0.0 {
            continue;
        }
        let mut tp = w;
        for (q, slot) in power_sums.iter_mut().enumerate() {
            *slot += tp;
            if q < dim {
                rhs[q] += tp * zi;
            }
            tp *= t;
        }
    }
    let mut normal = vec![0.0; dim * dim];
    for j in 0..dim {
        for l in 0..dim {
            normal[j * dim + l] = power_sums[j + l];
        }
    }
    DesignSystem {
        degree: k,
        normal,
        rhs,
        window_count,
    }
}

/// Solves the system, stepping down one degree at a time while the window
/// holds too few points or the pivot ratio exceeds [`CONDITION_LIMIT`].
pub fn solve_fit(system: &DesignSystem, x: f64) -> Result<SolvedFit> {
    for d in (0..=system.degree).rev() {
        if system.window_count < d + 1 {
            continue;
        }
        let (a, b) = system.truncated(d);
        let Some(ldl) = Ldl::factor(&a, d + 1) else {
            continue;
        };
        let cond = ldl.pivot_ratio();
        if cond > CONDITION_LIMIT {
            continue;
        }
        return Ok(SolvedFit {
            beta_scaled: ldl.solve(&b),
            condition_estimate: cond,
            degraded_to: d,
        });
    }
    Err(Error::EmptyWindow { x })
}

/// Local polynomial fit at `x` over the whole sample.
pub fn local_fit_at(sample: &Sample, x: f64, cfg: &EstimatorConfig) -> Result<LocalFit> {
    cfg.validate()?;
    fit_points(sample.x(), sample.y(), x, cfg)
}

/// Fit over candidate points `(xs, ys)`; points outside the window are ignored.
pub(crate) fn fit_points(
    xs: &[f64],
    ys: &[f64],
    x: f64,
    cfg: &EstimatorConfig,
) -> Result<LocalFit> {
    let h = cfg.bandwidth;
    let (wx, wy): (Vec<f64>, Vec<f64>) = xs
        .iter()
        .zip(ys)
        .filter(|(&xi, _)| (xi - x).abs() <= h)
        .map(|(&xi, &yi)| (xi, yi))
        .unzip();
    if wx.is_empty() {
        return Err(Error::EmptyWindow { x });
    }
    let window_max = wy.iter().cloned().fold(0.0, f64::max);
    let scale = if window_max > 0.0 { window_max } else { 1.0 };
    let z = power_transform(&wy, cfg.power, scale);
    let system = assemble_system(&wx, x, h, cfg.degree, cfg.kernel, &z);
    let solved = solve_fit(&system, x)?;
    Ok(LocalFit {
        beta0_scaled: solved.beta_scaled[0],
        scale,
        window_max,
        beta_scaled: solved.beta_scaled,
        window_count: system.window_count,
        condition_estimate: solved.condition_estimate,
        degraded_to: solved.degraded_to,
    })
}
