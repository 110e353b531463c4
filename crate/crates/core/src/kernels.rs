//! Symmetric kernels supported on `[-1, 1]`, their moments, and the moment
//! tables that drive the asymptotic bias and variance of local polynomial
//! fits.
//!
//! For a kernel `K` the moments are `mu_j = ∫ t^j K(t) dt` and
//! `nu_j = ∫ t^j K(t)^2 dt`. A [`MomentTable`] of degree `k` collects the
//! Gram matrices `S = [mu_{j+l}]` and `S* = [nu_{j+l}]`, the first row `u`
//! of `S^{-1}` and the variance constant `C = e1' S^{-1} S* S^{-1} e1`.
//! Moments are always computed by quadrature; closed forms only serve as
//! test oracles.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Ldl;
use crate::quadrature;

/// Highest polynomial degree accepted by moment tables and local fits.
/// The conditioning of `S` deteriorates quickly with the degree.
pub const MAX_DEGREE: usize = 5;

/// Absolute tolerance used for every kernel moment.
pub const MOMENT_TOL: f64 = 1e-12;

/// A symmetric probability density supported on `[-1, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KernelSpec {
    /// `cos^2(pi t / 2)` on `[-1, 1]`.
    #[default]
    CosineSquared,
    /// `(15/16)(1 - t^2)^2`.
    Biweight,
    /// `(3/4)(1 - t^2)`.
    Epanechnikov,
}

impl KernelSpec {
    pub const ALL: [KernelSpec; 3] = [
        KernelSpec::CosineSquared,
        KernelSpec::Biweight,
        KernelSpec::Epanechnikov,
    ];

    pub fn name(self) -> &'static str {
        match self {
            KernelSpec::CosineSquared => "cosine_squared",
            KernelSpec::Biweight => "biweight",
            KernelSpec::Epanechnikov => "epanechnikov",
        }
    }

    /// Evaluates `K(t)`; zero outside `[-1, 1]`.
    #[inline]
    pub fn eval(self, t: f64) -> f64 {
        let a = t.abs();
        if a > 1.0 {
            return 0.0;
        }
        match self {
            KernelSpec::CosineSquared => {
                let c = (0.5 * PI * a).cos();
                c * c
            }
            KernelSpec::Biweight => {
                let v = 1.0 - a * a;
                0.9375 * v * v
            }
            KernelSpec::Epanechnikov => 0.75 * (1.0 - a * a),
        }
    }

    /// `mu_j` (or `nu_j` when `squared`) by adaptive quadrature on `[-1, 1]`.
    pub fn moment(self, j: u32, squared: bool) -> Result<f64> {
        let power = j as i32;
        quadrature::integrate(
            |t| {
                let k = self.eval(t);
                let w = if squared { k * k } else { k };
                t.powi(power) * w
            },
            -1.0,
            1.0,
            MOMENT_TOL,
        )
    }
}

impl fmt::Display for KernelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for KernelSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "cosine_squared" | "cos2" | "cosine2" => Ok(KernelSpec::CosineSquared),
            "biweight" | "bisquare" | "quartic" => Ok(KernelSpec::Biweight),
            "epanechnikov" => Ok(KernelSpec::Epanechnikov),
            other => Err(Error::InvalidConfig(format!("unknown kernel '{other}'"))),
        }
    }
}

/// Kernel moments and derived quantities for a fixed degree `k`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MomentTable {
    kernel: KernelSpec,
    degree: usize,
    mu: Vec<f64>,
    nu: Vec<f64>,
    s: Vec<f64>,
    s_star: Vec<f64>,
    u: Vec<f64>,
    c: f64,
}

impl MomentTable {
    /// Builds the table for `kernel` at degree `k <= MAX_DEGREE`.
    pub fn build(kernel: KernelSpec, k: usize) -> Result<Self> {
        if k > MAX_DEGREE {
            return Err(Error::InvalidConfig(format!(
                "degree {k} exceeds the supported maximum {MAX_DEGREE}"
            )));
        }
        let mu = (0..=(2 * k + 1) as u32)
            .map(|j| kernel.moment(j, false))
            .collect::<Result<Vec<_>>>()?;
        let nu = (0..=(2 * k) as u32)
            .map(|j| kernel.moment(j, true))
            .collect::<Result<Vec<_>>>()?;

        let dim = k + 1;
        let mut s = vec![0.0; dim * dim];
        let mut s_star = vec![0.0; dim * dim];
        for j in 0..dim {
            for l in 0..dim {
                s[j * dim + l] = mu[j + l];
                s_star[j * dim + l] = nu[j + l];
            }
        }

        let ldl = Ldl::factor(&s, dim).ok_or(Error::SingularMoments { degree: k })?;
        let mut e1 = vec![0.0; dim];
        e1[0] = 1.0;
        // S is symmetric, so the first row of S^{-1} is S^{-1} e1.
        let u = ldl.solve(&e1);
        let c = quadratic_form(&s_star, &u);

        Ok(Self {
            kernel,
            degree: k,
            mu,
            nu,
            s,
            s_star,
            u,
            c,
        })
    }

    pub fn kernel(&self) -> KernelSpec {
        self.kernel
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `mu_0 ..= mu_{2k+1}`.
    pub fn mu(&self) -> &[f64] {
        &self.mu
    }

    /// `nu_0 ..= nu_{2k}`.
    pub fn nu(&self) -> &[f64] {
        &self.nu
    }

    /// `S`, row-major `(k+1) x (k+1)`.
    pub fn s(&self) -> &[f64] {
        &self.s
    }

    /// `S*`, row-major `(k+1) x (k+1)`.
    pub fn s_star(&self) -> &[f64] {
        &self.s_star
    }

    /// First row of `S^{-1}`.
    pub fn u(&self) -> &[f64] {
        &self.u
    }

    /// Variance constant `e1' S^{-1} S* S^{-1} e1`.
    pub fn variance_constant(&self) -> f64 {
        self.c
    }

    /// `max_i |(S u - e1)_i|`.
    pub fn first_row_residual(&self) -> f64 {
        let dim = self.degree + 1;
        (0..dim)
            .map(|i| {
                let row: f64 = (0..dim).map(|j| self.s[i * dim + j] * self.u[j]).sum();
                let target = if i == 0 { 1.0 } else { 0.0 };
                (row - target).abs()
            })
            .fold(0.0, f64::max)
    }

    /// Equivalent kernel of the local intercept: `sum_j u_j t^j K(t)`.
    pub fn equivalent_kernel(&self, t: f64) -> f64 {
        let k = self.kernel.eval(t);
        if k == 0.0 {
            return 0.0;
        }
        let poly = self.u.iter().rev().fold(0.0, |acc, &c| acc * t + c);
        poly * k
    }
}

fn quadratic_form(m: &[f64], v: &[f64]) -> f64 {
    let n = v.len();
    (0..n)
        .map(|i| v[i] * (0..n).map(|j| m[i * n + j] * v[j]).sum::<f64>())
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    const MU2_COS2: f64 = 1.0 / 3.0 - 2.0 / (PI * PI);

    #[test]
    fn cosine_squared_values() {
        let k = KernelSpec::CosineSquared;
        assert_eq!(k.eval(0.0), 1.0);
        assert!(k.eval(1.0).abs() < 1e-32);
        assert!((k.eval(0.5) - 0.5).abs() < 1e-15);
        assert_eq!(k.eval(1.0001), 0.0);
        assert_eq!(k.eval(-3.0), 0.0);
    }

    #[test]
    fn kernels_are_symmetric_nonnegative_densities() {
        for kernel in KernelSpec::ALL {
            for i in 0..=400 {
                let t = -2.0 + i as f64 * 0.01;
                let v = kernel.eval(t);
                assert!(v >= 0.0);
                assert_eq!(v, kernel.eval(-t));
                if t.abs() > 1.0 {
                    assert_eq!(v, 0.0);
                }
            }
            assert!(
                (kernel.moment(0, false).unwrap() - 1.0).abs() < 1e-12,
                "{kernel}"
            );
        }
    }

    #[test]
    fn cosine_squared_moments_match_closed_forms() {
        let k = KernelSpec::CosineSquared;
        assert!((k.moment(0, false).unwrap() - 1.0).abs() < 1e-12);
        assert!(k.moment(1, false).unwrap().abs() < 1e-12);
        assert!((k.moment(2, false).unwrap() - MU2_COS2).abs() < 1e-12);
        assert!((k.moment(2, false).unwrap() - 0.130690).abs() < 1e-6);
        // ∫cos^4(pi t / 2) dt = 3/4.
        assert!((k.moment(0, true).unwrap() - 0.75).abs() < 1e-12);
    }

    #[test]
    fn polynomial_kernel_moments_match_closed_forms() {
        // Epanechnikov: mu_2 = 1/5, nu_0 = 3/5. Biweight: mu_2 = 1/7, nu_0 = 5/7.
        let e = KernelSpec::Epanechnikov;
        assert!((e.moment(2, false).unwrap() - 0.2).abs() < 1e-13);
        assert!((e.moment(0, true).unwrap() - 0.6).abs() < 1e-13);
        let b = KernelSpec::Biweight;
        assert!((b.moment(2, false).unwrap() - 1.0 / 7.0).abs() < 1e-13);
        assert!((b.moment(0, true).unwrap() - 5.0 / 7.0).abs() < 1e-13);
    }

    #[test]
    fn degree_zero_table() {
        let t = MomentTable::build(KernelSpec::CosineSquared, 0).unwrap();
        assert_eq!(t.u().len(), 1);
        assert!((t.u()[0] - 1.0).abs() < 1e-12);
        assert!((t.variance_constant() - 0.75).abs() < 1e-12);
        assert!((t.equivalent_kernel(0.5) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn degree_one_table_reduces_to_kernel() {
        let t = MomentTable::build(KernelSpec::CosineSquared, 1).unwrap();
        assert!((t.u()[0] - 1.0).abs() < 1e-12);
        assert!(t.u()[1].abs() < 1e-12);
        for i in 0..=20 {
            let x = -1.0 + 0.1 * i as f64;
            let kk = KernelSpec::CosineSquared.eval(x);
            assert!((t.equivalent_kernel(x) - kk).abs() < 1e-12);
        }
    }

    #[test]
    fn tables_satisfy_defining_system_up_to_cap() {
        for kernel in KernelSpec::ALL {
            for k in 0..=MAX_DEGREE {
                let t = MomentTable::build(kernel, k).unwrap();
                assert!(t.first_row_residual() < 1e-12, "{kernel} k={k}");
                assert!(t.variance_constant() > 0.0);
                let dim = k + 1;
                for i in 0..dim {
                    for j in 0..dim {
                        assert_eq!(t.s()[i * dim + j], t.s()[j * dim + i]);
                        assert_eq!(t.s_star()[i * dim + j], t.s_star()[j * dim + i]);
                    }
                }
                for (j, m) in t.mu().iter().enumerate() {
                    if j % 2 == 1 {
                        assert!(m.abs() < 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn degree_cap_is_enforced() {
        assert!(matches!(
            MomentTable::build(KernelSpec::CosineSquared, MAX_DEGREE + 1),
            Err(Error::InvalidConfig(_))
        ));
    }

    #[test]
    fn kernel_names_round_trip() {
        for k in KernelSpec::ALL {
            assert_eq!(k.name().parse::<KernelSpec>().unwrap(), k);
        }
        assert!("gaussian".parse::<KernelSpec>().is_err());
    }
}
