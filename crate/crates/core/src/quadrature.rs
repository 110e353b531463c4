//! Gauss-Legendre quadrature on finite intervals, with an adaptive bisection
//! fallback for integrands that a single fixed-order rule does not resolve.

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Number of nodes of the base rule.
pub const ORDER: usize = 64;

const MAX_DEPTH: u32 = 40;

/// A fixed-order Gauss-Legendre rule on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Builds the `n`-point rule. Nodes are the roots of `P_n`, located by
    /// Newton iteration from the Chebyshev-like initial guesses.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "Gauss-Legendre rule needs at least one node");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            let mut z = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 1.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, z);
                dp = d;
                let dz = p / d;
                z -= dz;
                if dz.abs() <= 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(n, z);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - z * z) * dp * dp);
            nodes[i] = -z;
            nodes[n - 1 - i] = z;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        Self { nodes, weights }
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Applies the rule on `[a, b]`.
    pub fn integrate<F: Fn(f64) -> f64>(&self, a: f64, b: f64, f: F) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let sum: f64 = self
            .nodes
            .iter()
            .zip(&self.weights)
            .map(|(&t, &w)| w * f(mid + half * t))
            .sum();
        half * sum
    }
}

/// Returns `(P_n(z), P_n'(z))` by the three-term recurrence.
fn legendre_with_derivative(n: usize, z: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = z;
    if n == 0 {
        return (1.0, 0.0);
    }
    for j in 2..=n {
        let jf = j as f64;
        let p2 = ((2.0 * jf - 1.0) * z * p1 - (jf - 1.0) * p0) / jf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (z * p1 - p0) / (z * z - 1.0);
    (p1, d)
}

/// The shared 64-node rule.
pub fn base_rule() -> &'static GaussLegendre {
    static RULE: OnceLock<GaussLegendre> = OnceLock::new();
    RULE.get_or_init(|| GaussLegendre::new(ORDER))
}

/// Integrates `f` over `[a, b]` to absolute tolerance `tol`.
///
/// The whole interval is first compared against the sum over its two halves;
/// when they disagree by more than `tol` each half is refined independently
/// with half the tolerance.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<f64> {
    let rule = base_rule();
    let whole = rule.integrate(a, b, &f);
    adaptive(rule, &f, a, b, whole, tol, 0)
}

fn adaptive<F: Fn(f64) -> f64>(
    rule: &GaussLegendre,
    f: &F,
    a: f64,
    b: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> Result<f64> {
    let mid = 0.5 * (a + b);
    let left = rule.integrate(a, mid, f);
    let right = rule.integrate(mid, b, f);
    let refined = left + right;
    let err = (refined - whole).abs();
    if err <= tol {
        return Ok(refined);
    }
    if depth >= MAX_DEPTH {
        return Err(Error::QuadratureNotConverged { tol, err });
    }
    let l = adaptive(rule, f, a, mid, left, 0.5 * tol, depth + 1)?;
    let r = adaptive(rule, f, mid, b, right, 0.5 * tol, depth + 1)?;
    Ok(l + r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_sum_to_interval_length() {
        let rule = base_rule();
        let s: f64 = rule.weights().iter().sum();
        assert!((s - 2.0).abs() < 1e-13);
    }

    #[test]
    fn nodes_are_sorted_and_symmetric() {
        let rule = base_rule();
        let nodes = rule.nodes();
        assert!(nodes.windows(2).all(|w| w[0] < w[1]));
        for i in 0..ORDER {
            assert!((nodes[i] + nodes[ORDER - 1 - i]).abs() < 1e-15);
        }
    }

    #[test]
    fn exact_for_high_degree_polynomials() {
        // 64 nodes integrate degree 127 exactly; check x^126 on [-1, 1].
        let got = integrate(|x| x.powi(126), -1.0, 1.0, 1e-14).unwrap();
        assert!((got - 2.0 / 127.0).abs() < 1e-14);
    }

    #[test]
    fn small_rule_matches_tabulated_nodes() {
        let rule = GaussLegendre::new(3);
        let r = (0.6f64).sqrt();
        assert!((rule.nodes()[0] + r).abs() < 1e-15);
        assert!(rule.nodes()[1].abs() < 1e-15);
        assert!((rule.weights()[1] - 8.0 / 9.0).abs() < 1e-15);
        assert!((rule.weights()[0] - 5.0 / 9.0).abs() < 1e-15);
    }

    #[test]
    fn adaptive_refines_kinked_integrand() {
        let got = integrate(|x: f64| x.abs(), -1.0, 0.7, 1e-12).unwrap();
        assert!((got - (0.5 + 0.245)).abs() < 1e-12);
    }

    #[test]
    fn reports_non_convergence() {
        let err = integrate(
            |x: f64| if x > 0.1234567 { 1.0 } else { 0.0 },
            0.0,
            1.0,
            1e-6,
        );
        assert!(matches!(err, Err(Error::QuadratureNotConverged { .. })));
    }
}
