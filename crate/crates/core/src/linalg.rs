//! Dense solves for the small symmetric systems that appear in local fits and
//! kernel moment tables. Sizes never exceed 6x6.

/// Result of an `L D L^T` factorization without pivoting.
#[derive(Debug, Clone)]
pub(crate) struct Ldl {
    n: usize,
    lower: Vec<f64>,
    diag: Vec<f64>,
}

impl Ldl {
    /// Factorizes the symmetric matrix `a` (row-major, `n x n`). Returns
    /// `None` when a pivot is not strictly positive or not finite.
    pub(crate) fn factor(a: &[f64], n: usize) -> Option<Self> {
        debug_assert_eq!(a.len(), n * n);
        let mut lower = vec![0.0; n * n];
        let mut diag = vec![0.0; n];
        for j in 0..n {
            let mut d = a[j * n + j];
            for s in 0..j {
                d -= lower[j * n + s] * lower[j * n + s] * diag[s];
            }
            if !d.is_finite() || d <= 0.0 {
                return None;
            }
            diag[j] = d;
            lower[j * n + j] = 1.0;
            for i in (j + 1)..n {
                let mut v = a[i * n + j];
                for s in 0..j {
                    v -= lower[i * n + s] * lower[j * n + s] * diag[s];
                }
                lower[i * n + j] = v / d;
            }
        }
        Some(Self { n, lower, diag })
    }

    /// Ratio of the largest to the smallest pivot.
    pub(crate) fn pivot_ratio(&self) -> f64 {
        let max = self.diag.iter().cloned().fold(f64::MIN, f64::max);
        let min = self.diag.iter().cloned().fold(f64::MAX, f64::min);
        max / min
    }

    pub(crate) fn solve(&self, b: &[f64]) -> Vec<f64> {
        let n = self.n;
        let mut y = b.to_vec();
        for i in 0..n {
            for s in 0..i {
                y[i] -= self.lower[i * n + s] * y[s];
            }
        }
        for (yi, d) in y.iter_mut().zip(&self.diag) {
            *yi /= d;
        }
        for i in (0..n).rev() {
            for s in (i + 1)..n {
                y[i] -= self.lower[s * n + i] * y[s];
            }
        }
        y
    }
}
