//! Frontier estimation by local polynomial regression on high-power-transformed
//! data.
//!
//! Given observations `(x_i, y_i)` drawn from a support `{0 <= y <= g(x)}`, the
//! estimator fits a kernel-weighted polynomial of degree `k` to the transformed
//! responses `z_i = (p + 1) y_i^p` around a query point and returns the `p`-th
//! root of the fitted intercept as an estimate of the frontier `g(x)`.
//!
//! The crate is organised bottom-up:
//!
//! - [`kernels`]: kernel functions, moment tables and equivalent kernels.
//! - [`local_fit`]: the weighted least-squares fit at one query point.
//! - [`frontier`]: the frontier estimate, grid evaluation and parameter rules.
//! - [`simgen`]: the synthetic generative model used by the experiments.
//! - [`experiments`]: Monte-Carlo replication campaigns and rate studies.

pub mod error;
pub mod experiments;
pub mod frontier;
pub mod kernels;
mod linalg;
pub mod local_fit;
pub mod quadrature;
pub mod simgen;

pub use error::{Error, Result};
pub use frontier::{
    estimate_at, estimate_grid, select_practical, select_schedule, EstimatorConfig, FrontierCurve,
    PointFlag, Schedule, ScheduleParams,
};
pub use kernels::{KernelSpec, MomentTable};
pub use local_fit::{local_fit_at, LocalFit, Sample};
pub use simgen::{SeededRng, SimulationModel};
