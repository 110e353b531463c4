//! Synthetic samples with a known frontier.
//!
//! `X` is uniform on `[0, 1]` and, given `X = x`, `Y` has survival function
//! `P(Y > y | X = x) = (1 - y / g(x))^gamma` on `[0, g(x)]`. Draws use the
//! inverse transform `y = g(x) (1 - V^{1/gamma})` with `V` uniform on `(0, 1)`.

use std::f64::consts::PI;

use rand::distr::{Distribution, Open01, StandardUniform};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::local_fit::Sample;

/// `(1/10 + sin(pi x)) (11/10 - exp(-64 (x - 1/2)^2) / 2)`.
pub fn bimodal_frontier(x: f64) -> f64 {
    let d = x - 0.5;
    (0.1 + (PI * x).sin()) * (1.1 - 0.5 * (-64.0 * d * d).exp())
}

/// Frontier functions available to the generator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "level")]
pub enum Frontier {
    /// See [`bimodal_frontier`].
    Bimodal,
    Constant(f64),
}

impl Frontier {
    #[inline]
    pub fn eval(&self, x: f64) -> f64 {
        match *self {
            Frontier::Bimodal => bimodal_frontier(x),
            Frontier::Constant(c) => c,
        }
    }
}

/// Density of the design variable `X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DesignDensity {
    #[default]
    Uniform01,
}

impl DesignDensity {
    pub fn density(&self, x: f64) -> f64 {
        match self {
            DesignDensity::Uniform01 => {
                if (0.0..=1.0).contains(&x) {
                    1.0
                } else {
                    0.0
                }
            }
        }
    }
}

/// Generative model: tail exponent, frontier and design density.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimulationModel {
    pub gamma: f64,
    pub frontier: Frontier,
    pub design: DesignDensity,
}

impl SimulationModel {
    /// The bimodal frontier with a uniform design.
    pub fn bimodal(gamma: f64) -> Self {
        Self {
            gamma,
            frontier: Frontier::Bimodal,
            design: DesignDensity::Uniform01,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.gamma > 0.0 && self.gamma.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "gamma must be positive, got {}",
                self.gamma
            )));
        }
        let g_min = (0..=1000)
            .map(|i| self.frontier.eval(i as f64 / 1000.0))
            .fold(f64::INFINITY, f64::min);
        if !(g_min > 0.0 && g_min.is_finite()) {
            return Err(Error::InvalidConfig(
                "frontier must be bounded away from zero on [0, 1]".into(),
            ));
        }
        Ok(())
    }

    #[inline]
    pub fn frontier_at(&self, x: f64) -> f64 {
        self.frontier.eval(x)
    }
}

const GOLDEN_GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;

/// SplitMix64 finalizer.
fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Derives the seed of stream `index` from `base`. Distinct indices give
/// statistically independent ChaCha streams.
pub fn derive_seed(base: u64, index: u64) -> u64 {
    mix64(mix64(base.wrapping_add(GOLDEN_GAMMA)) ^ index.wrapping_mul(GOLDEN_GAMMA))
}

/// Seed-deterministic ChaCha8 stream.
#[derive(Debug, Clone)]
pub struct SeededRng {
    seed: u64,
    rng: ChaCha8Rng,
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Stream `index` derived from `base`.
    pub fn derived(base: u64, index: u64) -> Self {
        Self::new(derive_seed(base, index))
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Uniform on `[0, 1)`.
    pub fn uniform(&mut self) -> f64 {
        StandardUniform.sample(&mut self.rng)
    }

    /// Uniform on `(0, 1)`.
    pub fn uniform_open(&mut self) -> f64 {
        Open01.sample(&mut self.rng)
    }
}

/// Inverse transform of the survival law at level `v` in `(0, 1)`.
#[inline]
pub fn response_from_uniform(frontier: f64, gamma: f64, v: f64) -> f64 {
    frontier * (1.0 - v.powf(1.0 / gamma))
}

pub fn sample_y_given_x(x: f64, model: &SimulationModel, rng: &mut SeededRng) -> f64 {
    let v = rng.uniform_open();
    response_from_uniform(model.frontier_at(x), model.gamma, v)
}

/// `n` i.i.d. draws from the model.
pub fn generate_sample(model: &SimulationModel, n: usize, rng: &mut SeededRng) -> Result<Sample> {
    model.validate()?;
    if n == 0 {
        return Err(Error::EmptySample);
    }
    let mut x = Vec::with_capacity(n);
    let mut y = Vec::with_capacity(n);
    for _ in 0..n {
        let xi = match model.design {
            DesignDensity::Uniform01 => rng.uniform(),
        };
        x.push(xi);
        y.push(sample_y_given_x(xi, model, rng));
    }
    Sample::new(x, y)
}
