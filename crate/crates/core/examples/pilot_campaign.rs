//! Pilot run for the reduced-scale campaign (gamma = 1, n = 500, m = 100,
//! k = 1, practical rule) over seeds 1..=20. Prints one line per seed and a
//! summary; the acceptance bound on the median L1 error is frozen from it.
//!
//! cargo run --release -p lpfrontier --example pilot_campaign

use lpfrontier::experiments::{median, run_replications, ExperimentConfig};
use lpfrontier::SimulationModel;

fn main() -> lpfrontier::Result<()> {
    let mut medians = Vec::new();
    for seed in 1..=20u64 {
        let cfg = ExperimentConfig::new(SimulationModel::bimodal(1.0), 500, 100, seed);
        let report = run_replications(&cfg)?;
        let med = report.median_l1().unwrap_or(f64::NAN);
        let ok_min = report
            .replications
            .iter()
            .map(|r| r.interior_ok_fraction)
            .fold(f64::INFINITY, f64::min);
        println!(
            "seed={seed:>2} median_l1={med:.6} failed={} min_interior_ok={ok_min:.4}",
            report.failed_replications()
        );
        medians.push(med);
    }
    let max = medians.iter().copied().fold(f64::MIN, f64::max);
    let min = medians.iter().copied().fold(f64::MAX, f64::min);
    println!(
        "pilot: median of medians={:.6} min={min:.6} max={max:.6}",
        median(&medians).unwrap_or(f64::NAN)
    );
    Ok(())
}
