use lpfrontier::experiments::{ks_critical_1pct, ks_uniform};
use lpfrontier::simgen::{generate_sample, SeededRng};
use lpfrontier::SimulationModel;

#[test]
fn survival_transform_is_uniform() {
    let n = 10_000;
    for (gamma, seed) in [(1.0, 1), (2.0, 2), (3.0, 3), (0.5, 4)] {
        let model = SimulationModel::bimodal(gamma);
        let s = generate_sample(&model, n, &mut SeededRng::new(seed)).unwrap();
        let u: Vec<f64> = s
            .iter()
            .map(|(x, y)| (1.0 - y / model.frontier_at(x)).powf(gamma))
            .collect();
        let d = ks_uniform(&u);
        assert!(d < ks_critical_1pct(n), "gamma={gamma}: D={d}");
    }
}

#[test]
fn draws_stay_under_the_frontier() {
    for gamma in [0.3, 1.0, 3.0, 10.0] {
        let model = SimulationModel::bimodal(gamma);
        let s = generate_sample(&model, 20_000, &mut SeededRng::new(17)).unwrap();
        for (x, y) in s.iter() {
            assert!((0.0..1.0).contains(&x));
            assert!(y >= 0.0 && y <= model.frontier_at(x), "x={x} y={y}");
        }
    }
}

#[test]
fn transformed_response_has_mean_frontier_power() {
    let (n, p) = (100_000, 5.0);
    let model = SimulationModel::bimodal(1.0);
    let s = generate_sample(&model, n, &mut SeededRng::new(31)).unwrap();
    let mean = s
        .iter()
        .map(|(x, y)| (p + 1.0) * y.powf(p) / model.frontier_at(x).powf(p))
        .sum::<f64>()
        / n as f64;
    assert!((0.98..=1.02).contains(&mean), "{mean}");
}

#[test]
fn design_is_uniform() {
    let n = 10_000;
    let s = generate_sample(&SimulationModel::bimodal(1.0), n, &mut SeededRng::new(8)).unwrap();
    assert!(ks_uniform(s.x()) < ks_critical_1pct(n));
}
