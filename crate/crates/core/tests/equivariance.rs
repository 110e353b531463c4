use lpfrontier::simgen::{generate_sample, SeededRng};
use lpfrontier::{estimate_at, EstimatorConfig, KernelSpec, PointFlag, SimulationModel};
use proptest::prelude::*;

fn kernel_strategy() -> impl Strategy<Value = KernelSpec> {
    prop::sample::select(KernelSpec::ALL.to_vec())
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn response_scaling_scales_the_estimate(
        seed in any::<u64>(),
        n in 20usize..300,
        x in 0.05f64..0.95,
        h in 0.05f64..0.3,
        p in 1.0f64..60.0,
        k in 0usize..=3,
        c in prop::sample::select(vec![1e-3, 1.0, 1e3]),
        kernel in kernel_strategy(),
    ) {
        let s = generate_sample(&SimulationModel::bimodal(1.0), n, &mut SeededRng::new(seed)).unwrap();
        let cfg = EstimatorConfig::new(h, p).with_degree(k).with_kernel(kernel);
        let a = estimate_at(&s, x, &cfg).unwrap();
        let b = estimate_at(&s.scaled(c).unwrap(), x, &cfg).unwrap();
        prop_assert_eq!(a.flag, b.flag);
        if a.flag != PointFlag::EmptyWindow && a.value > 0.0 {
            prop_assert!(rel(b.value, c * a.value) <= 1e-10, "{} vs {}", b.value, c * a.value);
        }
    }

    #[test]
    fn shifting_design_and_query_leaves_the_estimate(
        seed in any::<u64>(),
        n in 20usize..300,
        x in 0.05f64..0.95,
        h in 0.05f64..0.3,
        p in 1.0f64..60.0,
        k in 0usize..=3,
        shift in -10.0f64..10.0,
    ) {
        let s = generate_sample(&SimulationModel::bimodal(2.0), n, &mut SeededRng::new(seed)).unwrap();
        let cfg = EstimatorConfig::new(h, p).with_degree(k);
        let a = estimate_at(&s, x, &cfg).unwrap();
        let b = estimate_at(&s.shifted(shift).unwrap(), x + shift, &cfg).unwrap();
        prop_assert_eq!(a.flag, b.flag);
        if a.flag != PointFlag::EmptyWindow && a.value > 0.0 {
            prop_assert!(rel(b.value, a.value) <= 1e-10, "{} vs {}", b.value, a.value);
        }
    }
}
