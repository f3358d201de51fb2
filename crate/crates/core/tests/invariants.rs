use std::f64::consts::TAU;

use intercept::solver::{best_estimator, iterates, simple_estimator, EstimatorKind};
use intercept::{PlanarPoint, PlantKind, TargetTrajectory};
use proptest::prelude::*;

fn plant() -> impl Strategy<Value = PlantKind> {
    prop_oneof![Just(PlantKind::Simple), Just(PlantKind::Dubins)]
}

fn point() -> impl Strategy<Value = PlanarPoint> {
    (-8.0..8.0f64, -8.0..8.0f64).prop_map(|(x, y)| PlanarPoint::new(x, y))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn distance_is_one_lipschitz(kind in plant(), t in 0.0..7.0f64, y in point(), dt in -0.5..0.5f64, dy in point()) {
        let p = kind.model();
        let t2 = (t + dt).max(0.0);
        let y2 = y + dy * 0.05;
        let d = p.distance(t, y);
        prop_assert!(d >= 0.0);
        prop_assert!((d - p.distance(t2, y)).abs() <= (t - t2).abs() + 1e-12);
        prop_assert!((d - p.distance(t, y2)).abs() <= y.distance(y2) + 1e-12);
    }

    #[test]
    fn dubins_mirror_symmetry(t in 0.0..7.0f64, y in point()) {
        let p = PlantKind::Dubins.model();
        prop_assert!((p.distance(t, y) - p.distance(t, y.mirrored())).abs() <= 1e-12);
    }

    #[test]
    fn reachable_sets_grow_for_simple_motions(t in 0.0..7.0f64, dt in 0.0..2.0f64, y in point()) {
        let p = PlantKind::Simple.model();
        prop_assert!(p.distance(t + dt, y) <= p.distance(t, y));
    }

    #[test]
    fn estimators_never_step_back(kind in plant(), t in 0.0..7.0f64, y in point(), v in 0.0..2.0f64, ell in 0.0..0.5f64) {
        let p = kind.model();
        let simple = simple_estimator(p, t, y, v, ell);
        let best = best_estimator(p, t, y, v, ell);
        prop_assert!(simple >= t);
        prop_assert!(best >= simple - 1e-12);
    }

    #[test]
    fn iterates_are_monotone(
        kind in plant(),
        xi in -3.0..3.0f64,
        eta in -3.0..3.0f64,
        phi in 0.0..TAU,
        v in 0.0..0.9f64,
        best in any::<bool>(),
    ) {
        let target = TargetTrajectory::line(xi, eta, phi, v).unwrap();
        let est = if best { EstimatorKind::Best } else { EstimatorKind::Simple };
        let ts: Vec<f64> = iterates(kind.model(), &target, 0.1, est).take(30).collect();
        for w in ts.windows(2) {
            prop_assert!(w[1] >= w[0]);
        }
    }
}
