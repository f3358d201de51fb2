mod common;

use intercept::solver::{grid_oracle, refine_ground_truth, solve, EstimatorKind, SolveStatus};
use intercept::{CaptureSpec, DubinsCar, PlantKind, PlantModel, SimpleMotion, TargetTrajectory};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn line_targets_match_quadratic_root() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..200 {
        let (xi, eta) = (rng.gen_range(-4.0..4.0), rng.gen_range(-4.0..4.0));
        let phi = rng.gen_range(0.0..std::f64::consts::TAU);
        let v = rng.gen_range(0.0..0.9);
        let ell = rng.gen_range(0.0..0.5);
        let target = TargetTrajectory::line(xi, eta, phi, v).unwrap();
        let want = common::simple_line_root(xi, eta, phi, v, ell);
        let got = refine_ground_truth(&SimpleMotion, &target, ell).unwrap();
        assert!((got - want).abs() <= 1e-9 * (1.0 + want), "{got} vs {want}");
    }
}

#[test]
fn dubins_first_row() {
    let target = TargetTrajectory::line(0.0, 1.0, 0.0, 0.25).unwrap();
    let capture = CaptureSpec::new(0.1, 1e-9).unwrap();
    let r = solve(&DubinsCar, &target, &capture, EstimatorKind::Best, 10_000);
    assert_eq!(r.status, SolveStatus::Intercepted);
    let oracle = grid_oracle(&DubinsCar, &target, 0.1, 10.0, 1e-7).unwrap();
    assert!((r.t_star - oracle).abs() <= 1e-7);
}

#[test]
fn best_never_needs_more_iterations() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for kind in [PlantKind::Simple, PlantKind::Dubins] {
        for _ in 0..30 {
            let v = rng.gen_range(0.0..0.9);
            let target = common::random_piecewise(&mut rng, v);
            let capture = CaptureSpec::new(0.1, 1e-9).unwrap();
            let simple = solve(kind.model(), &target, &capture, EstimatorKind::Simple, 1_000_000);
            let best = solve(kind.model(), &target, &capture, EstimatorKind::Best, 1_000_000);
            assert!(best.trace.iterations() <= simple.trace.iterations());
            assert!((best.t_star - simple.t_star).abs() <= 1e-6);
        }
    }
}

#[test]
fn iterates_stay_below_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for kind in [PlantKind::Simple, PlantKind::Dubins] {
        let plant: &dyn PlantModel = kind.model();
        for _ in 0..30 {
            let v = rng.gen_range(0.0..0.9);
            let target = common::random_piecewise(&mut rng, v);
            let capture = CaptureSpec::new(0.2, 1e-9).unwrap();
            let oracle = grid_oracle(plant, &target, 0.2, 500.0, 1e-6).unwrap();
            let r = solve(plant, &target, &capture, EstimatorKind::Best, 1_000_000);
            assert!(r.trace.iterates.iter().all(|i| i.t <= oracle + 1e-6));
        }
    }
}

#[test]
fn lissajous_is_flagged() {
    let target = TargetTrajectory::lissajous(-1.0, -2.0, 1.0, std::f64::consts::SQRT_2, 1.0).unwrap();
    let capture = CaptureSpec::new(0.1, 1e-6).unwrap();
    let r = solve(&DubinsCar, &target, &capture, EstimatorKind::Best, 1000);
    assert_eq!(r.notes.len(), 1);
}
