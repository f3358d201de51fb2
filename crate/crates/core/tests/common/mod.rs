//! Independent reference computations shared by the integration tests.
#![allow(dead_code)]

use std::f64::consts::{FRAC_PI_2, TAU};

use intercept::{PlanarPoint, PlantModel, TargetTrajectory};
use rand::Rng;

/// Endpoint of a unit-speed path from the origin heading +y: a unit-radius
/// turn by `first` radians (positive = left), then either a straight run or a
/// second turn (positive = left) for the remaining time.
fn two_piece_endpoint(first: f64, second_turn: Option<f64>, rest: f64) -> PlanarPoint {
    let mut x = 0.0;
    let mut y = 0.0;
    let mut h = FRAC_PI_2;
    let arc = |x: &mut f64, y: &mut f64, h: &mut f64, signed: f64| {
        let s = signed.signum();
        if signed == 0.0 {
            return;
        }
        let cx = *x - s * h.sin();
        let cy = *y + s * h.cos();
        let nh = *h + signed;
        *x = cx + s * nh.sin();
        *y = cy - s * nh.cos();
        *h = nh;
    };
    arc(&mut x, &mut y, &mut h, first);
    match second_turn {
        Some(sign) => arc(&mut x, &mut y, &mut h, sign * rest),
        None => {
            x += rest * h.cos();
            y += rest * h.sin();
        }
    }
    PlanarPoint::new(x, y)
}

type Family = (f64, Box<dyn Fn(f64) -> PlanarPoint>);

/// Reachable endpoints of turn-straight and turn-turn paths of total length `t`,
/// parameterized by the length of the first turn.
fn families(t: f64) -> Vec<Family> {
    let cs_end = t.min(TAU);
    let cc_end = t.min(TAU);
    vec![
        (cs_end, Box::new(move |s| two_piece_endpoint(-s, None, t - s))),
        (cs_end, Box::new(move |s| two_piece_endpoint(s, None, t - s))),
        (cc_end, Box::new(move |s| two_piece_endpoint(s, Some(-1.0), t - s))),
        (cc_end, Box::new(move |s| two_piece_endpoint(-s, Some(1.0), t - s))),
    ]
}

/// Brute-force distance from `y` to the set of CS/CC endpoints at time `t`:
/// dense sampling of every family followed by golden-section refinement
/// around the best samples. Every sampled point is reachable, so this never
/// undershoots the true distance to `R(t)`.
pub fn dubins_boundary_distance(t: f64, y: PlanarPoint, samples: usize) -> f64 {
    if t == 0.0 {
        return y.norm();
    }
    let mut best = f64::INFINITY;
    for (end, f) in families(t) {
        if end <= 0.0 {
            continue;
        }
        let h = end / samples as f64;
        let values: Vec<f64> = (0..=samples).map(|k| f(h * k as f64).distance(y)).collect();
        // refine local minima among the samples
        let mut order: Vec<usize> = (0..=samples)
            .filter(|&k| {
                let left = if k == 0 { f64::INFINITY } else { values[k - 1] };
                let right = if k == samples { f64::INFINITY } else { values[k + 1] };
                values[k] <= left && values[k] <= right
            })
            .collect();
        order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
        for &k in order.iter().take(4) {
            let mut lo = (h * (k as f64 - 1.0)).max(0.0);
            let mut hi = (h * (k as f64 + 1.0)).min(end);
            let g = 0.5 * (5f64.sqrt() - 1.0);
            for _ in 0..100 {
                let a = hi - g * (hi - lo);
                let b = lo + g * (hi - lo);
                if f(a).distance(y) < f(b).distance(y) {
                    hi = b;
                } else {
                    lo = a;
                }
            }
            best = best.min(f(0.5 * (lo + hi)).distance(y)).min(values[k]);
        }
    }
    best
}

/// Oracle distance: zero on the set, brute force outside.
pub fn dubins_oracle(plant: &dyn PlantModel, t: f64, y: PlanarPoint, samples: usize) -> f64 {
    if plant.contains(t, y) {
        0.0
    } else {
        dubins_boundary_distance(t, y, samples)
    }
}

/// Random admissible Dubins endpoint at time `t` from a three-piece control sequence.
pub fn random_dubins_endpoint<R: Rng>(rng: &mut R, t: f64) -> PlanarPoint {
    let mut x = 0.0;
    let mut y = 0.0;
    let mut h = FRAC_PI_2;
    let mut left = t;
    for piece in 0..3 {
        let dur = if piece == 2 { left } else { rng.gen_range(0.0..=left) };
        left -= dur;
        let u: f64 = [-1.0, 0.0, 1.0][rng.gen_range(0..3)];
        if u == 0.0 {
            x += dur * h.cos();
            y += dur * h.sin();
        } else {
            let cx = x - u * h.sin();
            let cy = y + u * h.cos();
            h += u * dur;
            x = cx + u * h.sin();
            y = cy - u * h.cos();
        }
    }
    PlanarPoint::new(x, y)
}

/// Smallest non-negative root of `|y0 + v t d| = t + ell` (simple motions, straight-line target).
pub fn simple_line_root(xi: f64, eta: f64, phi: f64, v: f64, ell: f64) -> f64 {
    let (dx, dy) = (phi.cos(), phi.sin());
    let p = xi * dx + eta * dy;
    let r2 = xi * xi + eta * eta;
    // (1 - v^2) t^2 + 2 (ell - v p) t + ell^2 - r2 = 0
    let a = 1.0 - v * v;
    let b = 2.0 * (ell - v * p);
    let c = ell * ell - r2;
    if a.abs() < 1e-15 {
        return -c / b;
    }
    let disc = (b * b - 4.0 * a * c).max(0.0).sqrt();
    let mut roots = [(-b - disc) / (2.0 * a), (-b + disc) / (2.0 * a)];
    roots.sort_by(f64::total_cmp);
    roots
        .into_iter()
        .find(|&r| r >= 0.0 && r + ell >= 0.0)
        .unwrap_or(f64::INFINITY)
}

/// Random piecewise-linear trajectory whose segment speeds never exceed `v`.
pub fn random_piecewise<R: Rng>(rng: &mut R, v: f64) -> TargetTrajectory {
    let mut t = 0.0;
    let r = rng.gen_range(1.0..4.0);
    let a = rng.gen_range(0.0..TAU);
    let mut p = PlanarPoint::from_polar(r, a);
    let mut samples = vec![(0.0, p)];
    for _ in 0..rng.gen_range(1..8) {
        let dt = rng.gen_range(0.2..2.0);
        let speed = rng.gen_range(0.0..=v);
        let dir = rng.gen_range(0.0..TAU);
        t += dt;
        p = p + PlanarPoint::from_polar(speed * dt, dir);
        samples.push((t, p));
    }
    TargetTrajectory::piecewise_linear_with_bound(samples, v).expect("valid samples")
}
