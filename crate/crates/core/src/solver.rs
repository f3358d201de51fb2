//! Universal lower estimators and the fixed-point interception solver.
//!
//! Starting from `t = 0`, each step jumps to the earliest time at which any
//! target with speed at most `v` could possibly be captured. The iterates
//! increase monotonically and never pass the true interception time.

use serde::{Deserialize, Serialize};

use crate::capture::CaptureSpec;
use crate::error::{Error, Result};
use crate::models::{InterceptionPath, PlantModel};
use crate::point::PlanarPoint;
use crate::trajectory::TargetTrajectory;

/// Consecutive negligible steps after which the solver gives up.
pub const UNDERFLOW_STREAK: usize = 10;
/// A step below `STEP_UNDERFLOW * (1 + t)` counts as negligible.
pub const STEP_UNDERFLOW: f64 = 1e-15;
/// Iteration cap for the inner root search of the best estimator.
pub const INNER_MAX_ITERATIONS: usize = 100_000;
/// Step tolerance of [`refine_ground_truth`], relative to `1 + t`.
pub const REFINE_STEP_TOLERANCE: f64 = 1e-14;
pub const REFINE_MAX_ITERATIONS: usize = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EstimatorKind {
    /// `t + (rho - ell) / (1 + v)`: closing at combined speed `1 + v`.
    Simple,
    /// First root of `rho(s, y) = v (s - t) + ell`, the largest safe step.
    #[default]
    Best,
}

impl EstimatorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EstimatorKind::Simple => "simple",
            EstimatorKind::Best => "best",
        }
    }
}

/// The simple universal lower estimator.
pub fn simple_estimator(plant: &dyn PlantModel, t: f64, y: PlanarPoint, v: f64, ell: f64) -> f64 {
    let rho = plant.distance(t, y);
    if rho > ell {
        t + (rho - ell) / (1.0 + v)
    } else {
        t
    }
}

/// The best universal lower estimator: the plant's closed form where it has
/// one, otherwise [`best_estimator_iterative`].
pub fn best_estimator(plant: &dyn PlantModel, t: f64, y: PlanarPoint, v: f64, ell: f64) -> f64 {
    if plant.capabilities().has_closed_form_best_estimator {
        if let Some(step) = plant.closed_form_best_estimator(t, y, v, ell) {
            return step;
        }
    }
    best_estimator_iterative(plant, t, y, v, ell)
}

/// Smallest `s >= t` with `rho(s, y) <= v (s - t) + ell`, by the fixed point
/// `s <- s + (rho(s, y) - v (s - t) - ell) / (1 + v)` started at `s = t`.
///
/// The left side minus the right side is `(1 + v)`-Lipschitz in `s`, so the
/// iteration approaches the first root from below and never passes it. The
/// returned value is a valid lower estimate even if the cap is hit.
pub fn best_estimator_iterative(plant: &dyn PlantModel, t: f64, y: PlanarPoint, v: f64, ell: f64) -> f64 {
    let mut s = t;
    for _ in 0..INNER_MAX_ITERATIONS {
        let gap = plant.distance(s, y) - v * (s - t) - ell;
        if gap <= 0.0 {
            break;
        }
        let step = gap / (1.0 + v);
        if step < STEP_UNDERFLOW * (1.0 + s) {
            break;
        }
        s += step;
    }
    s
}

pub fn estimate(kind: EstimatorKind, plant: &dyn PlantModel, t: f64, y: PlanarPoint, v: f64, ell: f64) -> f64 {
    match kind {
        EstimatorKind::Simple => simple_estimator(plant, t, y, v, ell),
        EstimatorKind::Best => best_estimator(plant, t, y, v, ell),
    }
}

/// The raw iterate sequence `t_0 = 0, t_n = theta(t_{n-1}, y_T(t_{n-1}))`.
pub fn iterates<'a>(
    plant: &'a dyn PlantModel,
    trajectory: &'a TargetTrajectory,
    ell: f64,
    kind: EstimatorKind,
) -> impl Iterator<Item = f64> + 'a {
    let v = trajectory.speed_bound();
    std::iter::successors(Some(0.0), move |&t| {
        Some(estimate(kind, plant, t, trajectory.at(t), v, ell))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Iterate {
    pub t: f64,
    pub rho: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Termination {
    Captured,
    MaxIterations,
    StepUnderflow,
}

/// Iterates `(t_n, rho(t_n, y_T(t_n)))` in order, starting with `t_0 = 0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveTrace {
    pub iterates: Vec<Iterate>,
    pub termination: Termination,
}

impl SolveTrace {
    /// Number of estimator applications.
    pub fn iterations(&self) -> usize {
        self.iterates.len().saturating_sub(1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SolveStatus {
    Intercepted,
    /// The steps stalled with the target still out of reach. This is a
    /// heuristic: an infinite interception time cannot be certified in finite time.
    Unreachable,
    Budget,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveResult {
    pub status: SolveStatus,
    pub t_star: f64,
    pub trace: SolveTrace,
    pub path: Option<InterceptionPath>,
    pub notes: Vec<String>,
}

pub const LISSAJOUS_NOTE: &str = "Lissajous target: the declared speed bound is the curve parameter v, \
while the Euclidean speed of the curve can reach v*sqrt(2); iterates are lower bounds only for targets \
within the declared bound";

/// Runs the fixed-point iteration until the target is within the stop threshold.
pub fn solve(
    plant: &dyn PlantModel,
    trajectory: &TargetTrajectory,
    capture: &CaptureSpec,
    estimator: EstimatorKind,
    max_iterations: usize,
) -> SolveResult {
    let v = trajectory.speed_bound();
    let ell = capture.ell();
    let threshold = capture.stop_threshold();
    let mut t = 0.0;
    let mut y = trajectory.at(t);
    let mut rho = plant.distance(t, y);
    let mut iterates = vec![Iterate { t, rho }];
    let mut stalled = 0;
    let termination = loop {
        if rho <= threshold {
            break Termination::Captured;
        }
        if iterates.len() > max_iterations {
            break Termination::MaxIterations;
        }
        let next = estimate(estimator, plant, t, y, v, ell);
        if next - t < STEP_UNDERFLOW * (1.0 + t) {
            stalled += 1;
        } else {
            stalled = 0;
        }
        t = next.max(t);
        y = trajectory.at(t);
        rho = plant.distance(t, y);
        iterates.push(Iterate { t, rho });
        if stalled >= UNDERFLOW_STREAK && rho > threshold {
            break Termination::StepUnderflow;
        }
    };
    let status = match termination {
        Termination::Captured => SolveStatus::Intercepted,
        Termination::MaxIterations => SolveStatus::Budget,
        Termination::StepUnderflow => SolveStatus::Unreachable,
    };
    let path = match status {
        SolveStatus::Intercepted if plant.capabilities().has_path_reconstruction => {
            plant.path(t, y, threshold.max(ell)).ok()
        }
        _ => None,
    };
    let mut notes = Vec::new();
    if trajectory.is_lissajous() {
        notes.push(LISSAJOUS_NOTE.to_string());
    }
    SolveResult {
        status,
        t_star: t,
        trace: SolveTrace { iterates, termination },
        path,
        notes,
    }
}

/// Reference interception time: the best-estimator iteration run to a step of
/// `1e-14 * (1 + t)` instead of a distance threshold.
pub fn refine_ground_truth(plant: &dyn PlantModel, trajectory: &TargetTrajectory, ell: f64) -> Result<f64> {
    let v = trajectory.speed_bound();
    let mut t = 0.0;
    for _ in 0..REFINE_MAX_ITERATIONS {
        let next = best_estimator(plant, t, trajectory.at(t), v, ell);
        let step = next - t;
        if step <= REFINE_STEP_TOLERANCE * (1.0 + t) {
            return Ok(next.max(t));
        }
        t = next;
    }
    Err(Error::NoConvergence(REFINE_MAX_ITERATIONS))
}

/// Scan for the first root of `g(t) = rho(t, y_T(t)) - ell`.
///
/// `g` is `(1 + v)`-Lipschitz, so no root lies within `g(t) / (1 + v)` of a
/// point with `g(t) > 0`; the scan advances by at least `resolution`. A sign
/// change is bisected down to `resolution` and the bracket midpoint returned.
/// `None` when no crossing is found up to `horizon`.
pub fn grid_oracle(
    plant: &dyn PlantModel,
    trajectory: &TargetTrajectory,
    ell: f64,
    horizon: f64,
    resolution: f64,
) -> Option<f64> {
    if !(resolution > 0.0 && horizon > 0.0) {
        return None;
    }
    let v = trajectory.speed_bound();
    let g = |t: f64| plant.distance(t, trajectory.at(t)) - ell;
    let mut lo = 0.0;
    let mut g_lo = g(lo);
    if g_lo <= 0.0 {
        return Some(0.0);
    }
    loop {
        if lo >= horizon {
            return None;
        }
        let hi = (lo + resolution.max(g_lo / (1.0 + v))).min(horizon);
        let g_hi = g(hi);
        if g_hi <= 0.0 {
            let (mut a, mut b) = (lo, hi);
            while b - a > resolution {
                let m = 0.5 * (a + b);
                if g(m) <= 0.0 {
                    b = m;
                } else {
                    a = m;
                }
            }
            return Some(0.5 * (a + b));
        }
        lo = hi;
        g_lo = g_hi;
    }
}

/// Smallest `n` with `reference - t_n < delta`, scanning at most `cap` iterates.
pub fn iterations_to_precision(
    plant: &dyn PlantModel,
    trajectory: &TargetTrajectory,
    ell: f64,
    kind: EstimatorKind,
    reference: f64,
    deltas: &[f64],
    cap: usize,
) -> Vec<Option<usize>> {
    let mut out = vec![None; deltas.len()];
    for (n, t) in iterates(plant, trajectory, ell, kind).take(cap + 1).enumerate() {
        for (slot, &delta) in out.iter_mut().zip(deltas) {
            if slot.is_none() && reference - t < delta {
                *slot = Some(n);
            }
        }
        if out.iter().all(Option::is_some) {
            break;
        }
    }
    out
}
