//! Simple motions: `dy/dt = u`, `|u| <= 1`. The reachable set at `t` is the
//! closed disk of radius `t` around the origin.

use super::{check_time, Capabilities, InterceptionPath, PlantModel, Segment};
use crate::error::{Error, Result};
use crate::point::PlanarPoint;

/// Slack allowed when checking that a target is captured before building a path.
pub const PATH_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SimpleMotion;

pub fn distance(t: f64, y: PlanarPoint) -> Result<f64> {
    check_time(t)?;
    Ok(distance_unchecked(t, y))
}

pub fn contains(t: f64, y: PlanarPoint) -> Result<bool> {
    check_time(t)?;
    Ok(y.norm() <= t)
}

fn distance_unchecked(t: f64, y: PlanarPoint) -> f64 {
    (y.norm() - t).max(0.0)
}

/// Closed form of both universal lower estimators; they coincide for this plant.
pub fn best_estimator(t: f64, y: PlanarPoint, v: f64, ell: f64) -> f64 {
    let r = y.norm();
    if r > t + ell {
        (r + v * t - ell) / (1.0 + v)
    } else {
        t
    }
}

/// Straight run toward the target, stopping `ell` short of it, padded with a
/// wait when the run is shorter than `t_star`.
pub fn path(t_star: f64, y_target: PlanarPoint, ell: f64) -> Result<InterceptionPath> {
    check_time(t_star)?;
    let d = distance_unchecked(t_star, y_target);
    if d > ell + PATH_TOLERANCE {
        return Err(Error::NotCaptured { distance: d, ell });
    }
    let r = y_target.norm();
    let heading = if y_target.is_origin() {
        0.0
    } else {
        y_target.y.atan2(y_target.x)
    };
    let run = (r - ell).clamp(0.0, t_star);
    let endpoint = if y_target.is_origin() {
        PlanarPoint::ORIGIN
    } else {
        y_target * (run / r)
    };
    let mut segments = vec![Segment::Straight { duration: run }];
    if t_star > run {
        segments.push(Segment::Wait { duration: t_star - run });
    }
    Ok(InterceptionPath {
        initial_heading: heading,
        segments,
        endpoint,
    })
}

impl PlantModel for SimpleMotion {
    fn name(&self) -> &'static str {
        "simple"
    }

    fn capabilities(&self) -> Capabilities {
        Capabilities {
            has_closed_form_best_estimator: true,
            has_boundary_sampler: true,
            has_path_reconstruction: true,
        }
    }

    fn distance(&self, t: f64, y: PlanarPoint) -> f64 {
        distance_unchecked(t, y)
    }

    fn contains(&self, t: f64, y: PlanarPoint) -> bool {
        y.norm() <= t
    }

    fn closed_form_best_estimator(&self, t: f64, y: PlanarPoint, v: f64, ell: f64) -> Option<f64> {
        Some(best_estimator(t, y, v, ell))
    }

    fn disk_radius(&self, t: f64) -> Option<f64> {
        Some(t)
    }

    fn boundary(&self, t: f64, n: usize) -> Result<Vec<Vec<PlanarPoint>>> {
        if t.is_nan() || t <= 0.0 || n < 2 {
            return Err(Error::InvalidSampling);
        }
        let circle = (0..=n)
            .map(|k| PlanarPoint::from_polar(t, std::f64::consts::TAU * k as f64 / n as f64))
            .collect();
        Ok(vec![circle])
    }

    fn path(&self, t_star: f64, y_target: PlanarPoint, ell: f64) -> Result<InterceptionPath> {
        path(t_star, y_target, ell)
    }
}
