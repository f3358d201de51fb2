//! The plant contract and the interception path representation.

pub mod simple;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::point::PlanarPoint;

pub use simple::SimpleMotion;

/// Optional abilities a plant advertises to the solver and the renderer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Capabilities {
    pub has_closed_form_best_estimator: bool,
    pub has_boundary_sampler: bool,
    pub has_path_reconstruction: bool,
}

/// A unit-speed plant starting at the origin, described by the distance from
/// a point to its reachable set `R(t)`.
///
/// Implementations must keep `distance` non-negative, zero exactly on
/// `R(t)`, and 1-Lipschitz in both `t` and `y`. All methods assume `t >= 0`.
pub trait PlantModel: Send + Sync {
    fn name(&self) -> &'static str;

    fn capabilities(&self) -> Capabilities;

    /// Distance from `y` to the reachable set at time `t`.
    fn distance(&self, t: f64, y: PlanarPoint) -> f64;

    /// Membership of `y` in the closed set `R(t)`.
    fn contains(&self, t: f64, y: PlanarPoint) -> bool;

    /// The best universal lower estimator in closed form, where the plant knows one.
    fn closed_form_best_estimator(&self, _t: f64, _y: PlanarPoint, _v: f64, _ell: f64) -> Option<f64> {
        None
    }

    /// Radius of `R(t)` when it is a disk centred at the origin.
    fn disk_radius(&self, _t: f64) -> Option<f64> {
        None
    }

    /// Polylines tracing the boundary of `R(t)` with `n` points per branch.
    fn boundary(&self, t: f64, n: usize) -> Result<Vec<Vec<PlanarPoint>>>;

    /// A time-`t_star` path whose endpoint is the point of `R(t_star)` nearest to `y_target`.
    fn path(&self, t_star: f64, y_target: PlanarPoint, ell: f64) -> Result<InterceptionPath>;

    fn checked_distance(&self, t: f64, y: PlanarPoint) -> Result<f64> {
        check_time(t)?;
        Ok(self.distance(t, y))
    }
}

pub(crate) fn check_time(t: f64) -> Result<()> {
    if t >= 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(Error::NegativeTime(t))
    }
}

/// The two in-scope plants, selectable by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PlantKind {
    Simple,
    Dubins,
}

impl PlantKind {
    pub fn model(self) -> &'static dyn PlantModel {
        match self {
            PlantKind::Simple => &SimpleMotion,
            PlantKind::Dubins => &crate::dubins::DubinsCar,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            PlantKind::Simple => "simple",
            PlantKind::Dubins => "dubins",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Turn {
    Left,
    Right,
}

impl Turn {
    pub fn flipped(self) -> Self {
        match self {
            Turn::Left => Turn::Right,
            Turn::Right => Turn::Left,
        }
    }
}

/// One primitive of an interception path, traversed at unit speed.
///
/// Arcs have unit radius. `Wait` holds position and only occurs for plants
/// that may idle (simple motions).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum Segment {
    Arc { turn: Turn, duration: f64 },
    Straight { duration: f64 },
    Wait { duration: f64 },
}

impl Segment {
    pub fn duration(&self) -> f64 {
        match *self {
            Segment::Arc { duration, .. } | Segment::Straight { duration } | Segment::Wait { duration } => duration,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Pose {
    position: PlanarPoint,
    heading: f64,
}

impl Pose {
    fn advance(self, segment: &Segment, fraction: f64) -> Pose {
        let d = segment.duration() * fraction;
        let dir = PlanarPoint::from_polar(1.0, self.heading);
        match *segment {
            Segment::Straight { .. } => Pose {
                position: self.position + dir * d,
                heading: self.heading,
            },
            Segment::Wait { .. } => self,
            Segment::Arc { turn, .. } => {
                let sign = match turn {
                    Turn::Left => 1.0,
                    Turn::Right => -1.0,
                };
                // unit-radius circle centre sits on the turn side of the heading
                let normal = PlanarPoint::new(-dir.y, dir.x) * sign;
                let centre = self.position + normal;
                let heading = self.heading + sign * d;
                let back = -PlanarPoint::new(-heading.sin(), heading.cos()) * sign;
                Pose {
                    position: centre + back,
                    heading,
                }
            }
        }
    }
}

/// A reconstructed time-optimal path from the origin.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InterceptionPath {
    /// Heading at `t = 0`, radians from the +x axis.
    pub initial_heading: f64,
    pub segments: Vec<Segment>,
    pub endpoint: PlanarPoint,
}

impl InterceptionPath {
    pub fn duration(&self) -> f64 {
        self.segments.iter().map(Segment::duration).sum()
    }

    /// Endpoint obtained by integrating the segments from the origin.
    pub fn integrate(&self) -> PlanarPoint {
        let start = Pose {
            position: PlanarPoint::ORIGIN,
            heading: self.initial_heading,
        };
        self.segments
            .iter()
            .fold(start, |pose, s| pose.advance(s, 1.0))
            .position
    }

    /// Points along the path with arcs subdivided so no piece turns more than `max_turn` radians.
    pub fn polyline(&self, max_turn: f64) -> Vec<PlanarPoint> {
        let mut pose = Pose {
            position: PlanarPoint::ORIGIN,
            heading: self.initial_heading,
        };
        let mut out = vec![pose.position];
        for seg in &self.segments {
            match seg {
                Segment::Arc { duration, .. } => {
                    let pieces = (duration / max_turn).ceil().max(1.0) as usize;
                    for k in 1..=pieces {
                        out.push(pose.advance(seg, k as f64 / pieces as f64).position);
                    }
                }
                Segment::Straight { .. } => out.push(pose.advance(seg, 1.0).position),
                Segment::Wait { .. } => {}
            }
            pose = pose.advance(seg, 1.0);
        }
        out
    }
}
