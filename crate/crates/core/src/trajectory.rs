//! Target trajectories: maps `t -> PlanarPoint` with a declared speed bound.
//!
//! The declared bound is the Lipschitz constant the solver relies on. The
//! solver stays a lower bound on the interception time only if the actual
//! trajectory never moves faster than this value.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::point::PlanarPoint;

type CustomFn = Arc<dyn Fn(f64) -> PlanarPoint + Send + Sync>;

/// Parameters of a trajectory family.
#[derive(Clone)]
pub enum TrajectoryKind {
    /// `(xi + v t cos phi, eta + v t sin phi)`
    Line {
        xi: f64,
        eta: f64,
        phi: f64,
        v: f64,
    },
    /// `(xi + v/omega_x sin(omega_x t), eta + v/omega_y sin(omega_y t))`
    Lissajous {
        xi: f64,
        eta: f64,
        omega_x: f64,
        omega_y: f64,
        v: f64,
    },
    /// Linear interpolation between `(time, point)` samples, constant after the last one.
    PiecewiseLinear {
        samples: Vec<(f64, PlanarPoint)>,
    },
    Custom(CustomFn),
}

impl fmt::Debug for TrajectoryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Line { xi, eta, phi, v } => f
                .debug_struct("Line")
                .field("xi", xi)
                .field("eta", eta)
                .field("phi", phi)
                .field("v", v)
                .finish(),
            Self::Lissajous {
                xi,
                eta,
                omega_x,
                omega_y,
                v,
            } => f
                .debug_struct("Lissajous")
                .field("xi", xi)
                .field("eta", eta)
                .field("omega_x", omega_x)
                .field("omega_y", omega_y)
                .field("v", v)
                .finish(),
            Self::PiecewiseLinear { samples } => f.debug_struct("PiecewiseLinear").field("samples", samples).finish(),
            Self::Custom(_) => f.write_str("Custom(..)"),
        }
    }
}

/// An immutable, deterministic target trajectory.
#[derive(Debug, Clone)]
pub struct TargetTrajectory {
    kind: TrajectoryKind,
    speed_bound: f64,
}

fn check_speed(v: f64) -> Result<()> {
    if v.is_finite() && v >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidSpeed(v))
    }
}

impl TargetTrajectory {
    pub fn line(xi: f64, eta: f64, phi: f64, v: f64) -> Result<Self> {
        check_speed(v)?;
        Ok(Self {
            kind: TrajectoryKind::Line { xi, eta, phi, v },
            speed_bound: v,
        })
    }

    /// Lissajous curve whose declared speed bound is `v`.
    ///
    /// The Euclidean speed of this curve can reach `v * sqrt(2)`; use
    /// [`TargetTrajectory::lissajous_with_bound`] to declare that instead.
    pub fn lissajous(xi: f64, eta: f64, omega_x: f64, omega_y: f64, v: f64) -> Result<Self> {
        Self::lissajous_with_bound(xi, eta, omega_x, omega_y, v, v)
    }

    pub fn lissajous_with_bound(
        xi: f64,
        eta: f64,
        omega_x: f64,
        omega_y: f64,
        v: f64,
        speed_bound: f64,
    ) -> Result<Self> {
        for (name, value) in [("omega_x", omega_x), ("omega_y", omega_y)] {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::InvalidFrequency { name, value });
            }
        }
        check_speed(v)?;
        check_speed(speed_bound)?;
        Ok(Self {
            kind: TrajectoryKind::Lissajous {
                xi,
                eta,
                omega_x,
                omega_y,
                v,
            },
            speed_bound,
        })
    }

    /// Rigorous Euclidean speed bound of a Lissajous curve with parameter `v`.
    pub fn lissajous_euclidean_bound(v: f64) -> f64 {
        v * std::f64::consts::SQRT_2
    }

    pub fn piecewise_linear(samples: Vec<(f64, PlanarPoint)>) -> Result<Self> {
        let required = Self::max_segment_speed(&samples)?;
        Ok(Self {
            kind: TrajectoryKind::PiecewiseLinear { samples },
            speed_bound: required,
        })
    }

    /// Like [`TargetTrajectory::piecewise_linear`] with an explicit, possibly looser, bound.
    pub fn piecewise_linear_with_bound(samples: Vec<(f64, PlanarPoint)>, speed_bound: f64) -> Result<Self> {
        check_speed(speed_bound)?;
        let required = Self::max_segment_speed(&samples)?;
        if speed_bound < required {
            return Err(Error::SpeedBoundTooSmall {
                declared: speed_bound,
                required,
            });
        }
        Ok(Self {
            kind: TrajectoryKind::PiecewiseLinear { samples },
            speed_bound,
        })
    }

    /// Arbitrary trajectory. The caller vouches for `speed_bound`.
    pub fn custom<F>(f: F, speed_bound: f64) -> Result<Self>
    where
        F: Fn(f64) -> PlanarPoint + Send + Sync + 'static,
    {
        check_speed(speed_bound)?;
        Ok(Self {
            kind: TrajectoryKind::Custom(Arc::new(f)),
            speed_bound,
        })
    }

    fn max_segment_speed(samples: &[(f64, PlanarPoint)]) -> Result<f64> {
        let Some(&(t0, p0)) = samples.first() else {
            return Err(Error::EmptySamples);
        };
        if t0 != 0.0 {
            return Err(Error::NonMonotoneSamples { index: 0, time: t0 });
        }
        if !(p0.x.is_finite() && p0.y.is_finite()) {
            return Err(Error::NonMonotoneSamples { index: 0, time: t0 });
        }
        let mut speed: f64 = 0.0;
        for (i, w) in samples.windows(2).enumerate() {
            let ((ta, pa), (tb, pb)) = (w[0], w[1]);
            if !(tb.is_finite() && tb > ta && pb.x.is_finite() && pb.y.is_finite()) {
                return Err(Error::NonMonotoneSamples { index: i + 1, time: tb });
            }
            speed = speed.max(pb.distance(pa) / (tb - ta));
        }
        Ok(speed)
    }

    pub fn kind(&self) -> &TrajectoryKind {
        &self.kind
    }

    /// Declared Lipschitz constant `v` handed to the estimators.
    pub fn speed_bound(&self) -> f64 {
        self.speed_bound
    }

    pub fn is_lissajous(&self) -> bool {
        matches!(self.kind, TrajectoryKind::Lissajous { .. })
    }

    /// Target position at time `t`.
    pub fn at(&self, t: f64) -> PlanarPoint {
        match &self.kind {
            TrajectoryKind::Line { xi, eta, phi, v } => {
                let (s, c) = phi.sin_cos();
                PlanarPoint::new(xi + v * t * c, eta + v * t * s)
            }
            TrajectoryKind::Lissajous {
                xi,
                eta,
                omega_x,
                omega_y,
                v,
            } => PlanarPoint::new(
                xi + v / omega_x * (omega_x * t).sin(),
                eta + v / omega_y * (omega_y * t).sin(),
            ),
            TrajectoryKind::PiecewiseLinear { samples } => interpolate(samples, t),
            TrajectoryKind::Custom(f) => f(t),
        }
    }
}

fn interpolate(samples: &[(f64, PlanarPoint)], t: f64) -> PlanarPoint {
    // index of the first sample strictly after t
    let upper = samples.partition_point(|&(ts, _)| ts <= t);
    if upper == 0 {
        return samples[0].1;
    }
    if upper == samples.len() {
        return samples[samples.len() - 1].1;
    }
    let (ta, pa) = samples[upper - 1];
    let (tb, pb) = samples[upper];
    let s = (t - ta) / (tb - ta);
    pa + (pb - pa) * s
}
