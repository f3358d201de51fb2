//! Minimum-time interception of a moving target.
//!
//! A plant starting at the origin is described by the distance `rho(t, y)`
//! from a point to its reachable set. The earliest interception time is the
//! smallest root of `rho(t, y_T(t)) = ell`, found by a monotone fixed-point
//! iteration whose steps never overshoot for any target moving no faster
//! than its declared speed bound.

pub mod capture;
pub mod dubins;
pub mod error;
pub mod io;
pub mod models;
pub mod point;
pub mod solver;
pub mod table;
pub mod trajectory;

pub use capture::CaptureSpec;
pub use dubins::DubinsCar;
pub use error::{Error, Result};
pub use models::{InterceptionPath, PlantKind, PlantModel, Segment, SimpleMotion, Turn};
pub use point::PlanarPoint;
pub use trajectory::TargetTrajectory;
