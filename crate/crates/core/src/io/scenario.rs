use serde::{Deserialize, Serialize};

use crate::capture::CaptureSpec;
use crate::error::{Error, Result};
use crate::models::PlantKind;
use crate::point::PlanarPoint;
use crate::solver::EstimatorKind;
use crate::trajectory::TargetTrajectory;

pub const DEFAULT_HORIZON: f64 = 100.0;
pub const DEFAULT_MAX_ITERATIONS: usize = 100_000;

fn default_horizon() -> f64 {
    DEFAULT_HORIZON
}

/// A solve request.
///
/// ```json
/// {
///   "plant": "dubins",
///   "trajectory": { "kind": "line", "xi": 0, "eta": 1, "phi": 0, "v": 0.25 },
///   "capture": { "ell": 0.1, "epsilon": 1e-6 },
///   "estimator": "best",
///   "horizon": 100
/// }
/// ```
///
/// `estimator` defaults to `"best"` and `horizon` to 100. Piecewise-linear
/// targets take their samples from the top-level `samples` list.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    pub plant: PlantKind,
    pub trajectory: TrajectoryDocument,
    pub capture: CaptureDocument,
    #[serde(default)]
    pub estimator: EstimatorKind,
    #[serde(default = "default_horizon")]
    pub horizon: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<Vec<Sample>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_iterations: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum TrajectoryDocument {
    Line {
        xi: f64,
        eta: f64,
        phi: f64,
        v: f64,
    },
    Lissajous {
        xi: f64,
        eta: f64,
        omega_x: f64,
        omega_y: f64,
        v: f64,
        /// Overrides the default bound `v`.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        speed_bound: Option<f64>,
    },
    PiecewiseLinear {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        speed_bound: Option<f64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CaptureDocument {
    pub ell: f64,
    pub epsilon: f64,
    /// Stop threshold used when `ell` is zero.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub abs_threshold: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Sample {
    pub t: f64,
    pub x: f64,
    pub y: f64,
}

fn field_error(field: &str, err: impl std::fmt::Display) -> Error {
    Error::ScenarioField {
        field: field.to_string(),
        message: err.to_string(),
    }
}

impl ScenarioFile {
    pub fn build_trajectory(&self) -> Result<TargetTrajectory> {
        let samples = || -> Result<Vec<(f64, PlanarPoint)>> {
            let s = self
                .samples
                .as_ref()
                .ok_or_else(|| field_error("samples", "required for piecewise_linear"))?;
            Ok(s.iter().map(|s| (s.t, PlanarPoint::new(s.x, s.y))).collect())
        };
        let built = match self.trajectory {
            TrajectoryDocument::Line { xi, eta, phi, v } => TargetTrajectory::line(xi, eta, phi, v),
            TrajectoryDocument::Lissajous {
                xi,
                eta,
                omega_x,
                omega_y,
                v,
                speed_bound,
            } => match speed_bound {
                Some(b) => TargetTrajectory::lissajous_with_bound(xi, eta, omega_x, omega_y, v, b),
                None => TargetTrajectory::lissajous(xi, eta, omega_x, omega_y, v),
            },
            TrajectoryDocument::PiecewiseLinear { speed_bound } => match speed_bound {
                Some(b) => TargetTrajectory::piecewise_linear_with_bound(samples()?, b),
                None => TargetTrajectory::piecewise_linear(samples()?),
            },
        };
        built.map_err(|e| field_error("trajectory", e))
    }

    pub fn build_capture(&self) -> Result<CaptureSpec> {
        let c = self.capture;
        match c.abs_threshold {
            Some(a) => CaptureSpec::with_abs_threshold(c.ell, c.epsilon, a),
            None => CaptureSpec::new(c.ell, c.epsilon),
        }
        .map_err(|e| field_error("capture", e))
    }

    pub fn max_iterations(&self) -> usize {
        self.max_iterations.unwrap_or(DEFAULT_MAX_ITERATIONS)
    }

    /// Checks every invariant the builders enforce.
    pub fn validate(&self) -> Result<()> {
        if !(self.horizon > 0.0 && self.horizon.is_finite()) {
            return Err(field_error(
                "horizon",
                format!("must be positive and finite, got {}", self.horizon),
            ));
        }
        if self.samples.is_some() && !matches!(self.trajectory, TrajectoryDocument::PiecewiseLinear { .. }) {
            return Err(field_error("samples", "only allowed for piecewise_linear trajectories"));
        }
        self.build_trajectory()?;
        self.build_capture()?;
        Ok(())
    }
}

/// Parses and validates a scenario document.
pub fn parse_scenario(text: &str) -> Result<ScenarioFile> {
    let file: ScenarioFile = serde_json::from_str(text).map_err(|e| Error::ScenarioSyntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    file.validate()?;
    Ok(file)
}

pub fn emit_scenario(file: &ScenarioFile) -> String {
    serde_json::to_string_pretty(file).expect("scenario documents contain only finite numbers")
}
