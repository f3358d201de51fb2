use crate::error::{Error, Result};

/// Threshold used in place of `ell * (1 + epsilon)` when the capture radius is zero.
pub const DEFAULT_ABS_THRESHOLD: f64 = 1e-9;

/// Capture radius and stopping tolerance of an interception query.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CaptureSpec {
    ell: f64,
    epsilon: f64,
    abs_threshold: f64,
}

impl CaptureSpec {
    pub fn new(ell: f64, epsilon: f64) -> Result<Self> {
        Self::with_abs_threshold(ell, epsilon, DEFAULT_ABS_THRESHOLD)
    }

    /// `abs_threshold` is only consulted when `ell == 0`, where the relative
    /// criterion `ell * (1 + epsilon)` would demand exact coincidence.
    pub fn with_abs_threshold(ell: f64, epsilon: f64, abs_threshold: f64) -> Result<Self> {
        if !(ell.is_finite() && ell >= 0.0) {
            return Err(Error::InvalidCapture(format!("ell must be finite and >= 0, got {ell}")));
        }
        if !(epsilon.is_finite() && epsilon > 0.0) {
            return Err(Error::InvalidCapture(format!(
                "epsilon must be finite and > 0, got {epsilon}"
            )));
        }
        if !(abs_threshold.is_finite() && abs_threshold > 0.0) {
            return Err(Error::InvalidCapture(format!(
                "abs_threshold must be finite and > 0, got {abs_threshold}"
            )));
        }
        Ok(Self {
            ell,
            epsilon,
            abs_threshold,
        })
    }

    pub fn ell(&self) -> f64 {
        self.ell
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn abs_threshold(&self) -> f64 {
        self.abs_threshold
    }

    /// Distance to the reachable set at or below which the solver stops.
    pub fn stop_threshold(&self) -> f64 {
        if self.ell > 0.0 {
            self.ell * (1.0 + self.epsilon)
        } else {
            self.abs_threshold
        }
    }
}
