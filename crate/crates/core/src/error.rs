use thiserror::Error;

/// Errors raised by constructors, plant queries and the solver.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("time must be non-negative, got {0}")]
    NegativeTime(f64),
    #[error("target speed must be finite and non-negative, got {0}")]
    InvalidSpeed(f64),
    #[error("frequency `{name}` must be positive, got {value}")]
    InvalidFrequency { name: &'static str, value: f64 },
    #[error("piecewise-linear trajectory needs at least one sample")]
    EmptySamples,
    #[error("sample times must start at 0 and strictly increase (sample {index} at t = {time})")]
    NonMonotoneSamples { index: usize, time: f64 },
    #[error("declared speed bound {declared} is below the fastest segment speed {required}")]
    SpeedBoundTooSmall { declared: f64, required: f64 },
    #[error("invalid capture spec: {0}")]
    InvalidCapture(String),
    #[error("geometry undefined: {0}")]
    UndefinedGeometry(String),
    #[error("degenerate polynomial: all coefficients vanish")]
    DegeneratePolynomial,
    #[error("target at distance {distance} from the reachable set exceeds capture radius {ell}")]
    NotCaptured { distance: f64, ell: f64 },
    #[error("target at distance {distance} is already within capture radius {ell}")]
    AlreadyCaptured { distance: f64, ell: f64 },
    #[error("no reachable point within the capture radius could be constructed")]
    PathUnavailable,
    #[error("fixed-point refinement did not converge within {0} iterations")]
    NoConvergence(usize),
    #[error("scenario syntax error at line {line}, column {column}: {message}")]
    ScenarioSyntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid scenario field `{field}`: {message}")]
    ScenarioField { field: String, message: String },
    #[error("cannot render a plot without an interception path")]
    MissingPath,
    #[error("boundary sampling requires t > 0 and at least 2 points per branch")]
    InvalidSampling,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
