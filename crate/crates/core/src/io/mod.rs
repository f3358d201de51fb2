//! JSON scenario and result documents, and SVG plots.

mod result;
mod scenario;
mod svg;

pub use result::{emit_result, parse_result, ResultDocument};
pub use scenario::{
    emit_scenario, parse_scenario, CaptureDocument, Sample, ScenarioFile, TrajectoryDocument, DEFAULT_HORIZON,
    DEFAULT_MAX_ITERATIONS,
};
pub use svg::{render_svg, ARC_STEP};
