use std::fmt::Write;

use crate::error::{Error, Result};
use crate::models::PlantModel;
use crate::point::PlanarPoint;
use crate::solver::SolveResult;
use crate::trajectory::TargetTrajectory;

/// Largest turn, in radians, of one chord of a flattened arc.
pub const ARC_STEP: f64 = 0.01;
const TARGET_SAMPLES: usize = 400;
const BOUNDARY_SAMPLES: usize = 200;
const MARGIN: f64 = 0.1;

struct Bounds {
    min: PlanarPoint,
    max: PlanarPoint,
}

impl Bounds {
    fn new() -> Self {
        Bounds {
            min: PlanarPoint::new(f64::INFINITY, f64::INFINITY),
            max: PlanarPoint::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
        }
    }

    fn add(&mut self, p: PlanarPoint) {
        self.min = PlanarPoint::new(self.min.x.min(p.x), self.min.y.min(p.y));
        self.max = PlanarPoint::new(self.max.x.max(p.x), self.max.y.max(p.y));
    }

    fn add_disk(&mut self, c: PlanarPoint, r: f64) {
        self.add(c - PlanarPoint::new(r, r));
        self.add(c + PlanarPoint::new(r, r));
    }
}

fn points_attr(points: &[PlanarPoint]) -> String {
    let mut s = String::new();
    for (i, p) in points.iter().enumerate() {
        if i > 0 {
            s.push(' ');
        }
        let _ = write!(s, "{},{}", p.x, p.y);
    }
    s
}

/// Renders the interception as an SVG 1.1 document.
///
/// Contains one `reachable-set` element per entry of `times` (a circle for
/// plants with a circular boundary, otherwise a multi-branch path), the target
/// polyline over `[0, t_star]`, the interception path and a capture circle
/// of radius `ell` around the target at `t_star`. Mathematical `+y` points up.
pub fn render_svg(
    plant: &dyn PlantModel,
    trajectory: &TargetTrajectory,
    result: &SolveResult,
    times: &[f64],
    ell: f64,
) -> Result<String> {
    let path = result.path.as_ref().ok_or(Error::MissingPath)?;
    let t_star = result.t_star;
    let mut bounds = Bounds::new();

    let target: Vec<PlanarPoint> = (0..=TARGET_SAMPLES)
        .map(|k| trajectory.at(t_star * k as f64 / TARGET_SAMPLES as f64))
        .collect();
    target.iter().for_each(|&p| bounds.add(p));
    let route = path.polyline(ARC_STEP);
    route.iter().for_each(|&p| bounds.add(p));
    let aim = trajectory.at(t_star);
    bounds.add_disk(aim, ell);

    let mut sets = String::new();
    for &t in times {
        if let Some(r) = plant.disk_radius(t) {
            bounds.add_disk(PlanarPoint::ORIGIN, r);
            let _ = writeln!(
                sets,
                r#"    <circle class="reachable-set" data-t="{t}" cx="0" cy="0" r="{r}"/>"#
            );
            continue;
        }
        let branches = if t > 0.0 {
            plant.boundary(t, BOUNDARY_SAMPLES)?
        } else {
            vec![vec![PlanarPoint::ORIGIN]]
        };
        let mut d = String::new();
        for branch in &branches {
            for (i, p) in branch.iter().enumerate() {
                bounds.add(*p);
                let _ = write!(d, "{}{},{} ", if i == 0 { "M" } else { "L" }, p.x, p.y);
            }
        }
        let _ = writeln!(
            sets,
            r#"    <path class="reachable-set" data-t="{t}" d="{}"/>"#,
            d.trim_end()
        );
    }

    let width = (bounds.max.x - bounds.min.x).max(1e-6);
    let height = (bounds.max.y - bounds.min.y).max(1e-6);
    let (mx, my) = (MARGIN * width, MARGIN * height);
    // the group flips y, so the view box spans the negated y range
    let view = format!(
        "{} {} {} {}",
        bounds.min.x - mx,
        -bounds.max.y - my,
        width + 2.0 * mx,
        height + 2.0 * my
    );

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{view}" width="600" height="{}">"#,
        (600.0 * (height + 2.0 * my) / (width + 2.0 * mx)).round()
    );
    out.push_str("  <style>\n");
    out.push_str("    * { vector-effect: non-scaling-stroke; fill: none; stroke-width: 1.5; }\n");
    out.push_str("    .reachable-set { stroke: #777; stroke-dasharray: 4 3; stroke-width: 1; }\n");
    out.push_str("    .target { stroke: #1f5fbf; }\n");
    out.push_str("    .interception-path { stroke: #c62828; }\n");
    out.push_str("    .capture { stroke: #2e7d32; }\n");
    out.push_str("  </style>\n");
    out.push_str("  <g transform=\"scale(1,-1)\">\n");
    out.push_str(&sets);
    let _ = writeln!(
        out,
        r#"    <polyline class="target" points="{}"/>"#,
        points_attr(&target)
    );
    let _ = writeln!(
        out,
        r#"    <polyline class="interception-path" points="{}"/>"#,
        points_attr(&route)
    );
    let _ = writeln!(
        out,
        r#"    <circle class="capture" cx="{}" cy="{}" r="{ell}"/>"#,
        aim.x, aim.y
    );
    out.push_str("  </g>\n</svg>\n");
    Ok(out)
}
