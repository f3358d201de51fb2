//! Planar reachable set of the Dubins car.
//!
//! The car starts at the origin heading along +y, moves at unit speed and
//! turns with unit minimum radius. Everything is computed for the right half
//! plane using `|x|` and mirrored, since the set is symmetric about the y-axis.
//!
//! Boundary families, written for `x >= 0`:
//! - CS: a right turn by `theta`, then straight for `t - theta`;
//! - CC: a left turn by `tau`, then a right turn by `t - tau`, `tau <= pi/2`.

pub mod cubic;

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use crate::error::{Error, Result};
use crate::models::{check_time, Capabilities, InterceptionPath, PlantModel, Segment, Turn};
use crate::point::PlanarPoint;

/// Arguments of `acos` are clamped to `[-1, 1]` when they overshoot by at most this much.
pub const ACOS_TOLERANCE: f64 = 1e-12;

/// Slack allowed when checking that a target is captured before building a path.
pub const PATH_TOLERANCE: f64 = 1e-6;

/// Cell of the plane partition that decides which path families apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DubinsRegion {
    /// Inside one of the two unit turning circles, or the origin.
    DI,
    /// Everything not in `DI` or `DIII`.
    DII,
    /// Upper half plane points close enough for a CC path, outside the turning circles.
    DIII,
}

pub fn alpha_cs(y: PlanarPoint) -> f64 {
    let ax = y.x.abs();
    (1.0 - ax) * (1.0 - ax) + y.y * y.y - 1.0
}

pub fn alpha_cc(y: PlanarPoint) -> f64 {
    let ax = y.x.abs();
    (5.0 - (1.0 + ax) * (1.0 + ax) - y.y * y.y) / 4.0
}

pub fn classify(y: PlanarPoint) -> DubinsRegion {
    if alpha_cs(y) < 0.0 || y.is_origin() {
        DubinsRegion::DI
    } else if alpha_cc(y) > -1.0 && y.y > 0.0 {
        DubinsRegion::DIII
    } else {
        DubinsRegion::DII
    }
}

fn acos_checked(arg: f64) -> Result<f64> {
    if arg.abs() <= 1.0 {
        Ok(arg.acos())
    } else if arg.abs() <= 1.0 + ACOS_TOLERANCE {
        Ok(arg.clamp(-1.0, 1.0).acos())
    } else {
        Err(Error::UndefinedGeometry(format!(
            "arccos argument {arg} outside [-1, 1]"
        )))
    }
}

// Mathematically the arguments below never leave [-1, 1]; only rounding can push them out.
fn acos_clamped(arg: f64) -> f64 {
    arg.clamp(-1.0, 1.0).acos()
}

fn theta_cs_arg(y: PlanarPoint, alpha: f64) -> (f64, bool) {
    let ax = y.x.abs();
    let root = alpha.sqrt();
    let arg = (1.0 - ax + y.y * root) / (1.0 + alpha);
    // arg -> 1 only along the ray straight ahead, where the branch test is an
    // exact tie that rounding may break the wrong way
    (arg, y.y >= (1.0 - ax) * root || arg >= 1.0 - 1e-12)
}

fn theta_cc_args(y: PlanarPoint, alpha: f64) -> (f64, f64) {
    let ax = y.x.abs();
    let base = (1.0 + ax) * (2.0 - alpha);
    let cross = y.y * (1.0 - alpha * alpha).max(0.0).sqrt();
    let den = (1.0 + ax) * (1.0 + ax) + y.y * y.y;
    ((base + cross) / den, (base - cross) / den)
}

/// First-arc angle of the shortest CS path to `y`, in `[0, 2pi)`.
pub fn theta_cs(y: PlanarPoint) -> Result<f64> {
    let alpha = alpha_cs(y);
    if alpha < 0.0 {
        return Err(Error::UndefinedGeometry(format!(
            "theta_cs needs alpha_cs >= 0, got {alpha}"
        )));
    }
    let (arg, upper) = theta_cs_arg(y, alpha);
    let a = acos_checked(arg)?;
    Ok(if upper { a } else { TAU - a })
}

/// Length of the CS path reaching `y`; defined on `DII`, `DIII` and the origin.
pub fn v_cs(y: PlanarPoint) -> Result<f64> {
    match classify(y) {
        DubinsRegion::DI if !y.is_origin() => Err(Error::UndefinedGeometry(
            "V_CS is undefined inside the turning circles".into(),
        )),
        _ => Ok(theta_cs(y)? + alpha_cs(y).sqrt()),
    }
}

/// Lengths `(V_CC+, V_CC-)` of the CC paths reaching `y`, each present only on its region.
pub fn v_cc(y: PlanarPoint) -> Result<(Option<f64>, Option<f64>)> {
    let region = classify(y);
    if region == DubinsRegion::DII {
        return Ok((None, None));
    }
    let alpha = alpha_cc(y);
    let arc = acos_checked(alpha)?;
    let (plus_arg, minus_arg) = theta_cc_args(y, alpha);
    let minus = acos_checked(minus_arg)? + TAU - arc;
    let plus = if region == DubinsRegion::DIII {
        Some(acos_checked(plus_arg)? + arc)
    } else {
        None
    };
    Ok((plus, Some(minus)))
}

/// Per-point quantities of the reachable-set description.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DubinsGeometry {
    pub abs_x: f64,
    pub y: f64,
    pub region: DubinsRegion,
    pub alpha_cs: f64,
    pub alpha_cc: f64,
    pub theta_cs: Option<f64>,
    pub theta_cc_plus: Option<f64>,
    pub theta_cc_minus: Option<f64>,
    pub v_cs: Option<f64>,
    pub v_cc_plus: Option<f64>,
    pub v_cc_minus: Option<f64>,
}

impl DubinsGeometry {
    pub fn of(p: PlanarPoint) -> Self {
        let region = classify(p);
        let a_cs = alpha_cs(p);
        let a_cc = alpha_cc(p);
        let mut g = DubinsGeometry {
            abs_x: p.x.abs(),
            y: p.y,
            region,
            alpha_cs: a_cs,
            alpha_cc: a_cc,
            theta_cs: None,
            theta_cc_plus: None,
            theta_cc_minus: None,
            v_cs: None,
            v_cc_plus: None,
            v_cc_minus: None,
        };
        if a_cs >= 0.0 {
            let (arg, upper) = theta_cs_arg(p, a_cs);
            let a = acos_clamped(arg);
            let theta = if upper { a } else { TAU - a };
            g.theta_cs = Some(theta);
            if region != DubinsRegion::DI || p.is_origin() {
                g.v_cs = Some(theta + a_cs.sqrt());
            }
        }
        if region != DubinsRegion::DII {
            let arc = acos_clamped(a_cc);
            let (plus_arg, minus_arg) = theta_cc_args(p, a_cc);
            let minus = acos_clamped(minus_arg);
            g.theta_cc_minus = Some(minus);
            g.v_cc_minus = Some(minus + TAU - arc);
            if region == DubinsRegion::DIII {
                let plus = acos_clamped(plus_arg);
                g.theta_cc_plus = Some(plus);
                g.v_cc_plus = Some(plus + arc);
            }
        }
        g
    }

    fn contains(&self, t: f64) -> bool {
        // every Option below is populated on the region that reads it
        match self.region {
            DubinsRegion::DI => {
                (t == 0.0 && self.abs_x == 0.0 && self.y == 0.0) || t >= self.v_cc_minus.unwrap_or(f64::INFINITY)
            }
            DubinsRegion::DII => t >= self.v_cs.unwrap_or(f64::INFINITY),
            DubinsRegion::DIII => {
                let v_cs = self.v_cs.unwrap_or(f64::INFINITY);
                let minus = self.v_cc_minus.unwrap_or(f64::INFINITY);
                let plus = self.v_cc_plus.unwrap_or(f64::NEG_INFINITY);
                t >= v_cs && (t >= minus || plus >= t)
            }
        }
    }

    /// True where the nearest boundary point lies on the CS family.
    fn on_cs_branch(&self, t: f64) -> bool {
        let (Some(theta), Some(v_cs)) = (self.theta_cs, self.v_cs) else {
            return false;
        };
        let region_ok = match self.region {
            DubinsRegion::DII => true,
            DubinsRegion::DIII => v_cs >= t,
            DubinsRegion::DI => false,
        };
        region_ok && theta <= t
    }
}

pub fn contains(t: f64, y: PlanarPoint) -> Result<bool> {
    check_time(t)?;
    Ok(DubinsGeometry::of(y).contains(t))
}

/// Right-half-plane CC boundary point: left turn by `tau`, then right turn by `t - tau`.
pub fn cc_point(tau: f64, t: f64) -> PlanarPoint {
    PlanarPoint::new(
        2.0 * tau.cos() - (t - 2.0 * tau).cos() - 1.0,
        2.0 * tau.sin() + (t - 2.0 * tau).sin(),
    )
}

/// Right-half-plane CS boundary point: right turn by `theta`, then straight for `t - theta`.
pub fn cs_point(theta: f64, t: f64) -> PlanarPoint {
    let (s, c) = theta.sin_cos();
    PlanarPoint::new((t - theta) * s - c + 1.0, (t - theta) * c + s)
}

fn cubic_coefficients(t: f64, y: PlanarPoint) -> [f64; 4] {
    let ax = y.x.abs();
    let (s, c) = (t / 3.0).sin_cos();
    [-(y.y + s), 3.0 + 3.0 * ax + c, 3.0 * y.y - s, c - (1.0 + ax)]
}

/// Real roots of the stationarity cubic of the CC boundary distance.
pub fn cc_cubic_roots(t: f64, y: PlanarPoint) -> Result<Vec<f64>> {
    check_time(t)?;
    cubic::real_roots(cubic_coefficients(t, y))
}

/// Candidate first-arc lengths for the nearest CC boundary point, all in `[0, min(t, pi/2)]`.
fn cc_candidates(t: f64, y: PlanarPoint) -> Vec<f64> {
    let upper = t.min(FRAC_PI_2);
    let mut out = vec![0.0, upper];
    let coeffs = cubic_coefficients(t, y);
    let mut push = |tau: f64| {
        if tau <= upper + 1e-12 {
            out.push(tau.min(upper));
        } else if TAU - tau <= 1e-12 {
            out.push(0.0);
        }
    };
    if let Ok(roots) = cubic::real_roots(coeffs) {
        for xi in roots {
            push((t / 3.0 - 2.0 * xi.atan()).rem_euclid(TAU));
        }
    }
    if cubic::effective_degree(coeffs) < 3 {
        // root at infinity, xi -> +-inf
        push((t / 3.0 - PI).rem_euclid(TAU));
    }
    out
}

/// Where the distance from a point to `R(t)` is attained.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NearestBoundary {
    Inside,
    Cs { theta: f64 },
    Cc { tau: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Nearest {
    pub distance: f64,
    pub kind: NearestBoundary,
    /// Nearest point of `R(t)`, in the original (not mirrored) half plane.
    pub point: PlanarPoint,
}

pub fn nearest(t: f64, y: PlanarPoint) -> Nearest {
    let g = DubinsGeometry::of(y);
    if g.contains(t) {
        return Nearest {
            distance: 0.0,
            kind: NearestBoundary::Inside,
            point: y,
        };
    }
    let unmirror = |p: PlanarPoint| if y.x < 0.0 { p.mirrored() } else { p };
    if g.on_cs_branch(t) {
        let theta = g.theta_cs.unwrap_or_default();
        let v_cs = g.v_cs.unwrap_or_default();
        return Nearest {
            distance: (v_cs - t).max(0.0),
            kind: NearestBoundary::Cs { theta },
            point: unmirror(cs_point(theta, t)),
        };
    }
    let q = PlanarPoint::new(g.abs_x, g.y);
    let (tau, d) = cc_candidates(t, y)
        .into_iter()
        .map(|tau| (tau, q.distance(cc_point(tau, t))))
        .fold((0.0, f64::INFINITY), |best, c| if c.1 < best.1 { c } else { best });
    // The CS foot point is reachable whenever theta_cs <= t. Near the corner
    // (0, t) rounding can misroute a point to the CC family; keep the CS foot
    // as a competing candidate so such points are still measured correctly.
    if let Some((theta, v_cs)) = cs_foot(&g, t) {
        if (v_cs - t).abs() <= d {
            return Nearest {
                distance: (v_cs - t).abs(),
                kind: NearestBoundary::Cs { theta },
                point: unmirror(cs_point(theta, t)),
            };
        }
    }
    Nearest {
        distance: d,
        kind: NearestBoundary::Cc { tau },
        point: unmirror(cc_point(tau, t)),
    }
}

fn cs_foot(g: &DubinsGeometry, t: f64) -> Option<(f64, f64)> {
    match (g.region, g.theta_cs, g.v_cs) {
        (DubinsRegion::DII | DubinsRegion::DIII, Some(theta), Some(v_cs)) if theta <= t => Some((theta, v_cs)),
        _ => None,
    }
}

/// Distance from `y` to the reachable set at time `t`.
pub fn distance(t: f64, y: PlanarPoint) -> Result<f64> {
    check_time(t)?;
    Ok(nearest(t, y).distance)
}

/// True where the best estimator has the closed form `t + (V_CS - t - ell)/(1 + v)`.
pub fn closed_form_applies(t: f64, y: PlanarPoint) -> bool {
    let g = DubinsGeometry::of(y);
    !g.contains(t) && g.on_cs_branch(t)
}

/// Best-estimator step where the closed form applies, the simple estimator elsewhere.
pub fn best_estimator(t: f64, y: PlanarPoint, v: f64, ell: f64) -> Result<f64> {
    check_time(t)?;
    let g = DubinsGeometry::of(y);
    let n = nearest(t, y);
    if n.distance <= ell {
        return Err(Error::AlreadyCaptured {
            distance: n.distance,
            ell,
        });
    }
    if !g.contains(t) && g.on_cs_branch(t) {
        let v_cs = g.v_cs.unwrap_or_default();
        Ok(t + (v_cs - t - ell) / (1.0 + v))
    } else {
        Ok(t + (n.distance - ell) / (1.0 + v))
    }
}

/// Boundary polylines of `R(t)`: CS right, CS left, CC right, CC left, `n` points each.
pub fn boundary_branches(t: f64, n: usize) -> Result<Vec<Vec<PlanarPoint>>> {
    if !(t > 0.0 && t.is_finite()) || n < 2 {
        return Err(Error::InvalidSampling);
    }
    let sample = |end: f64, f: &dyn Fn(f64) -> PlanarPoint| -> Vec<PlanarPoint> {
        (0..n).map(|k| f(end * k as f64 / (n - 1) as f64)).collect()
    };
    let cs = sample(t.min(TAU), &|theta| cs_point(theta, t));
    let cc = sample(t.min(FRAC_PI_2), &|tau| cc_point(tau, t));
    let cs_left = cs.iter().map(|p| p.mirrored()).collect();
    let cc_left = cc.iter().map(|p| p.mirrored()).collect();
    Ok(vec![cs, cs_left, cc, cc_left])
}

pub fn boundary_points(t: f64, n: usize) -> Result<Vec<PlanarPoint>> {
    Ok(boundary_branches(t, n)?.into_iter().flatten().collect())
}

/// Two-primitive paths of total length `t`, used when the target already lies inside `R(t)`.
fn interior_path(t: f64, y: PlanarPoint) -> (Vec<Segment>, PlanarPoint) {
    type Family = (Turn, Option<Turn>, f64);
    let families: [Family; 4] = [
        (Turn::Right, None, t.min(TAU)),
        (Turn::Left, None, t.min(TAU)),
        (Turn::Left, Some(Turn::Right), t.min(TAU)),
        (Turn::Right, Some(Turn::Left), t.min(TAU)),
    ];
    let build = |(first, second, _): Family, s: f64| {
        let segs = vec![
            Segment::Arc {
                turn: first,
                duration: s,
            },
            match second {
                Some(turn) => Segment::Arc { turn, duration: t - s },
                None => Segment::Straight { duration: t - s },
            },
        ];
        let p = InterceptionPath {
            initial_heading: FRAC_PI_2,
            segments: segs,
            endpoint: y,
        };
        let end = p.integrate();
        (p.segments, end)
    };
    let mut best: Option<(f64, Vec<Segment>, PlanarPoint)> = None;
    for fam in families {
        let samples = 2000;
        let score = |s: f64| build(fam, s).1.distance(y);
        let mut k_best = 0;
        let mut d_best = f64::INFINITY;
        for k in 0..=samples {
            let d = score(fam.2 * k as f64 / samples as f64);
            if d < d_best {
                d_best = d;
                k_best = k;
            }
        }
        // golden-section refinement around the best sample
        let h = fam.2 / samples as f64;
        let (mut lo, mut hi) = ((k_best as f64 - 1.0) * h, (k_best as f64 + 1.0) * h);
        lo = lo.max(0.0);
        hi = hi.min(fam.2);
        let phi = 0.5 * (5f64.sqrt() - 1.0);
        for _ in 0..80 {
            let a = hi - phi * (hi - lo);
            let b = lo + phi * (hi - lo);
            if score(a) < score(b) {
                hi = b;
            } else {
                lo = a;
            }
        }
        let s = 0.5 * (lo + hi);
        let (segs, end) = build(fam, s);
        let d = end.distance(y);
        if best.as_ref().is_none_or(|b| d < b.0) {
            best = Some((d, segs, end));
        }
    }
    let (_, segs, end) = best.unwrap_or_else(|| (0.0, Vec::new(), PlanarPoint::ORIGIN));
    (segs, end)
}

/// Time-`t_star` path ending at the point of `R(t_star)` nearest to `y_target`.
pub fn path(t_star: f64, y_target: PlanarPoint, ell: f64) -> Result<InterceptionPath> {
    check_time(t_star)?;
    let n = nearest(t_star, y_target);
    if n.distance > ell + PATH_TOLERANCE {
        return Err(Error::NotCaptured {
            distance: n.distance,
            ell,
        });
    }
    let mirror = y_target.x < 0.0;
    let turn = |t: Turn| if mirror { t.flipped() } else { t };
    let (segments, endpoint) = match n.kind {
        NearestBoundary::Cs { theta } => (
            vec![
                Segment::Arc {
                    turn: turn(Turn::Right),
                    duration: theta,
                },
                Segment::Straight {
                    duration: (t_star - theta).max(0.0),
                },
            ],
            n.point,
        ),
        NearestBoundary::Cc { tau } => (
            vec![
                Segment::Arc {
                    turn: turn(Turn::Left),
                    duration: tau,
                },
                Segment::Arc {
                    turn: turn(Turn::Right),
                    duration: t_star - tau,
                },
            ],
            n.point,
        ),
        NearestBoundary::Inside => {
            let g = DubinsGeometry::of(y_target);
            let cs = cs_foot(&g, t_star).filter(|(_, v)| (v - t_star).abs() <= ell + PATH_TOLERANCE);
            if let Some((theta, _)) = cs {
                let segments = vec![
                    Segment::Arc {
                        turn: turn(Turn::Right),
                        duration: theta,
                    },
                    Segment::Straight {
                        duration: t_star - theta,
                    },
                ];
                let p = cs_point(theta, t_star);
                let endpoint = if mirror { p.mirrored() } else { p };
                return Ok(InterceptionPath {
                    initial_heading: FRAC_PI_2,
                    segments,
                    endpoint,
                });
            }
            let (segments, end) = interior_path(t_star, y_target);
            if end.distance(y_target) > ell + PATH_TOLERANCE {
                return Err(Error::PathUnavailable);
            }
            (segments, end)
        }
    };
    Ok(InterceptionPath {
        initial_heading: FRAC_PI_2,
        segments,
        endpoint,
    })
}

/// The Dubins car as a [`PlantModel`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DubinsCar;

impl PlantModel for DubinsCar {
    fn name(&self) -> &'static str {
        "dubins"
    }

    fn capabilities(&self) -> Capabilities {
        Capabilities {
            has_closed_form_best_estimator: true,
            has_boundary_sampler: true,
            has_path_reconstruction: true,
        }
    }

    fn distance(&self, t: f64, y: PlanarPoint) -> f64 {
        nearest(t, y).distance
    }

    fn contains(&self, t: f64, y: PlanarPoint) -> bool {
        DubinsGeometry::of(y).contains(t)
    }

    /// Closed form only on the CS part of the plane; `None` elsewhere.
    fn closed_form_best_estimator(&self, t: f64, y: PlanarPoint, v: f64, ell: f64) -> Option<f64> {
        let g = DubinsGeometry::of(y);
        if g.contains(t) {
            return Some(t);
        }
        if !g.on_cs_branch(t) {
            return None;
        }
        let v_cs = g.v_cs?;
        if v_cs - t <= ell {
            Some(t)
        } else {
            Some(t + (v_cs - t - ell) / (1.0 + v))
        }
    }

    fn boundary(&self, t: f64, n: usize) -> Result<Vec<Vec<PlanarPoint>>> {
        boundary_branches(t, n)
    }

    fn path(&self, t_star: f64, y_target: PlanarPoint, ell: f64) -> Result<InterceptionPath> {
        path(t_star, y_target, ell)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> PlanarPoint {
        PlanarPoint::new(x, y)
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(p(0.0, 0.0)), DubinsRegion::DI);
        assert_eq!(classify(p(0.0, 3.0)), DubinsRegion::DII);
        assert_eq!(classify(p(0.5, 0.1)), DubinsRegion::DI);
        assert_eq!(classify(p(0.0, 1.0)), DubinsRegion::DIII);
        assert_eq!(classify(p(1.0, -1.0)), DubinsRegion::DII);
    }

    #[test]
    fn theta_cs_examples() {
        assert_eq!(theta_cs(p(0.0, 2.0)).unwrap(), 0.0);
        assert!((theta_cs(p(2.0, 0.0)).unwrap() - PI).abs() < 1e-15);
        assert_eq!(theta_cs(p(0.0, 3.0)).unwrap(), 0.0);
        assert!(theta_cs(p(0.5, 0.1)).is_err());
        // below the x-axis the lower branch is taken
        assert!(theta_cs(p(0.5, -1.5)).unwrap() > PI);
    }

    #[test]
    fn v_cs_examples() {
        assert_eq!(v_cs(p(0.0, 2.0)).unwrap(), 2.0);
        assert!((v_cs(p(2.0, 0.0)).unwrap() - PI).abs() < 1e-15);
        assert_eq!(v_cs(p(0.0, 3.0)).unwrap(), 3.0);
        assert_eq!(v_cs(p(0.0, 0.0)).unwrap(), 0.0);
        assert!(v_cs(p(0.5, 0.1)).is_err());
    }

    #[test]
    fn v_cc_examples() {
        let (plus, minus) = v_cc(p(0.0, 0.0)).unwrap();
        assert_eq!(plus, None);
        assert!((minus.unwrap() - TAU).abs() < 1e-15);
        let (plus, minus) = v_cc(p(0.5, 0.1)).unwrap();
        assert_eq!(plus, None);
        assert!(minus.unwrap() > 1.0);
        assert_eq!(v_cc(p(0.0, 3.0)).unwrap(), (None, None));
        assert_eq!(v_cc(p(5.0, -5.0)).unwrap(), (None, None));
    }

    #[test]
    fn contains_examples() {
        assert!(contains(0.0, p(0.0, 0.0)).unwrap());
        assert!(contains(2.0, p(0.0, 2.0)).unwrap());
        assert!(!contains(1.0, p(0.5, 0.1)).unwrap());
        assert!(!contains(1.0, p(0.0, 0.0)).unwrap());
        assert!(contains(TAU, p(0.0, 0.0)).unwrap());
        assert!(contains(-1.0, p(0.0, 0.0)).is_err());
    }

    #[test]
    fn distance_examples() {
        assert!((distance(1.0, p(0.0, 3.0)).unwrap() - 2.0).abs() < 1e-15);
        assert_eq!(distance(3.0, p(0.0, 3.0)).unwrap(), 0.0);
        assert_eq!(distance(0.0, p(0.0, 0.0)).unwrap(), 0.0);
        // at t = 0 the set is the origin alone
        assert!((distance(0.0, p(3.0, 4.0)).unwrap() - 5.0).abs() < 1e-12);
    }

    #[test]
    fn mirror_symmetry_is_exact() {
        for &(t, x, y) in &[(1.0, 0.3, 0.2), (2.5, 1.7, -0.4), (4.0, 0.2, 2.2), (0.7, 3.0, 1.0)] {
            assert_eq!(distance(t, p(x, y)).unwrap(), distance(t, p(-x, y)).unwrap());
        }
    }

    #[test]
    fn cubic_leading_coefficient_degeneracy() {
        let t = PI;
        let y = p(0.0, -(PI / 3.0).sin());
        let c = cubic_coefficients(t, y);
        assert!(c[0].abs() < 1e-15);
        let roots = cc_cubic_roots(t, y).unwrap();
        assert!(!roots.is_empty());
        for r in roots {
            assert!(cubic::eval_cubic(c, r).abs() < 1e-9);
        }
    }

    #[test]
    fn best_estimator_examples() {
        let a = best_estimator(1.0, p(0.0, 3.0), 0.5, 0.1).unwrap();
        assert!((a - (1.0 + 1.9 / 1.5)).abs() < 1e-15);
        assert!((a - 2.266_666_666_666_667).abs() < 1e-12);
        assert_eq!(best_estimator(0.0, p(0.0, 3.0), 0.0, 0.0).unwrap(), 3.0);
        // inside the turning circle only the simple step is available
        let y = p(0.3, 0.1);
        let d = distance(0.0, y).unwrap();
        let b = best_estimator(0.0, y, 0.5, 0.05).unwrap();
        assert!((b - (d - 0.05) / 1.5).abs() < 1e-15);
        assert!(!closed_form_applies(0.0, y));
        assert!(best_estimator(3.0, p(0.0, 3.0), 0.5, 0.1).is_err());
    }

    #[test]
    fn boundary_examples() {
        assert!(cs_point(0.0, 2.0).distance(p(0.0, 2.0)) < 1e-15);
        assert!(cs_point(PI, PI).distance(p(2.0, 0.0)) < 1e-15);
        for t in [0.3, 1.0, 2.0, PI, 5.0, 7.0] {
            for q in boundary_points(t, 200).unwrap() {
                assert!(
                    distance(t, q).unwrap() <= 1e-6,
                    "t={t} q={q:?} d={}",
                    distance(t, q).unwrap()
                );
            }
        }
        assert!(boundary_points(0.0, 10).is_err());
        assert!(boundary_points(1.0, 1).is_err());
    }

    #[test]
    fn path_examples() {
        let a = path(2.0, p(0.0, 2.0), 0.0).unwrap();
        assert_eq!(
            a.segments,
            vec![
                Segment::Arc {
                    turn: Turn::Right,
                    duration: 0.0
                },
                Segment::Straight { duration: 2.0 }
            ]
        );
        assert!(a.endpoint.distance(p(0.0, 2.0)) < 1e-12);

        let b = path(PI, p(2.0, 0.0), 0.0).unwrap();
        assert_eq!(b.segments.len(), 2);
        assert!(matches!(b.segments[0], Segment::Arc { turn: Turn::Right, duration } if (duration - PI).abs() < 1e-15));
        assert!(b.endpoint.distance(p(2.0, 0.0)) < 1e-12);
        assert!(b.integrate().distance(b.endpoint) < 1e-12);

        let c = path(PI, p(-2.0, 0.0), 0.0).unwrap();
        assert!(matches!(c.segments[0], Segment::Arc { turn: Turn::Left, .. }));
        assert!(c.integrate().distance(p(-2.0, 0.0)) < 1e-12);
    }
}
