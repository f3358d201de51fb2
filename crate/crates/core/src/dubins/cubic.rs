//! Real roots of polynomials of degree at most three.
//!
//! Roots are isolated between the critical points of the polynomial (the
//! roots of its derivative) and then located by safeguarded Newton iteration
//! on the original coefficients, which keeps small roots accurate even when
//! the leading coefficient is tiny and a companion root runs off to infinity.

use crate::error::{Error, Result};

/// Leading coefficients below this fraction of the largest one are treated as zero.
pub const DEGENERACY_TOLERANCE: f64 = 1e-12;

fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().fold(0.0, |acc, &c| acc * x + c)
}

fn horner_with_derivative(coeffs: &[f64], x: f64) -> (f64, f64) {
    let mut p = 0.0;
    let mut dp = 0.0;
    for &c in coeffs {
        dp = dp * x + p;
        p = p * x + c;
    }
    (p, dp)
}

/// Evaluates `a x^3 + b x^2 + c x + d`.
pub fn eval_cubic([a, b, c, d]: [f64; 4], x: f64) -> f64 {
    horner(&[a, b, c, d], x)
}

/// All real roots of `a x^3 + b x^2 + c x + d`, ascending.
///
/// The degree drops to quadratic or linear when leading coefficients vanish
/// relative to the largest coefficient. Returns an error only when every
/// coefficient is zero.
pub fn real_roots(coeffs: [f64; 4]) -> Result<Vec<f64>> {
    let scale = coeffs.iter().fold(0.0_f64, |m, c| m.max(c.abs()));
    if scale == 0.0 || !scale.is_finite() {
        return Err(Error::DegeneratePolynomial);
    }
    let cut = DEGENERACY_TOLERANCE * scale;
    let start = coeffs.iter().position(|c| c.abs() > cut).unwrap_or(3);
    let mut roots = roots_descending(&coeffs[start..]);
    roots.sort_by(f64::total_cmp);
    Ok(roots)
}

/// Effective degree after dropping vanishing leading coefficients.
pub fn effective_degree(coeffs: [f64; 4]) -> usize {
    let scale = coeffs.iter().fold(0.0_f64, |m, c| m.max(c.abs()));
    let cut = DEGENERACY_TOLERANCE * scale;
    3 - coeffs.iter().position(|c| c.abs() > cut).unwrap_or(3)
}

fn roots_descending(p: &[f64]) -> Vec<f64> {
    match p.len() {
        0 | 1 => Vec::new(),
        2 => vec![-p[1] / p[0]],
        3 => quadratic(p[0], p[1], p[2]),
        _ => cubic(p),
    }
}

fn quadratic(a: f64, b: f64, c: f64) -> Vec<f64> {
    let disc = b * b - 4.0 * a * c;
    let tol = 1e-14 * (b * b).max((4.0 * a * c).abs());
    if disc < -tol {
        return Vec::new();
    }
    if disc <= tol {
        return vec![-b / (2.0 * a)];
    }
    let q = -0.5 * (b + b.signum() * disc.sqrt());
    let q = if q == 0.0 { -0.5 * disc.sqrt() } else { q };
    let mut roots = vec![q / a];
    if q != 0.0 {
        roots.push(c / q);
    }
    roots.into_iter().map(|r| polish(&[a, b, c], r)).collect()
}

fn cubic(p: &[f64]) -> Vec<f64> {
    let (a, b, c, d) = (p[0], p[1], p[2], p[3]);
    let mut crit = quadratic(3.0 * a, 2.0 * b, c);
    crit.sort_by(f64::total_cmp);
    // Cauchy bound on root magnitude
    let bound = 1.0 + [b, c, d].iter().fold(0.0_f64, |m, x| m.max((x / a).abs()));
    let mut knots = Vec::with_capacity(4);
    knots.push(-bound);
    knots.extend(crit.iter().copied().filter(|x| x.abs() < bound));
    knots.push(bound);

    let scale = [a, b, c, d].iter().fold(0.0_f64, |m, x| m.max(x.abs()));
    let mut roots = Vec::with_capacity(3);
    for w in knots.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        let (plo, phi) = (horner(p, lo), horner(p, hi));
        if plo * phi < 0.0 {
            roots.push(bracketed(p, lo, hi, plo));
        }
    }
    for &x in &crit {
        let m = x.abs().max(1.0);
        if horner(p, x).abs() <= 1e-12 * scale * m * m * m {
            roots.push(x);
        }
    }
    roots.sort_by(f64::total_cmp);
    roots.dedup_by(|r, s| (*r - *s).abs() <= 1e-9 * (1.0 + s.abs()));
    roots
}

/// Safeguarded Newton on a bracket with a sign change.
fn bracketed(p: &[f64], mut lo: f64, mut hi: f64, plo: f64) -> f64 {
    let lo_negative = plo < 0.0;
    let mut x = 0.5 * (lo + hi);
    for _ in 0..200 {
        let (fx, dfx) = horner_with_derivative(p, x);
        if fx == 0.0 {
            return x;
        }
        if (fx < 0.0) == lo_negative {
            lo = x;
        } else {
            hi = x;
        }
        let newton = x - fx / dfx;
        let next = if dfx != 0.0 && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        if next == x || hi - lo <= 4.0 * f64::EPSILON * x.abs().max(f64::MIN_POSITIVE) {
            return next;
        }
        x = next;
    }
    x
}

/// One Newton step, kept only if it reduces the residual.
fn polish(p: &[f64], x: f64) -> f64 {
    let (fx, dfx) = horner_with_derivative(p, x);
    if dfx == 0.0 || fx == 0.0 {
        return x;
    }
    let y = x - fx / dfx;
    if horner(p, y).abs() < fx.abs() {
        y
    } else {
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn residual_ok(coeffs: [f64; 4], roots: &[f64]) {
        let scale = coeffs.iter().fold(1.0_f64, |m, c| m.max(c.abs()));
        for &r in roots {
            let m = r.abs().max(1.0);
            assert!(
                eval_cubic(coeffs, r).abs() < 1e-9 * scale * m * m * m,
                "residual {} at {r} for {coeffs:?}",
                eval_cubic(coeffs, r)
            );
        }
    }

    #[test]
    fn three_distinct_roots() {
        // (x - 1)(x + 2)(x - 3) = x^3 - 2x^2 - 5x + 6
        let r = real_roots([1.0, -2.0, -5.0, 6.0]).unwrap();
        assert_eq!(r.len(), 3);
        for (got, want) in r.iter().zip([-2.0, 1.0, 3.0]) {
            assert!((got - want).abs() < 1e-13);
        }
    }

    #[test]
    fn single_real_root() {
        // x^3 + x + 1 has one real root near -0.6823278
        let r = real_roots([1.0, 0.0, 1.0, 1.0]).unwrap();
        assert_eq!(r.len(), 1);
        assert!((r[0] + 0.682_327_803_828_019_3).abs() < 1e-14);
    }

    #[test]
    fn double_root_detected() {
        // (x - 1)^2 (x + 1) = x^3 - x^2 - x + 1
        let r = real_roots([1.0, -1.0, -1.0, 1.0]).unwrap();
        assert_eq!(r.len(), 2);
        assert!((r[0] + 1.0).abs() < 1e-12);
        assert!((r[1] - 1.0).abs() < 1e-8);
    }

    #[test]
    fn degrades_to_quadratic_and_linear() {
        assert_eq!(effective_degree([0.0, 1.0, 0.0, -4.0]), 2);
        let q = real_roots([0.0, 1.0, 0.0, -4.0]).unwrap();
        assert_eq!(q, vec![-2.0, 2.0]);
        let l = real_roots([0.0, 0.0, 2.0, -1.0]).unwrap();
        assert_eq!(l, vec![0.5]);
        assert!(real_roots([0.0, 0.0, 0.0, 3.0]).unwrap().is_empty());
        assert_eq!(real_roots([0.0; 4]), Err(Error::DegeneratePolynomial));
    }

    #[test]
    fn tiny_leading_coefficient_keeps_small_roots() {
        // 1e-10 x^3 + (x - 1)(x - 2)
        let c = [1e-10, 1.0, -3.0, 2.0];
        let r = real_roots(c).unwrap();
        residual_ok(c, &r);
        assert!(r.iter().any(|x| (x - 1.0).abs() < 1e-8));
        assert!(r.iter().any(|x| (x - 2.0).abs() < 1e-8));
        assert!(r.iter().any(|x| *x < -1e9));
    }

    #[test]
    fn no_real_roots_quadratic() {
        assert!(real_roots([0.0, 1.0, 0.0, 1.0]).unwrap().is_empty());
    }
}
