use thiserror::Error;

use crate::geometry::Point;

/// Absolute tolerance of the adaptive quadrature.
pub const TOLERANCE: f64 = 1e-8;
/// Deepest interval halving before giving up.
pub const MAX_DEPTH: u32 = 20;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum IntegrationError {
    #[error("integrand undefined at x = {0}")]
    Undefined(f64),
    #[error("integrand does not settle near x = {0} (unbounded or too wild)")]
    NoConvergence(f64),
    #[error("integration interval [{0}, {1}] is empty or not finite")]
    BadInterval(f64, f64),
    #[error("polyline covers [{0}, {1}] only")]
    OutsidePolyline(f64, f64),
}

/// Adaptive Simpson quadrature of `f` over `[a, b]`.
pub fn integrate<F: Fn(f64) -> Option<f64>>(f: F, a: f64, b: f64) -> Result<f64, IntegrationError> {
    if !(a.is_finite() && b.is_finite() && a < b) {
        return Err(IntegrationError::BadInterval(a, b));
    }
    let eval = |x: f64| f(x).filter(|y| y.is_finite()).ok_or(IntegrationError::Undefined(x));
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (eval(a)?, eval(m)?, eval(b)?);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    step(&eval, a, b, fa, fm, fb, whole, TOLERANCE, 0)
}

#[allow(clippy::too_many_arguments)]
fn step<F: Fn(f64) -> Result<f64, IntegrationError>>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    eps: f64,
    depth: u32,
) -> Result<f64, IntegrationError> {
    let m = 0.5 * (a + b);
    let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
    let (flm, frm) = (f(lm)?, f(rm)?);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    // second test: the difference is already at rounding level
    if delta.abs() <= 15.0 * eps || delta.abs() <= 64.0 * f64::EPSILON * (left.abs() + right.abs()) {
        return Ok(left + right + delta / 15.0);
    }
    if depth >= MAX_DEPTH {
        return Err(IntegrationError::NoConvergence(m));
    }
    Ok(step(f, a, m, fa, flm, fm, left, eps * 0.5, depth + 1)?
        + step(f, m, b, fm, frm, fb, right, eps * 0.5, depth + 1)?)
}

/// Exact area under the piecewise-linear function through `joints`
/// (sorted by x) between `a` and `b`.
pub fn trapezoid(joints: &[Point], a: f64, b: f64) -> Result<f64, IntegrationError> {
    if !(a.is_finite() && b.is_finite() && a <= b) {
        return Err(IntegrationError::BadInterval(a, b));
    }
    let (Some(first), Some(last)) = (joints.first(), joints.last()) else {
        return Err(IntegrationError::OutsidePolyline(f64::NAN, f64::NAN));
    };
    if a < first.x || b > last.x {
        return Err(IntegrationError::OutsidePolyline(first.x, last.x));
    }
    let mut sum = 0.0;
    for w in joints.windows(2) {
        let (p, q) = (w[0], w[1]);
        let lo = p.x.max(a);
        let hi = q.x.min(b);
        if hi <= lo {
            continue;
        }
        let at = |x: f64| {
            if x == p.x {
                p.y
            } else if x == q.x {
                q.y
            } else {
                p.y + (q.y - p.y) * (x - p.x) / (q.x - p.x)
            }
        };
        sum += (hi - lo) * (at(lo) + at(hi)) * 0.5;
    }
    Ok(sum)
}
