//! The tangent auxiliary potential and the convexity classifier.

use crate::potential::PotentialSpec;
use crate::solution::BoundKind;
use crate::solver::k_function;
use crate::tol::{CLASSIFY_GRID, CLASSIFY_R_MAX, CLASSIFY_R_MIN};
use crate::CoreError;
use std::sync::Arc;

/// Potential of the optimized auxiliary problem,
/// V~(r) = K(r0) [P(r) - P(r0)] + V(r0) with P(r) = sgn(lambda) r^lambda.
/// It touches V at r0 to first order: V~(r0) = V(r0), V~'(r0) = V'(r0).
pub fn tangent_potential(
    v: &PotentialSpec,
    lambda: f64,
    r0: f64,
) -> Result<PotentialSpec, CoreError> {
    if !v.contains(r0) {
        return Err(CoreError::OutsideDomain { r: r0 });
    }
    let k0 = k_function(v, lambda, r0)?;
    let sign = lambda.signum();
    let p_r0 = sign * r0.powf(lambda);
    let v_r0 = v.value(r0);
    let value = Arc::new(move |r: f64| k0 * (sign * r.powf(lambda) - p_r0) + v_r0);
    let deriv = Arc::new(move |r: f64| k0 * lambda.abs() * r.powf(lambda - 1.0));
    let second = Arc::new(move |r: f64| k0 * lambda.abs() * (lambda - 1.0) * r.powf(lambda - 2.0));
    Ok(PotentialSpec::from_parts(
        format!("tangent({};{lambda};{r0})", v.label()),
        v.domain(),
        value,
        deriv,
        Some(second),
    ))
}

/// Sign of d^2 V / dP^2 at radius r, up to a positive factor:
/// s(r) = r V''(r) - (lambda - 1) V'(r).
fn convexity_sign(v: &PotentialSpec, lambda: f64, r: f64) -> (f64, f64) {
    let d1 = v.deriv(r);
    let d2 = v.second_derivative(r);
    let s = r * d2 - (lambda - 1.0) * d1;
    let scale = (r * d2).abs() + ((lambda - 1.0) * d1).abs();
    (s, scale)
}

/// Classifies the bound direction of the auxiliary-field energy by sampling
/// the convexity of V as a function of P(r) = sgn(lambda) r^lambda on a
/// logarithmic radius grid.
pub fn classify_bound(v: &PotentialSpec, lambda: f64) -> BoundKind {
    let (lo, hi) = v.domain();
    let r_min = CLASSIFY_R_MIN.max(lo * 1.001 + 1e-300);
    let r_max = CLASSIFY_R_MAX.min(if hi.is_finite() { hi * 0.999 } else { hi });
    if !(r_max > r_min) {
        return BoundKind::Unknown;
    }
    let (ln_lo, ln_hi) = (r_min.ln(), r_max.ln());
    let mut any_neg = false;
    let mut any_pos = false;
    for i in 0..CLASSIFY_GRID {
        let t = i as f64 / (CLASSIFY_GRID - 1) as f64;
        let r = (ln_lo + t * (ln_hi - ln_lo)).exp();
        let (s, scale) = convexity_sign(v, lambda, r);
        if s.abs() <= 1e-9 * scale.max(1e-300) {
            continue; // degenerate point
        }
        if s < 0.0 {
            any_neg = true;
        } else {
            any_pos = true;
        }
    }
    match (any_neg, any_pos) {
        (true, false) => BoundKind::Upper,
        (false, true) => BoundKind::Lower,
        (false, false) => BoundKind::Exact,
        (true, true) => BoundKind::Unknown,
    }
}
