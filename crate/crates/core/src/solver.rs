//! The generic extremization: one transcendental equation for every
//! kinematics, derived from the shared virial structure
//! p0 T'(p0) = r0 V'(r0) with p0 r0 = Q.

use crate::kinetic::KineticSpec;
use crate::potential::PotentialSpec;
use crate::solution::AfmSolution;
use crate::tangent::classify_bound;
use crate::tol::{BISECT_ITERS, BRACKET_MAX_DOUBLINGS, VIRIAL_RESIDUAL_REL};
use crate::CoreError;
use std::sync::Arc;

/// K(r) = V'(r)/P'(r) for the auxiliary form P(r) = sgn(lambda) r^lambda,
/// i.e. V'(r) r^{1-lambda} / |lambda|.
pub fn k_function(v: &PotentialSpec, lambda: f64, r: f64) -> Result<f64, CoreError> {
    if lambda == 0.0 {
        return Err(CoreError::ZeroExponent);
    }
    if !v.contains(r) {
        return Err(CoreError::OutsideDomain { r });
    }
    Ok(v.deriv(r) * r.powf(1.0 - lambda) / lambda.abs())
}

/// Kinetic-minus-potential side of the extremization at mean radius r:
/// f(r) = p0 T'(p0) - r V'(r) with p0 = Q/r. The solution radius is its
/// zero; f > 0 at small r for every supported kinematics.
fn extremization(kin: &KineticSpec, v: &PotentialSpec, q: f64, r: f64) -> f64 {
    kin.p_times_deriv(q / r) - r * v.deriv(r)
}

/// Finds the mean radius by geometric bracketing plus bisection.
fn solve_radius(kin: &KineticSpec, v: &PotentialSpec, q: f64) -> Result<f64, CoreError> {
    let (lo_dom, hi_dom) = v.domain();
    // Start from a point inside the domain.
    let mut lo = if hi_dom.is_finite() {
        (lo_dom.max(1e-12) * hi_dom).sqrt()
    } else {
        1.0f64.max(2.0 * lo_dom)
    };
    // Walk down until the kinetic side dominates.
    let mut tries = 0;
    while extremization(kin, v, q, lo) <= 0.0 {
        lo *= 0.5;
        tries += 1;
        if tries > BRACKET_MAX_DOUBLINGS || lo <= lo_dom {
            return Err(CoreError::NoBoundState);
        }
    }
    // Walk up until the potential side dominates.
    let mut hi = lo;
    tries = 0;
    while extremization(kin, v, q, hi) > 0.0 {
        hi *= 2.0;
        tries += 1;
        if tries > BRACKET_MAX_DOUBLINGS || hi >= hi_dom {
            return Err(CoreError::NoBoundState);
        }
    }
    let (mut lo, mut hi) = (lo, hi);
    for _ in 0..BISECT_ITERS {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break; // f64 resolution reached
        }
        if extremization(kin, v, q, mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Solves the auxiliary-field extremization for the given kinematics,
/// potential, auxiliary exponent and level number Q.
///
/// The returned radius satisfies the kinematics-specific transcendental
/// equation (nonrelativistic r0^3 V'(r0) = Q^2/m; semirelativistic
/// sigma Q = r0^2 V'(r0) sqrt(1 + (m r0/Q)^2); the analogous two-mass form),
/// and the energy is T(Q/r0) + V(r0). The exponent lambda only affects the
/// reported auxiliary-field value and bound direction.
pub fn solve_afm(
    kin: &KineticSpec,
    v: &PotentialSpec,
    lambda: f64,
    q: f64,
) -> Result<AfmSolution, CoreError> {
    if lambda == 0.0 {
        return Err(CoreError::ZeroExponent);
    }
    if !(q > 0.0) {
        return Err(CoreError::InvalidLevelNumber(q));
    }
    if !kin.is_valid() {
        return Err(CoreError::InvalidKinematics);
    }
    let r0 = solve_radius(kin, v, q)?;
    let p0 = q / r0;
    let rhs = r0 * v.deriv(r0);
    let residual = (kin.p_times_deriv(p0) - rhs).abs();
    if residual > VIRIAL_RESIDUAL_REL * rhs.abs() {
        return Err(CoreError::NoConvergence);
    }
    let energy = kin.energy(p0) + v.value(r0);
    if kin.fully_massless() && energy <= 0.0 {
        // A stationary point with non-positive total mass is a collapsed
        // channel, not a bound state.
        return Err(CoreError::NoBoundState);
    }
    Ok(AfmSolution {
        energy,
        r0,
        p0,
        nu0: k_function(v, lambda, r0)?,
        bound_tag: classify_bound(v, lambda),
    })
}

/// Extremization when the auxiliary form is kept as an explicit additive
/// term: H = T(p) + a P(r) + V(r) with P(r) = sgn(eta) r^eta. The optimal
/// auxiliary-field value shifts to a + K(r0), and for nonrelativistic
/// kinematics the radius solves a |eta| r0^{eta+2} + r0^3 V'(r0) = Q^2/m.
pub fn afm_sum_extension(
    kin: &KineticSpec,
    a: f64,
    eta: f64,
    v: &PotentialSpec,
    q: f64,
) -> Result<AfmSolution, CoreError> {
    if eta == 0.0 {
        return Err(CoreError::ZeroExponent);
    }
    let sign = eta.signum();
    let v_val = v.value_fn();
    let v_der = v.deriv_fn();
    let v2 = v.clone();
    let total = PotentialSpec::from_parts(
        format!("sum({a};{eta};{})", v.label()),
        v.domain(),
        Arc::new(move |r: f64| a * sign * r.powf(eta) + v_val(r)),
        Arc::new(move |r: f64| a * eta.abs() * r.powf(eta - 1.0) + v_der(r)),
        Some(Arc::new(move |r: f64| {
            a * eta.abs() * (eta - 1.0) * r.powf(eta - 2.0) + v2.second_derivative(r)
        })),
    );
    let mut solution = solve_afm(kin, &total, eta, q)?;
    solution.nu0 = a + k_function(v, eta, solution.r0)?;
    solution.bound_tag = classify_bound(v, eta);
    Ok(solution)
}
