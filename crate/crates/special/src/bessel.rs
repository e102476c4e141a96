//! Bessel functions of the first kind: J0/J1 with their positive zeros,
//! plus real (nonnegative) order evaluation for moderate arguments.
//!
//! J0 and J1 switch from the Maclaurin series to the Hankel asymptotic
//! expansion at |x| = 12, keeping absolute error near 1e-12 across the
//! switch. Real-order evaluation is series-only and restricted to the
//! argument range where that is accurate.

use crate::{gamma::ln_gamma, tol};

const SERIES_LIMIT: f64 = 12.0;

/// `J_0(x)`.
pub fn bessel_j0(x: f64) -> f64 {
    let x = x.abs();
    if x <= SERIES_LIMIT {
        series_integer(0, x)
    } else {
        hankel(0, x)
    }
}

/// `J_1(x)` (odd in x).
pub fn bessel_j1(x: f64) -> f64 {
    let sign = if x < 0.0 { -1.0 } else { 1.0 };
    let x = x.abs();
    sign * if x <= SERIES_LIMIT {
        series_integer(1, x)
    } else {
        hankel(1, x)
    }
}

/// `J_nu(x)` for real order `nu >= 0` and `0 <= x <= 16` by Maclaurin
/// series; the range covers every screened/exponential-well calculation
/// in this workspace while keeping series cancellation under ~1e-11.
pub fn bessel_j(nu: f64, x: f64) -> f64 {
    assert!(nu >= 0.0, "bessel_j: order must be nonnegative, got {nu}");
    assert!(
        (0.0..=16.0).contains(&x),
        "bessel_j: argument {x} outside the supported series range [0, 16]"
    );
    if x == 0.0 {
        return if nu == 0.0 { 1.0 } else { 0.0 };
    }
    let q = 0.25 * x * x;
    let mut term = 1.0f64;
    let mut sum = term;
    for k in 1..400 {
        let kf = k as f64;
        term *= -q / (kf * (nu + kf));
        sum += term;
        if term.abs() < 1e-18 * sum.abs().max(1e-300) {
            break;
        }
    }
    // Prefactor (x/2)^nu / Gamma(nu+1) in log space to dodge overflow.
    sum * (nu * (0.5 * x).ln() - ln_gamma(nu + 1.0)).exp()
}

/// `k`-th positive zero of `J_0`, 1-based: `bessel_j0_zero(1)` = 2.40482...
pub fn bessel_j0_zero(k: u32) -> f64 {
    assert!(k >= 1, "bessel_j0_zero is 1-based");
    // McMahon expansion seed, then Newton with J0' = -J1.
    let beta = (k as f64 - 0.25) * std::f64::consts::PI;
    let mut x = beta + 1.0 / (8.0 * beta) - 124.0 / (3.0 * (8.0 * beta).powi(3));
    for _ in 0..tol::MAX_ITER {
        let f = bessel_j0(x);
        if f == 0.0 {
            break;
        }
        let step = -f / bessel_j1(x);
        x -= step;
        if step.abs() <= tol::STEP_CONVERGED * x {
            break;
        }
    }
    x
}

fn series_integer(nu: u32, x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0f64;
    let mut sum = term;
    for k in 1..80 {
        let kf = k as f64;
        term *= -q / (kf * (nu as f64 + kf));
        sum += term;
        if term.abs() < 1e-18 * sum.abs().max(1e-30) {
            break;
        }
    }
    match nu {
        0 => sum,
        1 => 0.5 * x * sum,
        _ => unreachable!("series_integer only serves J0/J1"),
    }
}

/// Hankel asymptotic expansion for integer order, truncated at the
/// smallest term. Used only for x > 12 where it reaches ~1e-13.
fn hankel(nu: u32, x: f64) -> f64 {
    let mu = 4.0 * (nu * nu) as f64;
    let mut coeff = 1.0f64; // (nu, m) Hankel symbol
    let mut scale = 1.0f64; // x^{-m}
    let (mut p, mut q) = (0.0f64, 0.0f64);
    let mut prev = f64::INFINITY;
    for m in 0..30u32 {
        if m > 0 {
            let mf = m as f64;
            coeff *= (mu - (2.0 * mf - 1.0) * (2.0 * mf - 1.0)) / (mf * 8.0);
        }
        let t = coeff * scale;
        if t.abs() > prev {
            break;
        }
        prev = t.abs();
        // (-1)^k applied per pair: P takes m = 0,2,4..., Q takes m = 1,3,...
        let sign = if m % 4 < 2 { 1.0 } else { -1.0 };
        if m % 2 == 0 {
            p += sign * t;
        } else {
            q += sign * t;
        }
        scale /= x;
    }
    let omega = x - (nu as f64) * std::f64::consts::FRAC_PI_2 - std::f64::consts::FRAC_PI_4;
    let (s, c) = omega.sin_cos();
    (2.0 / (std::f64::consts::PI * x)).sqrt() * (p * c - q * s)
}
