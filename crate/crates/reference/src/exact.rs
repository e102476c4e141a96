//! Closed-form exact spectra used to calibrate the numerical oracles.

use crate::RefError;
use afm_special::{airy_zero, bessel_j};

/// Exact s-wave level of `p^2/(2m) + a r`, from the zeros of the Airy
/// function: `E_n = -(a^2 / 2m)^{1/3} alpha_n`.
pub fn airy_exact_linear(mass: f64, slope: f64, n: u32) -> Result<f64, RefError> {
    if !(mass > 0.0) || !(slope > 0.0) {
        return Err(RefError::InvalidConfig("linear well needs m > 0 and a > 0"));
    }
    Ok(-(slope * slope / (2.0 * mass)).cbrt() * airy_zero(n))
}

/// Exact s-wave ground level of `p^2 - g e^{-r}`: the energy solves
/// `J_{2 sqrt(-eps)}(2 sqrt(g)) = 0`, the deepest root being the ground
/// state. Returns 0 exactly at the threshold coupling and an error below it.
pub fn exp_swave_exact(g: f64) -> Result<f64, RefError> {
    if !(g > 0.0) {
        return Err(RefError::InvalidConfig("well depth must be positive"));
    }
    let x = 2.0 * g.sqrt();
    let f = |nu: f64| bessel_j(nu, x);
    // J_nu(x) > 0 once nu >= x (the first zero exceeds the order), so the
    // deepest root is the first sign change scanning the order downward.
    let steps = (200.0 * x.max(1.0)).min(20_000.0) as usize;
    let mut hi = x;
    let mut f_hi = f(hi);
    for i in (0..steps).rev() {
        let lo = x * i as f64 / steps as f64;
        let f_lo = f(lo);
        if f_hi == 0.0 {
            return Ok(-hi * hi / 4.0);
        }
        if f_lo * f_hi < 0.0 {
            let (mut a, mut b) = (lo, hi);
            let mut fa = f_lo;
            for _ in 0..100 {
                let m = 0.5 * (a + b);
                let fm = f(m);
                if fa * fm <= 0.0 {
                    b = m;
                } else {
                    a = m;
                    fa = fm;
                }
            }
            let nu = 0.5 * (a + b);
            return Ok(-nu * nu / 4.0);
        }
        hi = lo;
        f_hi = f_lo;
    }
    if f_hi.abs() < 1e-9 {
        return Ok(0.0); // threshold coupling: zero-order Bessel zero
    }
    Err(RefError::NoRoot)
}
