//! Closed-form overlaps between dilated states of one family.
//!
//! F_{n,n',l}(a) = a^{3/2} Integral R_{n,l}(x) R_{n',l}(a x) x^2 dx is the
//! overlap of two states whose inverse length scales differ by the factor a
//! (for the hydrogen-like family a is the ratio of the full scales eta'/eta).
//! Both kernels obey F(1) = delta_{nn'}, |F| <= 1 and the swap identity
//! F_{n,n',l}(1/a) = F_{n',n,l}(a).

use crate::poly::{ln_factorial, parity};
use crate::StateError;
use afm_special::ln_gamma;

/// The two families with closed-form dilated overlaps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DilatedFamily {
    Oscillator,
    Hydrogenic,
}

/// Overlap of |n, l> with the a-dilated |n', l> within one family.
pub fn overlap_dilated(
    family: DilatedFamily,
    n: u32,
    n_prime: u32,
    l: u32,
    a: f64,
) -> Result<f64, StateError> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(StateError::NonPositiveScale(a));
    }
    if n > n_prime {
        // Swap identity keeps every factorial argument non-negative below.
        return overlap_dilated(family, n_prime, n, l, 1.0 / a);
    }
    Ok(match family {
        DilatedFamily::Oscillator => oscillator_kernel(n, n_prime, l, a),
        DilatedFamily::Hydrogenic => hydrogenic_kernel(n, n_prime, l, a),
    })
}

/// Oscillator kernel, n <= n'.
fn oscillator_kernel(n: u32, np: u32, l: u32, a: f64) -> f64 {
    let lf = l as f64;
    let ln_pref = 0.5
        * (ln_factorial(n)
            + ln_factorial(np)
            + ln_gamma(n as f64 + lf + 1.5)
            + ln_gamma(np as f64 + lf + 1.5))
        + (2.0 * n as f64 + lf + 1.5) * (2.0 * a).ln()
        - (n as f64 + np as f64 + lf + 1.5) * (1.0 + a * a).ln();
    let u = 1.0 - a * a;
    let d = (np - n) as i32;
    let mut sum = 0.0f64;
    for k in 0..=n {
        let ln_den = ln_factorial(k)
            + ln_factorial(n - k)
            + ln_factorial(np - n + k)
            + ln_gamma((n - k) as f64 + lf + 1.5)
            + 2.0 * k as f64 * (2.0 * a).ln();
        sum += parity(k) * u.powi(2 * k as i32) * (-ln_den).exp();
    }
    ln_pref.exp() * u.powi(d) * sum
}

/// Hydrogen-like kernel, n <= n'. Powers of Q(a) = aN - N' are folded into
/// each term of the sum so the kernel stays finite at the zeros of Q.
fn hydrogenic_kernel(n: u32, np: u32, l: u32, a: f64) -> f64 {
    let nn = (n + l + 1) as f64;
    let nnp = (np + l + 1) as f64;
    let q = a * nn - nnp;
    let s = a * nn + nnp;
    let ln_pref = 0.5
        * (a.ln()
            + ln_factorial(n)
            + ln_factorial(n + 2 * l + 1)
            + ln_factorial(np)
            + ln_factorial(np + 2 * l + 1))
        + nn * (4.0 * a * nn * nnp).ln()
        - (nn + nnp + 1.0) * s.ln();
    let d = (np - n) as i32;
    let mut sum = 0.0f64;
    for k in 0..=n {
        let ln_den = ln_factorial(k)
            + ln_factorial(n - k)
            + ln_factorial(n + 2 * l + 1 - k)
            + ln_factorial(np - n + k + 1)
            + k as f64 * (4.0 * a * nn * nnp).ln();
        let e = d + 2 * k as i32;
        let mut bracket = 2.0 * (nn - k as f64) * (np - n + k + 1) as f64 * q.powi(e)
            + (n - k) as f64 * (n + 2 * l + 1 - k) as f64 / (2.0 * a * nn) * q.powi(e + 1);
        if np - n + k > 0 {
            // The remaining term would carry Q^{-1} only when its
            // coefficient (n'-n+k)(n'-n+k+1) vanishes, so e-1 >= 0 here.
            bracket +=
                (np - n + k) as f64 * (np - n + k + 1) as f64 * (2.0 * a * nn) * q.powi(e - 1);
        }
        sum += parity(k) * (-ln_den).exp() * bracket;
    }
    parity(n + np) * ln_pref.exp() * sum
}
