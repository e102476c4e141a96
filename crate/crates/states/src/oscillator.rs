//! Radial harmonic-oscillator states and their closed-form observables.
//!
//! States are labelled by the inverse length `scale` (written lambda below),
//! with normalized radial part
//! R(r) = lambda^{3/2} sqrt(2 n!/Gamma(n+l+3/2)) (lambda r)^l
//!        e^{-lambda^2 r^2/2} L_n^{l+1/2}(lambda^2 r^2).

use crate::poly::{laguerre, ln_binomial, parity};
use afm_special::ln_gamma;

/// Principal oscillator band number 2n + l + 3/2.
pub fn band(n: u32, l: u32) -> f64 {
    2.0 * n as f64 + l as f64 + 1.5
}

/// Normalized radial wavefunction R_{n,l}(r).
pub fn radial(scale: f64, n: u32, l: u32, r: f64) -> f64 {
    let x = scale * r;
    let ln_norm = 0.5
        * (2f64.ln() + ln_gamma(n as f64 + 1.0) - ln_gamma(n as f64 + l as f64 + 1.5));
    let poly = laguerre(n, l as f64 + 0.5, x * x);
    scale.powf(1.5) * ln_norm.exp() * x.powi(l as i32) * (-0.5 * x * x).exp() * poly
}

/// True when <r^k> converges, i.e. the radial integrand r^{2l+k+2} e^{-x^2}
/// is integrable at the origin.
pub fn moment_converges(l: u32, k: i32) -> bool {
    k > -(2 * l as i32) - 3
}

/// Closed-form <r^k> as a finite double sum over the Laguerre expansion.
pub fn radial_moment(scale: f64, n: u32, l: u32, k: i32) -> f64 {
    let ln_front = ln_gamma(n as f64 + l as f64 + 1.5) - ln_gamma(n as f64 + 1.0);
    let half_k = 0.5 * (k as f64 + 3.0);
    let mut acc = 0.0f64;
    for p in 0..=n {
        for q in 0..=n {
            let ln_term = ln_binomial(n, p)
                + ln_binomial(n, q)
                + ln_gamma(l as f64 + p as f64 + q as f64 + half_k)
                - ln_gamma(p as f64 + l as f64 + 1.5)
                - ln_gamma(q as f64 + l as f64 + 1.5);
            acc += parity(p + q) * (ln_front + ln_term).exp();
        }
    }
    acc / scale.powi(k)
}

/// Momentum moment <p^k>; the momentum-space density is the coordinate
/// density at inverse scale, so <p^k> = scale^{2k} <r^k>.
pub fn momentum_moment(scale: f64, n: u32, l: u32, k: i32) -> f64 {
    scale.powi(2 * k) * radial_moment(scale, n, l, k)
}

/// Probability density at the origin for l = 0 states,
/// |psi_{n,0}(0)|^2 = scale^3 2 Gamma(n+3/2)/(pi^2 n!).
pub fn density_at_origin(scale: f64, n: u32) -> f64 {
    let ln_ratio = ln_gamma(n as f64 + 1.5) - ln_gamma(n as f64 + 1.0);
    scale.powi(3) * 2.0 * ln_ratio.exp() / (std::f64::consts::PI * std::f64::consts::PI)
}
