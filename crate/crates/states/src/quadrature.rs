//! Direct numerical quadrature over radial densities, used to cross-check
//! the closed-form observables and to form overlaps that have no closed form.

use crate::{radial_wavefunction, Family, TrialState};
use afm_special::gauss_legendre;

const NODES_PER_PANEL: usize = 64;

/// Radius beyond which the state's density is negligible at f64 precision.
fn tail_radius(state: &TrialState) -> f64 {
    let n = state.n() as f64;
    let l = state.l() as f64;
    match state.family() {
        Family::Oscillator { scale } => ((4.0 * n + 2.0 * l + 3.0).sqrt() + 9.0) / scale,
        Family::Hydrogenic { scale } => {
            let principal = n + l + 1.0;
            principal * (30.0 + 6.0 * (n + l)) / scale
        }
        Family::AiryWell { scale } => (-afm_special::airy_zero(state.n()) + 14.0) / scale,
    }
}

/// Numerical expectation value of a radial observable f(r) in a trial state,
/// by panelled Gauss-Legendre quadrature of R^2 f r^2.
pub fn radial_expectation<F: Fn(f64) -> f64>(state: &TrialState, f: F) -> f64 {
    let r_max = tail_radius(state);
    let panels = 8 + state.n() as usize + state.l() as usize;
    let (nodes, weights) = gauss_legendre(NODES_PER_PANEL);
    let h = r_max / panels as f64;
    let mut acc = 0.0;
    for p in 0..panels {
        let left = p as f64 * h;
        for (x, w) in nodes.iter().zip(&weights) {
            let r = left + 0.5 * h * (x + 1.0);
            let rad = radial_wavefunction(state, r);
            acc += 0.5 * h * w * rad * rad * f(r) * r * r;
        }
    }
    acc
}

/// Numerical overlap <a|b> of two trial states with the same l, by direct
/// quadrature of the product of radial functions.
pub fn numeric_overlap(a: &TrialState, b: &TrialState) -> f64 {
    let r_max = tail_radius(a).max(tail_radius(b));
    let panels = 10 + (a.n() + b.n() + a.l().max(b.l())) as usize;
    let (nodes, weights) = gauss_legendre(NODES_PER_PANEL);
    let h = r_max / panels as f64;
    let mut acc = 0.0;
    for p in 0..panels {
        let left = p as f64 * h;
        for (x, w) in nodes.iter().zip(&weights) {
            let r = left + 0.5 * h * (x + 1.0);
            acc += 0.5 * h * w * radial_wavefunction(a, r) * radial_wavefunction(b, r) * r * r;
        }
    }
    acc
}
