//! Radial hydrogen-like states and their closed-form observables.
//!
//! States carry an inverse length `scale` (written eta below); the Coulomb
//! exponent is gamma = eta/(n + l + 1) and the normalized radial part is
//! R(r) = (2 gamma)^{3/2} sqrt(n!/(2 N (n+2l+1)!)) (2 gamma r)^l
//!        e^{-gamma r} L_n^{2l+1}(2 gamma r),  N = n + l + 1.

use crate::poly::{laguerre, ln_binomial, ln_factorial, parity};

/// Principal quantum number N = n + l + 1.
pub fn principal(n: u32, l: u32) -> f64 {
    (n + l + 1) as f64
}

/// Coulomb exponent gamma = scale/N.
pub fn exponent(scale: f64, n: u32, l: u32) -> f64 {
    scale / principal(n, l)
}

/// Normalized radial wavefunction R_{n,l}(r).
pub fn radial(scale: f64, n: u32, l: u32, r: f64) -> f64 {
    let g = exponent(scale, n, l);
    let x = 2.0 * g * r;
    let ln_norm = 0.5
        * (ln_factorial(n)
            - (2.0 * principal(n, l)).ln()
            - ln_factorial(n + 2 * l + 1));
    let poly = laguerre(n, 2.0 * l as f64 + 1.0, x);
    (2.0 * g).powf(1.5) * ln_norm.exp() * x.powi(l as i32) * (-0.5 * x).exp() * poly
}

/// True when <r^k> converges; the closed form below needs the integer
/// k + 2l + 2 to stay non-negative, which is the same condition.
pub fn moment_converges(l: u32, k: i32) -> bool {
    k + 2 * l as i32 + 2 >= 0
}

/// Closed-form <r^k> as a finite double sum over the Laguerre expansion.
pub fn radial_moment(scale: f64, n: u32, l: u32, k: i32) -> f64 {
    let nn = principal(n, l);
    let ln_front = ln_factorial(n + 2 * l + 1) - ln_factorial(n);
    let mut acc = 0.0f64;
    for p in 0..=n {
        for q in 0..=n {
            let top = (p + q) as i32 + k + 2 * l as i32 + 2;
            debug_assert!(top >= 0);
            let ln_term = ln_binomial(n, p)
                + ln_binomial(n, q)
                + ln_factorial(top as u32)
                - ln_factorial(p + 2 * l + 1)
                - ln_factorial(q + 2 * l + 1);
            acc += parity(p + q) * (ln_front + ln_term).exp();
        }
    }
    nn.powi(k - 1) / (2.0 * (2.0 * scale).powi(k)) * acc
}

/// Momentum moments; only <p^2> = scale^2/N^2 and
/// <p^4> = scale^4 (8n + 2l + 5)/((2l+1) N^4) are finite in closed form.
pub fn momentum_moment(scale: f64, n: u32, l: u32, k: i32) -> Option<f64> {
    let nn = principal(n, l);
    match k {
        2 => Some(scale * scale / (nn * nn)),
        4 => Some(
            scale.powi(4) * (8.0 * n as f64 + 2.0 * l as f64 + 5.0)
                / ((2.0 * l as f64 + 1.0) * nn.powi(4)),
        ),
        _ => None,
    }
}

/// Probability density at the origin for l = 0 states,
/// |psi_{n,0}(0)|^2 = scale^3/(pi (n+1)^3).
pub fn density_at_origin(scale: f64, n: u32) -> f64 {
    let nn = (n + 1) as f64;
    scale.powi(3) / (std::f64::consts::PI * nn.powi(3))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_moments_match_compact_forms() {
        // <1/r> = scale/N^2 and <1/r^2> = 2 scale^2/((2l+1) N^3).
        let scale = 1.2;
        for (n, l) in [(0u32, 0u32), (1, 0), (0, 2), (3, 1)] {
            let nn = principal(n, l);
            let want1 = scale / (nn * nn);
            let want2 = 2.0 * scale * scale / ((2.0 * l as f64 + 1.0) * nn.powi(3));
            assert!((radial_moment(scale, n, l, -1) - want1).abs() <= 1e-10 * want1);
            assert!((radial_moment(scale, n, l, -2) - want2).abs() <= 1e-10 * want2);
        }
    }

    #[test]
    fn low_positive_moments_match_compact_forms() {
        // <r>   = (3N^2 - L)/(2 scale)
        // <r^2> = N^2 (5N^2 - 3L + 1)/(2 scale^2)
        // <r^3> = N^2 (35N^4 + 5N^2(5 - 6L) + 3L(L - 2))/(8 scale^3)
        // <r^4> = N^4 (63N^4 + 35N^2(3 - 2L) + 5L(3L - 10) + 12)/(8 scale^4)
        let scale = 0.9;
        for (n, l) in [(0u32, 0u32), (2, 0), (1, 1), (2, 3)] {
            let nn = principal(n, l);
            let ll = (l * (l + 1)) as f64;
            let n2 = nn * nn;
            let want = [
                (3.0 * n2 - ll) / (2.0 * scale),
                n2 * (5.0 * n2 - 3.0 * ll + 1.0) / (2.0 * scale * scale),
                n2 * (35.0 * n2 * n2 + 5.0 * n2 * (5.0 - 6.0 * ll) + 3.0 * ll * (ll - 2.0))
                    / (8.0 * scale.powi(3)),
                n2 * n2
                    * (63.0 * n2 * n2 + 35.0 * n2 * (3.0 - 2.0 * ll) + 5.0 * ll * (3.0 * ll - 10.0)
                        + 12.0)
                    / (8.0 * scale.powi(4)),
            ];
            for (k, w) in (1..=4).zip(want) {
                let got = radial_moment(scale, n, l, k);
                assert!(
                    (got - w).abs() <= 1e-9 * w.abs(),
                    "n={n} l={l} k={k}: {got} vs {w}"
                );
            }
        }
    }

    #[test]
    fn normalization_moment_is_one() {
        for (n, l) in [(0u32, 0u32), (3, 2), (5, 0)] {
            let got = radial_moment(2.3, n, l, 0);
            assert!((got - 1.0).abs() < 1e-10, "n={n} l={l}: {got}");
        }
    }

    #[test]
    fn momentum_moments() {
        let scale = 1.5;
        let p2 = momentum_moment(scale, 1, 1, 2).unwrap();
        assert!((p2 - scale * scale / 9.0).abs() < 1e-14);
        let p4 = momentum_moment(scale, 1, 1, 4).unwrap();
        assert!((p4 - scale.powi(4) * 15.0 / (3.0 * 81.0)).abs() < 1e-12);
        assert!(momentum_moment(scale, 1, 1, 3).is_none());
    }

    #[test]
    fn origin_density_scaling() {
        let d = density_at_origin(2.0, 1);
        assert!((d - 8.0 / (std::f64::consts::PI * 8.0)).abs() < 1e-14);
    }
}
