//! Airy function of the first kind: evaluation and negative-axis zeros.
//!
//! `Ai` is evaluated by its Maclaurin series for |x| <= 6 and by the
//! large-argument asymptotic expansions beyond; the crossover keeps the
//! worst-case absolute error near 1e-9, which the zero polish then drives
//! to machine-level residuals of the evaluator itself.

use crate::tol;

const AI_0: f64 = 0.355_028_053_887_817_24;
const AI_PRIME_0: f64 = -0.258_819_403_792_806_8;
const SERIES_LIMIT: f64 = 6.0;

/// Airy function `Ai(x)`.
pub fn airy_ai(x: f64) -> f64 {
    eval(x).0
}

/// Derivative `Ai'(x)`.
pub fn airy_ai_prime(x: f64) -> f64 {
    eval(x).1
}

/// `n`-th zero of `Ai` on the negative axis, counted from zero:
/// `airy_zero(0)` is the zero closest to the origin.
pub fn airy_zero(n: u32) -> f64 {
    // Three-term large-index expansion of the zero; already 2e-3 accurate
    // for n = 0 and far inside the Halley basin for every n.
    let beta = (1.5 * std::f64::consts::PI * (n as f64 + 0.75)).powf(2.0 / 3.0);
    let b3 = beta * beta * beta;
    let mut x = -beta * (1.0 + 5.0 / (48.0 * b3) - 5.0 / (36.0 * b3 * b3));
    for _ in 0..tol::MAX_ITER {
        let (f, fp) = eval(x);
        if f == 0.0 {
            break;
        }
        // Halley step using Ai'' = x Ai.
        let step = f / (fp - x * f * f / (2.0 * fp));
        x -= step;
        if step.abs() <= tol::STEP_CONVERGED * x.abs() {
            break;
        }
    }
    x
}

fn eval(x: f64) -> (f64, f64) {
    if x.abs() <= SERIES_LIMIT {
        maclaurin(x)
    } else if x > 0.0 {
        asymptotic_positive(x)
    } else {
        asymptotic_negative(-x)
    }
}

/// Power series about the origin for both `Ai` and `Ai'`, via the two
/// independent solutions f, g of y'' = x y.
fn maclaurin(x: f64) -> (f64, f64) {
    let x2 = x * x;
    let x3 = x2 * x;
    let (mut tf, mut tg) = (1.0, x); // running terms of f and g
    let (mut f, mut g) = (tf, tg);
    let (mut fp, mut gp) = (0.0, 1.0); // their derivatives
    for k in 1..200 {
        let k = k as f64;
        fp += tf * x2 / (3.0 * k - 1.0);
        gp += tg * x2 / (3.0 * k);
        tf *= x3 / ((3.0 * k) * (3.0 * k - 1.0));
        tg *= x3 / ((3.0 * k + 1.0) * (3.0 * k));
        f += tf;
        g += tg;
        if tf.abs() + tg.abs() < 1e-18 * (f.abs() + g.abs() + 1.0) {
            break;
        }
    }
    (AI_0 * f + AI_PRIME_0 * g, AI_0 * fp + AI_PRIME_0 * gp)
}

/// Poincare coefficient pair (u_k, v_k) of the Airy asymptotic expansions.
fn poincare_step(u: &mut f64, k: u32) -> (f64, f64) {
    let kf = k as f64;
    if k > 0 {
        *u *= (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0)
            / (216.0 * kf * (2.0 * kf - 1.0));
    }
    (*u, -*u * (6.0 * kf + 1.0) / (6.0 * kf - 1.0))
}

/// Oscillatory expansion on the negative axis. The four sums alternate per
/// index *pair*: S_even = u0 - u2/z^2 + u4/z^4 - ..., S_odd = u1/z - u3/z^3 + ...
fn asymptotic_negative(z: f64) -> (f64, f64) {
    let zeta = 2.0 / 3.0 * z.powf(1.5);
    let mut u = 1.0f64;
    let mut scale = 1.0f64; // zeta^{-k}
    let mut prev = f64::INFINITY;
    let (mut ue, mut uo, mut ve, mut vo) = (0.0, 0.0, 0.0, 0.0);
    for k in 0..24u32 {
        let (uk, vk) = poincare_step(&mut u, k);
        let t = uk * scale;
        if t.abs() > prev {
            break; // divergent tail reached; stop at the smallest term
        }
        prev = t.abs();
        let sign = if k % 4 < 2 { 1.0 } else { -1.0 };
        if k % 2 == 0 {
            ue += sign * t;
            ve += sign * vk * scale;
        } else {
            uo += sign * t;
            vo += sign * vk * scale;
        }
        scale /= zeta;
    }
    let phase = zeta - std::f64::consts::FRAC_PI_4;
    let (s, c) = phase.sin_cos();
    let root_pi = std::f64::consts::PI.sqrt();
    let z4 = z.powf(0.25);
    let ai = (c * ue + s * uo) / (root_pi * z4);
    let aip = (z4 / root_pi) * (s * ve - c * vo);
    (ai, aip)
}

/// Exponentially decaying expansion on the positive axis:
/// sums alternate per index, Ai ~ e^{-zeta} (u0 - u1/zeta + ...) / (2 sqrt(pi) x^{1/4}).
fn asymptotic_positive(x: f64) -> (f64, f64) {
    let zeta = 2.0 / 3.0 * x.powf(1.5);
    let mut u = 1.0f64;
    let mut scale = 1.0f64; // (-zeta)^{-k}
    let mut prev = f64::INFINITY;
    let (mut su, mut sv) = (0.0, 0.0);
    for k in 0..24u32 {
        let (uk, vk) = poincare_step(&mut u, k);
        let t = uk * scale;
        if t.abs() > prev {
            break;
        }
        prev = t.abs();
        su += t;
        sv += vk * scale;
        scale /= -zeta;
    }
    let root_pi = std::f64::consts::PI.sqrt();
    let x4 = x.powf(0.25);
    let damp = (-zeta).exp();
    (
        damp * su / (2.0 * root_pi * x4),
        -damp * x4 * sv / (2.0 * root_pi),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn origin_values() {
        assert_eq!(airy_ai(0.0), AI_0);
        assert_eq!(airy_ai_prime(0.0), AI_PRIME_0);
    }

    #[test]
    fn series_asymptotic_crossover_is_smooth() {
        let cases = [
            (SERIES_LIMIT - 1e-9, SERIES_LIMIT + 1e-9),
            (-SERIES_LIMIT + 1e-9, -SERIES_LIMIT - 1e-9),
        ];
        for (a, b) in cases {
            let fa = airy_ai(a);
            let fb = airy_ai(b);
            assert!((fa - fb).abs() < 1e-8, "Ai jump at {a}: {fa} vs {fb}");
            let da = airy_ai_prime(a);
            let db = airy_ai_prime(b);
            assert!((da - db).abs() < 1e-7, "Ai' jump at {a}: {da} vs {db}");
        }
    }

    #[test]
    fn zeros_have_tiny_residuals_and_interlace() {
        let mut prev = 0.0;
        for n in 0..40 {
            let z = airy_zero(n);
            assert!(z < prev, "zeros must decrease");
            assert!(airy_ai(z).abs() <= 1e-10, "n={n} residual={}", airy_ai(z));
            prev = z;
        }
    }
}
