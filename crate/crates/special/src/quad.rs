//! Gauss-Legendre quadrature nodes and weights.
//!
//! Used by downstream crates to cross-check closed-form expectation values
//! against direct radial integrals. Nodes are the roots of the Legendre
//! polynomial P_n, found by Newton iteration from the Chebyshev-like seed
//! cos(pi (i - 1/4)/(n + 1/2)); weights follow from w = 2/((1-x^2) P_n'^2).

use crate::tol;

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
///
/// Exact for polynomials of degree <= 2n-1. Nodes are returned in
/// increasing order.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1, "gauss_legendre: rule order must be at least 1");
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    // Roots come in +/- pairs; solve the upper half and mirror.
    let half = n.div_ceil(2);
    for i in 0..half {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..tol::MAX_ITER {
            let (p, d) = legendre_with_deriv(n, x);
            let step = p / d;
            x -= step;
            if step.abs() <= tol::STEP_CONVERGED * x.abs().max(1.0) {
                break;
            }
        }
        let (_, dp) = legendre_with_deriv(n, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[n - 1 - i] = x;
        weights[n - 1 - i] = w;
        nodes[i] = -x;
        weights[i] = w;
    }
    if n % 2 == 1 {
        // The central node is exactly zero; the mirror loop already set it.
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

/// Integral of `f` over [a, b] by a single n-point Gauss-Legendre panel.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, n: usize) -> f64 {
    let (nodes, weights) = gauss_legendre(n);
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut sum = 0.0;
    for (x, w) in nodes.iter().zip(weights.iter()) {
        sum += w * f(mid + half * x);
    }
    sum * half
}

/// P_n(x) and P_n'(x) by the three-term recurrence.
fn legendre_with_deriv(n: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0;
    let mut p = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 1..n {
        let kf = k as f64;
        let p_next = ((2.0 * kf + 1.0) * x * p - kf * p_prev) / (kf + 1.0);
        p_prev = p;
        p = p_next;
    }
    // P_n'(x) = n (x P_n - P_{n-1}) / (x^2 - 1)
    let d = (n as f64) * (x * p - p_prev) / (x * x - 1.0);
    (p, d)
}
