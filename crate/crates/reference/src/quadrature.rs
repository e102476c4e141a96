//! Gauss-Laguerre nodes and weights via the Golub-Welsch eigenvalue method.

use afm_special::gamma::ln_gamma;
use nalgebra::{DMatrix, SymmetricEigen};

/// Nodes of the generalized Laguerre polynomial `L_n^alpha`, ascending.
///
/// The nodes are the eigenvalues of the symmetric Jacobi matrix of the
/// Laguerre recurrence (diagonal `2i + alpha + 1`, off-diagonal
/// `sqrt(i (i + alpha))`).
pub fn laguerre_nodes(n: usize, alpha: f64) -> Vec<f64> {
    jacobi_eigen(n, alpha)
}

/// Generalized Gauss-Laguerre rule for `int_0^inf x^alpha e^{-x} f(x) dx`.
///
/// Returns `(nodes, weights)` with nodes ascending; the weights sum to
/// `Gamma(alpha + 1)`.
pub fn gauss_laguerre(n: usize, alpha: f64) -> (Vec<f64>, Vec<f64>) {
    let (nodes, scaled) = gauss_laguerre_scaled(n, alpha);
    let weights = nodes
        .iter()
        .zip(&scaled)
        .map(|(x, w)| w * (-x).exp())
        .collect();
    (nodes, weights)
}

/// Gauss-Laguerre rule with the exponential factor stripped from the
/// weights: returns `(x_k, w_k e^{x_k})`.
///
/// The plain weights decay like `e^{-x_k}` and underflow past the noise
/// floor at large nodes, which poisons any integrand that grows to
/// compensate. When the integrand's decay is carried by the evaluated
/// functions themselves (for example products of `L_n^alpha(x) e^{-x/2}`),
/// pairing them with these scaled weights keeps every intermediate of
/// order one. Computed from the closed-form weight identity
/// `w_k e^{x_k} = C x_k / [(n+1) L_{n+1}^alpha(x_k) e^{-x_k/2}]^2` with
/// `C = Gamma(n + alpha + 1) / n!`, so no bare exponential ever appears.
pub fn gauss_laguerre_scaled(n: usize, alpha: f64) -> (Vec<f64>, Vec<f64>) {
    let nodes = jacobi_eigen(n, alpha);
    let ln_c = ln_gamma(n as f64 + alpha + 1.0) - ln_gamma(n as f64 + 1.0);
    let c = ln_c.exp() / ((n as f64 + 1.0) * (n as f64 + 1.0));
    let weights = nodes
        .iter()
        .map(|&x| {
            let m = scaled_laguerre(n + 1, alpha, x);
            c * x / (m * m)
        })
        .collect();
    (nodes, weights)
}

/// `L_j^alpha(x) e^{-x/2}` by the three-term recurrence seeded at
/// `e^{-x/2}`; every intermediate stays representable for the node ranges
/// used here (the seed underflows only past x of about 1400).
fn scaled_laguerre(j: usize, alpha: f64, x: f64) -> f64 {
    let mut prev = (-0.5 * x).exp();
    debug_assert!(prev > 0.0, "scaled Laguerre seed underflowed at x = {x}");
    if j == 0 {
        return prev;
    }
    let mut cur = (1.0 + alpha - x) * prev;
    for i in 1..j {
        let fi = i as f64;
        let next = ((2.0 * fi + 1.0 + alpha - x) * cur - (fi + alpha) * prev) / (fi + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

fn jacobi_eigen(n: usize, alpha: f64) -> Vec<f64> {
    assert!(n >= 1, "quadrature order must be positive");
    let mut jacobi = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        jacobi[(i, i)] = 2.0 * i as f64 + alpha + 1.0;
        if i > 0 {
            let b = (i as f64 * (i as f64 + alpha)).sqrt();
            jacobi[(i, i - 1)] = b;
            jacobi[(i - 1, i)] = b;
        }
    }
    let eig = SymmetricEigen::new(jacobi);
    let mut nodes: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    nodes.sort_by(f64::total_cmp);
    nodes
}
