//! Small combinatorial helpers shared by the state families.

pub(crate) use afm_special::gamma::ln_factorial;

/// Generalized Laguerre polynomial L_n^alpha(x) by the three-term recurrence.
pub(crate) fn laguerre(n: u32, alpha: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 1.0 + alpha - x;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + alpha - x) * cur - (kf + alpha) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// ln C(n, k) for 0 <= k <= n.
pub(crate) fn ln_binomial(n: u32, k: u32) -> f64 {
    ln_factorial(n) - ln_factorial(k) - ln_factorial(n - k)
}

/// Parity sign (-1)^k.
pub(crate) fn parity(k: u32) -> f64 {
    if k % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}
