//! Exact s-wave states of the linear radial well and their observables.
//!
//! For H = p^2/(2m) + a r the l = 0 eigenfunctions are shifted Airy
//! functions, psi_n(r) = sqrt(kappa) Ai(kappa r + alpha_n)/(sqrt(4 pi)
//! |Ai'(alpha_n)| r) with kappa = (2 m a)^{1/3} and alpha_n the n-th zero of
//! Ai, so E_n = -(a^2/(2m))^{1/3} alpha_n.

use afm_special::{airy_ai, airy_ai_prime, airy_zero};

/// n-th zero of the Airy function (negative real number), 0-based.
pub fn well_zero(n: u32) -> f64 {
    airy_zero(n)
}

/// Energy of the n-th s-wave level for H = p^2/(2m) + a r.
pub fn energy(mass: f64, slope: f64, n: u32) -> f64 {
    -(slope * slope / (2.0 * mass)).cbrt() * airy_zero(n)
}

/// Inverse length kappa = (2 m a)^{1/3}.
pub fn kappa(mass: f64, slope: f64) -> f64 {
    (2.0 * mass * slope).cbrt()
}

/// Normalized radial wavefunction R_n(r) = u_n(r)/r with
/// u_n(r) = sqrt(kappa) Ai(kappa r + alpha_n)/|Ai'(alpha_n)|.
pub fn radial(kappa: f64, n: u32, r: f64) -> f64 {
    let alpha = airy_zero(n);
    if kappa * r < 1e-8 {
        // Ai(kappa r + alpha) = kappa r Ai'(alpha) + O(r^3) since Ai'' vanishes
        // at a zero, so R tends to kappa^{3/2} sgn(Ai'(alpha)).
        return kappa.powf(1.5) * airy_ai_prime(alpha).signum();
    }
    kappa.sqrt() / airy_ai_prime(alpha).abs() * airy_ai(kappa * r + alpha) / r
}

/// Closed-form <r^k> for k = 0..4.
pub fn radial_moment(kappa: f64, n: u32, k: i32) -> Option<f64> {
    let b = -airy_zero(n);
    let value = match k {
        0 => 1.0,
        1 => 2.0 * b / (3.0 * kappa),
        2 => 8.0 * b * b / (15.0 * kappa * kappa),
        3 => (16.0 * b.powi(3) + 15.0) / (35.0 * kappa.powi(3)),
        4 => 16.0 * (8.0 * b.powi(4) + 25.0 * b) / (315.0 * kappa.powi(4)),
        _ => return None,
    };
    Some(value)
}

/// Closed-form <p^k> for k = 2, 4.
pub fn momentum_moment(kappa: f64, n: u32, k: i32) -> Option<f64> {
    let b = -airy_zero(n);
    match k {
        2 => Some(kappa * kappa * b / 3.0),
        4 => Some(kappa.powi(4) * b * b / 5.0),
        _ => None,
    }
}

/// Probability density at the origin, |psi_n(0)|^2 = kappa^3/(4 pi),
/// independent of n.
pub fn density_at_origin(kappa: f64) -> f64 {
    kappa.powi(3) / (4.0 * std::f64::consts::PI)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ground_energy_of_unit_well() {
        // H = p^2 + r (m = 1/2, a = 1): E_0 = -alpha_0.
        let e = energy(0.5, 1.0, 0);
        assert!((e - 2.338_107_410_459_767).abs() < 1e-9);
    }

    #[test]
    fn radial_limit_at_origin_is_finite() {
        let k = 1.3;
        let near = radial(k, 2, 1e-12);
        let check = k.powf(1.5) * airy_ai_prime(airy_zero(2)).signum();
        assert!((near - check).abs() < 1e-6 * check.abs());
    }

    #[test]
    fn density_independent_of_level() {
        let k = 0.9;
        assert!((density_at_origin(k) - k.powi(3) / (4.0 * std::f64::consts::PI)).abs() < 1e-15);
    }

    #[test]
    fn moment_bounds() {
        assert!(radial_moment(1.0, 0, 5).is_none());
        assert!(momentum_moment(1.0, 0, 3).is_none());
    }
}
