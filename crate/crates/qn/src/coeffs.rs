//! Coefficient functions of the fitted quantum-number rules.
//!
//! All rationals and Gaussian parameters are hard-coded exactly as fitted;
//! nothing here is refitted. Outside the fitted parameter windows the
//! functions extrapolate smoothly but carry no accuracy guarantee (several
//! have poles there, e.g. the denominators of [`ur_funnel_fitted`]).

use std::f64::consts::PI;

/// Linear rule Q = b n + l + g for power-law exponents, fitted hyperbolas.
pub fn linear_fitted(lambda: f64) -> (f64, f64) {
    let b = (41.0 * lambda + 86.0) / (13.0 * lambda + 58.0);
    let g = (5.0 * lambda + 17.0) / (2.0 * lambda + 14.0);
    (b, g)
}

/// Linear rule coefficients determined analytically: exact values at the
/// two solvable exponents plus the s-wave semiclassical slope and intercept
/// at the linear potential.
pub fn linear_constrained(lambda: f64) -> (f64, f64) {
    let z = 3.0f64.sqrt() * PI;
    let b = ((4.0 * z - 18.0) * lambda + (18.0 - 2.0 * z))
        / ((3.0 * z - 15.0) * lambda + (21.0 - 3.0 * z));
    let g = ((7.0 * z - 36.0) * lambda + (36.0 - 5.0 * z))
        / ((6.0 * z - 32.0) * lambda + (40.0 - 6.0 * z));
    (b, g)
}

/// Quadratic rule Q = (a n^2 + l^2 + c n l + d n + e l + f)/(n + l + 1),
/// fitted hyperbolas, returned as [a, c, d, e, f].
pub fn quadratic_fitted(lambda: f64) -> [f64; 5] {
    [
        (43.0 * lambda + 82.0) / (15.0 * lambda + 54.0),
        (171.0 * lambda + 675.0) / (29.0 * lambda + 281.0),
        (136.0 * lambda + 330.0) / (25.0 * lambda + 122.0),
        (109.0 * lambda + 517.0) / (30.0 * lambda + 234.0),
        (225.0 * lambda + 729.0) / (94.0 * lambda + 598.0),
    ]
}

/// Square-root potential rule Q = A n + l + C as a function of the
/// flattening parameter.
pub fn sqrt_fitted(beta: f64) -> (f64, f64) {
    let a = (8.0 * beta + 102.0) / (4.0 * beta + 57.0);
    let c = (30.0 * beta + 53.0) / (20.0 * beta + 39.0);
    (a, c)
}

/// Funnel rule Q = b n + l + c with Gaussian coefficient profiles pinned to
/// the semiclassical linear-potential values at beta = 0 and to the Coulomb
/// values at beta -> infinity.
pub fn funnel_fitted(beta: f64) -> (f64, f64) {
    let p1 = PI / 3.0f64.sqrt() - 1.0;
    let p2 = 0.416;
    let q1 = 3.0f64.sqrt() * PI / 4.0 - 1.0;
    let q2 = 1.245;
    let b = 1.0 + p1 * (-p2 * p2 * beta * beta).exp();
    let c = 1.0 + q1 * (-q2 * q2 * beta * beta).exp();
    (b, c)
}

/// Ultrarelativistic power-law rule Q = b n + d l + c, returned as
/// (b, c, d); the l coefficient is unity within the fit resolution.
pub fn ur_power_fitted(lambda: f64) -> (f64, f64, f64) {
    let b = (3.00 * lambda + 3.67) / (lambda + 3.40);
    let c = (2.69 * lambda + 8.69) / (lambda + 8.27);
    (b, c, 1.0)
}

/// Semirelativistic Coulomb rule Q = b n + d l + c, returned as (b, c, d);
/// all three coefficients reduce to 1 at zero coupling.
pub fn sr_coulomb_fitted(a: f64) -> (f64, f64, f64) {
    let b = (1.03 * a - 1.48) / (a - 1.48);
    let c = (1.07 * a - 1.64) / (a - 1.64);
    let d = (0.96 * a - 1.56) / (a - 1.56);
    (b, c, d)
}

/// Ultrarelativistic funnel rule Q = b n + d l + c, returned as (b, c, d).
pub fn ur_funnel_fitted(beta: f64) -> (f64, f64, f64) {
    let b = (1.88 * beta - 5.34) / (beta - 3.51);
    let c = (1.99 * beta - 4.40) / (beta - 3.49);
    let d = (0.76 * beta - 2.46) / (beta - 2.54);
    (b, c, d)
}
