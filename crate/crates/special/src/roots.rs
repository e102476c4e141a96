//! Principal real roots of the two reduced polynomial families
//!
//!   x^3 + 3sx - 2Y = 0        (cubic,  s = ±1)
//!   4x^4 + 8sx - 3Y = 0       (quartic, s = ±1)
//!
//! for Y >= 0. These parametrize every closed-form eigenenergy of the
//! square-root, funnel and quadratic-plus-Coulomb interactions, so they are
//! evaluated in closed form (Cardano / Ferrari) with care to avoid
//! cancellation at both ends of the Y range.

/// Selects which sign the linear term carries in the reduced equations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// Positive root of `x^3 + 3x - 2Y = 0` (`Sign::Plus`) or largest root of
/// `x^3 - 3x - 2Y = 0` (`Sign::Minus`), for `y >= 0`.
///
/// Limits: plus branch grows as `2y/3` near zero; minus branch starts at
/// `sqrt(3)`; both go as `(2y)^(1/3)` for large `y`.
pub fn reduced_cubic_root(y: f64, sign: Sign) -> f64 {
    assert!(y >= 0.0, "reduced_cubic_root: y must be nonnegative, got {y}");
    match sign {
        Sign::Plus => {
            // Single real root: u^(1/3) - u^(-1/3) with u = Y + sqrt(Y^2 + 1).
            let u = y + y.hypot(1.0);
            let c = u.cbrt();
            c - 1.0 / c
        }
        Sign::Minus => {
            if y >= 1.0 {
                let u = y + (y * y - 1.0).sqrt();
                let c = u.cbrt();
                c + 1.0 / c
            } else {
                // Three real roots; the largest one is the physical branch
                // and continues the radical expression through Y = 1.
                2.0 * ((y.acos()) / 3.0).cos()
            }
        }
    }
}

/// Positive root of `4x^4 + 8x - 3Y = 0` (`Sign::Plus`) or of
/// `4x^4 - 8x - 3Y = 0` (`Sign::Minus`), for `y >= 0`.
///
/// Limits: plus branch grows as `3y/8` near zero; minus branch starts at
/// `2^(1/3)`; both go as `(3y/4)^(1/4)` for large `y`.
pub fn reduced_quartic_root(y: f64, sign: Sign) -> f64 {
    assert!(y >= 0.0, "reduced_quartic_root: y must be nonnegative, got {y}");
    let v = quartic_resolvent(y);
    let sv = v.sqrt();
    let w = (4.0 / sv - v).sqrt();
    match sign {
        Sign::Plus => 0.5 * (w - sv),
        Sign::Minus => 0.5 * (w + sv),
    }
}

/// Resolvent `V(Y)` of the reduced quartic: the positive root of
/// `v^3 + 3Y v - 4 = 0`, written so that large `Y` does not cancel.
///
/// The radical form `(2 + sqrt(4 + Y^3))^(1/3) - Y (2 + sqrt(4 + Y^3))^(-1/3)`
/// loses half the mantissa once `Y` is large; multiplying through by the
/// conjugate gives the equivalent `4u^2 / (u^4 + u^2 Y + Y^2)` with
/// `u = (2 + sqrt(4 + Y^3))^(1/3)`, which is a ratio of positive terms.
pub(crate) fn quartic_resolvent(y: f64) -> f64 {
    let u = (2.0 + (4.0 + y * y * y).sqrt()).cbrt();
    let u2 = u * u;
    4.0 * u2 / (u2 * u2 + u2 * y + y * y)
}
