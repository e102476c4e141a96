//! Scalar special functions consumed by the closed-form bound-state formulas.
//!
//! Principal real roots of the reduced cubic and quartic families, both real
//! branches of the Lambert W function, Airy-function zeros, Bessel J0 zeros,
//! the tangency radius of the screened Coulomb potential, and Gauss-Legendre
//! quadrature rules for numeric cross-checks.

pub mod airy;
pub mod bessel;
pub mod gamma;
pub mod lambert;
pub mod quad;
pub mod roots;
pub mod tol;
pub mod yukawa;

pub use airy::{airy_ai, airy_ai_prime, airy_zero};
pub use bessel::{bessel_j, bessel_j0, bessel_j0_zero, bessel_j1};
pub use gamma::ln_gamma;
pub use lambert::{lambert_w, Branch};
pub use quad::gauss_legendre;
pub use roots::{reduced_cubic_root, reduced_quartic_root, Sign};
pub use yukawa::{yukawa_radius, YUKAWA_RADIUS_MAX, YUKAWA_SCALE_MAX};

/// Argument lies outside the mathematical domain of the requested function.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DomainError {
    /// Lambert W is real only for arguments at or above the branch point -1/e.
    #[error("lambert_w: argument {0} is below the branch point -1/e")]
    BelowBranchPoint(f64),
    /// The secondary real branch of Lambert W lives on [-1/e, 0).
    #[error("lambert_w: secondary branch requires a negative argument, got {0}")]
    SecondaryBranchNonNegative(f64),
    /// The screened-Coulomb tangency equation has a solution only for
    /// scales in (0, YUKAWA_SCALE_MAX].
    #[error("yukawa_radius: scale {0} outside (0, {max}]", max = YUKAWA_SCALE_MAX)]
    YukawaScaleOutOfRange(f64),
}
