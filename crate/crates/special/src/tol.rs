//! Shared numeric tolerances for the special-function kernels.

/// Residual bound for polished roots of scalar equations, relative to the
/// natural scale of the equation.
pub const ROOT_RESIDUAL: f64 = 1e-12;

/// Step size below which a Newton/Halley iteration is considered converged.
pub const STEP_CONVERGED: f64 = 1e-15;

/// Hard cap on polish iterations; every solver here converges in a handful.
pub const MAX_ITER: usize = 64;
