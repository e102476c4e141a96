//! Tolerances used by the observable routines and their tests.

/// Relative agreement required between closed-form moments and direct
/// numerical quadrature of the radial densities.
pub const MOMENT_QUADRATURE_REL: f64 = 1e-8;

/// Absolute agreement for overlap values checked against direct quadrature
/// and for the orthonormality limits of the dilated-overlap kernels.
pub const OVERLAP_ABS: f64 = 1e-9;

/// Residual threshold below which a moment family satisfies the extended
/// virial recurrence.
pub const VIRIAL_RESIDUAL_REL: f64 = 1e-9;
