//! Closed-form bound-state estimates from an auxiliary-field reduction.
//!
//! The central idea: replace a potential V(r) by a power-law form
//! P(r) = sgn(lambda) r^lambda whose spectrum is known, with the coupling
//! promoted to an operator and then frozen at its stationary value. The
//! result is a tangent approximation to V whose eigenvalues are obtained
//! from a single transcendental equation shared by nonrelativistic,
//! semirelativistic and unequal-mass kinematics:
//!
//! ```text
//! E = T(p0) + V(r0),   p0 r0 = Q,   p0 T'(p0) = r0 V'(r0).
//! ```
//!
//! Whether the estimate is an upper or a lower bound is decided by the
//! concavity of V as a function of P, which [`classify_bound`] samples.
//! When V is itself the power-law form the estimate is the exact spectrum.

mod kinetic;
mod potential;
mod solution;
mod solver;
mod tangent;
pub mod tol;
mod variational;

pub use kinetic::KineticSpec;
pub use potential::{PotentialSpec, RadialFn};
pub use solution::{AfmSolution, BoundKind};
pub use solver::{afm_sum_extension, k_function, solve_afm};
pub use tangent::{classify_bound, tangent_potential};
pub use variational::variational_gap;

use thiserror::Error;

/// Failure modes of the auxiliary-field reduction.
#[derive(Debug, Error, PartialEq)]
pub enum CoreError {
    /// A radius fell outside the declared domain of the potential.
    #[error("radius {r} is outside the potential domain")]
    OutsideDomain { r: f64 },
    /// The auxiliary form r^lambda degenerates at lambda = 0.
    #[error("auxiliary exponent must be nonzero")]
    ZeroExponent,
    /// The level number Q must be positive.
    #[error("level number must be positive, got {0}")]
    InvalidLevelNumber(f64),
    /// Masses and string tensions must be non-negative and finite.
    #[error("kinematics has a negative or non-finite parameter")]
    InvalidKinematics,
    /// The extremization has no stationary point: the channel does not bind.
    #[error("no bound state for these parameters")]
    NoBoundState,
    /// Bisection stalled before reaching the required residual.
    #[error("extremization failed to converge")]
    NoConvergence,
    /// The supplied derivative disagrees with a finite difference of the
    /// value closure.
    #[error("derivative of `{label}` is inconsistent with its value near r = {r}")]
    InconsistentDerivative { label: String, r: f64 },
    /// Variational gaps are defined for oscillator and hydrogenic trial
    /// states only.
    #[error("trial family is not supported for variational gaps")]
    UnsupportedTrialFamily,
}
