//! Link between the closed-form estimate and a genuine variational bound:
//! evaluating the full Hamiltonian in the eigenstate of the tangent problem
//! replaces V(r0) by the expectation of V, so the difference
//! V(r0) - <trial|V|trial> is exactly the energy lost (or gained) when the
//! estimate is upgraded to a true expectation value.

use crate::potential::PotentialSpec;
use crate::solution::AfmSolution;
use crate::CoreError;
use afm_states::{radial_expectation, Family, TrialState};

/// Difference between the pointwise potential value entering the closed-form
/// energy and the expectation of the same potential in the given trial
/// state: gap = V(r0) - <V>.
///
/// A positive gap means the expectation-value energy sits below the
/// closed-form estimate; zero gap (auxiliary form equal to the potential)
/// means the estimate is already the exact eigenvalue. Linear-well trial
/// states are not accepted: they are never eigenstates of a tangent problem
/// with a power-law auxiliary form.
pub fn variational_gap(
    v: &PotentialSpec,
    trial: &TrialState,
    solution: &AfmSolution,
) -> Result<f64, CoreError> {
    if matches!(trial.family(), Family::AiryWell { .. }) {
        return Err(CoreError::UnsupportedTrialFamily);
    }
    if !v.contains(solution.r0) {
        return Err(CoreError::OutsideDomain { r: solution.r0 });
    }
    let expectation = radial_expectation(trial, |r| v.value(r));
    Ok(v.value(solution.r0) - expectation)
}
