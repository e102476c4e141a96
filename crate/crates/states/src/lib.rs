//! Trial states and analytic observables.
//!
//! Three exactly solvable radial families — the harmonic oscillator, the
//! hydrogen-like atom and the linear (Airy) well — with closed-form moments
//! `<r^k>` and `<p^k>`, probability densities at the origin, overlaps between
//! dilated states, an extended virial recurrence tying moments of power-law
//! eigenstates together, and a direct quadrature fallback for arbitrary
//! radial observables.

mod poly;
mod quadrature;

pub mod airy_well;
pub mod hydrogenic;
pub mod oscillator;
pub mod overlap;
pub mod tol;
pub mod virial;

pub use overlap::{overlap_dilated, DilatedFamily};
pub use quadrature::{numeric_overlap, radial_expectation};
pub use virial::{virial_next_moment, virial_residual, PowerLawEigenstate};

use thiserror::Error;

/// Errors for state construction and observable evaluation.
#[derive(Debug, Error, PartialEq)]
pub enum StateError {
    /// Inverse length scales must be positive.
    #[error("state scale must be positive, got {0}")]
    NonPositiveScale(f64),
    /// The Airy well only has s-wave closed forms.
    #[error("the linear-well family is s-wave only, got l = {0}")]
    AiryNeedsSWave(u32),
    /// `<r^k>` diverges (or has no closed form) for this state.
    #[error("radial moment of order {k} is unavailable for this state")]
    UnsupportedRadialPower { k: i32 },
    /// `<p^k>` has no closed form for this state.
    #[error("momentum moment of order {k} is unavailable for this state")]
    UnsupportedMomentumPower { k: i32 },
    /// The density at the origin vanishes unless l = 0.
    #[error("density at the origin requires an s-wave state, got l = {0}")]
    DensityNeedsSWave(u32),
}

/// Which solvable radial family a state belongs to, with its inverse
/// length scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    /// Harmonic-oscillator states; `scale` is lambda in
    /// R ~ e^{-lambda^2 r^2/2}.
    Oscillator { scale: f64 },
    /// Hydrogen-like states; `scale` is eta, the exponent being
    /// eta/(n + l + 1).
    Hydrogenic { scale: f64 },
    /// s-wave eigenstates of a linear well; `scale` is kappa = (2 m a)^{1/3}.
    AiryWell { scale: f64 },
}

impl Family {
    /// Inverse length scale of the family.
    pub fn scale(&self) -> f64 {
        match self {
            Family::Oscillator { scale }
            | Family::Hydrogenic { scale }
            | Family::AiryWell { scale } => *scale,
        }
    }
}

/// A normalized radial state |n, l> of one of the solvable families.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrialState {
    family: Family,
    n: u32,
    l: u32,
}

impl TrialState {
    /// Oscillator state with inverse length `scale`.
    pub fn oscillator(scale: f64, n: u32, l: u32) -> Result<Self, StateError> {
        if !(scale > 0.0) {
            return Err(StateError::NonPositiveScale(scale));
        }
        Ok(Self { family: Family::Oscillator { scale }, n, l })
    }

    /// Hydrogen-like state with inverse length `scale`.
    pub fn hydrogenic(scale: f64, n: u32, l: u32) -> Result<Self, StateError> {
        if !(scale > 0.0) {
            return Err(StateError::NonPositiveScale(scale));
        }
        Ok(Self { family: Family::Hydrogenic { scale }, n, l })
    }

    /// s-wave linear-well state with inverse length `scale`.
    pub fn airy_well(scale: f64, n: u32, l: u32) -> Result<Self, StateError> {
        if !(scale > 0.0) {
            return Err(StateError::NonPositiveScale(scale));
        }
        if l != 0 {
            return Err(StateError::AiryNeedsSWave(l));
        }
        Ok(Self { family: Family::AiryWell { scale }, n, l: 0 })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    /// Characteristic length 1/scale, useful for sizing quadrature domains.
    pub fn length_scale(&self) -> f64 {
        1.0 / self.family.scale()
    }
}

/// Closed-form radial moment `<r^k>` of a trial state.
pub fn moment_r(state: &TrialState, k: i32) -> Result<f64, StateError> {
    match state.family {
        Family::Oscillator { scale } => {
            if !oscillator::moment_converges(state.l, k) {
                return Err(StateError::UnsupportedRadialPower { k });
            }
            Ok(oscillator::radial_moment(scale, state.n, state.l, k))
        }
        Family::Hydrogenic { scale } => {
            if !hydrogenic::moment_converges(state.l, k) {
                return Err(StateError::UnsupportedRadialPower { k });
            }
            Ok(hydrogenic::radial_moment(scale, state.n, state.l, k))
        }
        Family::AiryWell { scale } => airy_well::radial_moment(scale, state.n, k)
            .ok_or(StateError::UnsupportedRadialPower { k }),
    }
}

/// Closed-form momentum moment `<p^k>` of a trial state. Oscillator states
/// admit every power their radial moments do; the other families expose
/// k = 2 and k = 4.
pub fn moment_p(state: &TrialState, k: i32) -> Result<f64, StateError> {
    match state.family {
        Family::Oscillator { scale } => {
            if !oscillator::moment_converges(state.l, k) {
                return Err(StateError::UnsupportedMomentumPower { k });
            }
            Ok(oscillator::momentum_moment(scale, state.n, state.l, k))
        }
        Family::Hydrogenic { scale } => hydrogenic::momentum_moment(scale, state.n, state.l, k)
            .ok_or(StateError::UnsupportedMomentumPower { k }),
        Family::AiryWell { scale } => airy_well::momentum_moment(scale, state.n, k)
            .ok_or(StateError::UnsupportedMomentumPower { k }),
    }
}

/// Probability density of the full wavefunction at the origin (s-wave only).
pub fn density_at_origin(state: &TrialState) -> Result<f64, StateError> {
    if state.l != 0 {
        return Err(StateError::DensityNeedsSWave(state.l));
    }
    Ok(match state.family {
        Family::Oscillator { scale } => oscillator::density_at_origin(scale, state.n),
        Family::Hydrogenic { scale } => hydrogenic::density_at_origin(scale, state.n),
        Family::AiryWell { scale } => airy_well::density_at_origin(scale),
    })
}

/// Normalized radial wavefunction R_{n,l}(r) of a trial state.
pub fn radial_wavefunction(state: &TrialState, r: f64) -> f64 {
    match state.family {
        Family::Oscillator { scale } => oscillator::radial(scale, state.n, state.l, r),
        Family::Hydrogenic { scale } => hydrogenic::radial(scale, state.n, state.l, r),
        Family::AiryWell { scale } => airy_well::radial(scale, state.n, r),
    }
}

/// Auxiliary-field eigenstate of H = p^2 + r in the given trial family.
///
/// Optimizing the auxiliary field selects the inverse lengths
/// eta = (n + l + 1)^{4/3} / 2^{1/3} (hydrogen-like branch) and
/// lambda = 2^{-1/3} (2n + l + 3/2)^{-1/6} (oscillator branch).
pub fn afm_state_for_linear(family: DilatedFamily, n: u32, l: u32) -> TrialState {
    match family {
        DilatedFamily::Hydrogenic => {
            let nn = (n + l + 1) as f64;
            let eta = nn.powf(4.0 / 3.0) / 2f64.cbrt();
            TrialState::hydrogenic(eta, n, l).expect("positive scale")
        }
        DilatedFamily::Oscillator => {
            let band = 2.0 * n as f64 + l as f64 + 1.5;
            let lambda = band.powf(-1.0 / 6.0) / 2f64.cbrt();
            TrialState::oscillator(lambda, n, l).expect("positive scale")
        }
    }
}

/// Auxiliary-field energy for H = p^2 + r: 3 Q^{2/3}/2^{2/3} with Q the
/// family's level number (n + l + 1 or 2n + l + 3/2).
pub fn afm_linear_energy(family: DilatedFamily, n: u32, l: u32) -> f64 {
    let q = match family {
        DilatedFamily::Hydrogenic => (n + l + 1) as f64,
        DilatedFamily::Oscillator => 2.0 * n as f64 + l as f64 + 1.5,
    };
    3.0 * q.powf(2.0 / 3.0) / 2f64.powf(2.0 / 3.0)
}

/// Transition probability |F|^2 between the n-th and n'-th auxiliary-field
/// states of H = p^2 + r within one trial family, the dilation being the
/// ratio of the optimized inverse lengths.
pub fn linear_well_transition_probability(
    family: DilatedFamily,
    n: u32,
    n_prime: u32,
    l: u32,
) -> f64 {
    let from = afm_state_for_linear(family, n, l);
    let to = afm_state_for_linear(family, n_prime, l);
    let a = to.family().scale() / from.family().scale();
    let f = overlap_dilated(family, n, n_prime, l, a).expect("positive dilation");
    f * f
}
