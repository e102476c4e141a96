//! Ground-state quantum number for N identical fermions filling
//! oscillator-like shells.

use crate::QnError;

/// Result of filling N-1 internal excitations up to the Fermi band.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FermiLevel {
    /// Ground-state quantum number Q = (3/4)(N-1)(B_f + 2).
    pub q: f64,
    /// Fermi band number B_f, the real root of
    /// (B+1)(B+2)(B+3) = 6(N-1)/d.
    pub band: f64,
    /// Whether N-1 exactly saturates an integer band.
    pub closed_shell: bool,
}

/// Ground-state Q when every internal degree of freedom sits in the lowest
/// band, i.e. the bosonic-like estimate (3/2)(N-1).
pub fn symmetric_ground_q(n_particles: u32) -> Result<f64, QnError> {
    if n_particles < 2 {
        return Err(QnError::TooFewParticles(n_particles));
    }
    Ok(1.5 * f64::from(n_particles - 1))
}

/// Ground-state Q for N identical fermions whose internal states carry a
/// degeneracy d per oscillator level: the bands fill up to the Fermi band
/// B_f, and Q = (3/4)(N-1)(B_f + 2).
///
/// With t = B_f + 2 the filling condition is the depressed cubic
/// t^3 - t = 6(N-1)/d, solved by a guarded Newton iteration (the cubic is
/// monotone on the relevant branch t >= 1). Non-integer B_f means N-1 does
/// not close a shell; the value is still returned, flagged.
pub fn fermi_ground_q(n_particles: u32, shell_degeneracy: u32) -> Result<FermiLevel, QnError> {
    if n_particles < 2 {
        return Err(QnError::TooFewParticles(n_particles));
    }
    if shell_degeneracy == 0 {
        return Err(QnError::ZeroDegeneracy);
    }
    let s = 6.0 * f64::from(n_particles - 1) / f64::from(shell_degeneracy);
    let mut t = (s.cbrt() + 1.0).max(1.5);
    for _ in 0..64 {
        let f = t * t * t - t - s;
        let step = f / (3.0 * t * t - 1.0);
        t -= step;
        if step.abs() < 1e-15 * t {
            break;
        }
    }
    let band = t - 2.0;
    let closed = band > -1e-9 && (band - band.round()).abs() < 1e-9;
    Ok(FermiLevel {
        q: 0.75 * f64::from(n_particles - 1) * (band + 2.0),
        band,
        closed_shell: closed,
    })
}
