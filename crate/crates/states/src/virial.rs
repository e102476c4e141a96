//! Extended virial recurrence between radial moments of power-law
//! eigenstates.
//!
//! For an exact eigenstate with energy E and orbital number l of
//! H = p^2/(2m) + sgn(lambda) a r^lambda, the moments satisfy, for any s
//! for which they converge,
//!
//!   2 (s+1) E <r^s>
//!     - sgn(lambda) a (2s + lambda + 2) <r^{lambda+s}>
//!     + (s/(4m)) (s^2 - 1 - 4 l (l+1)) <r^{s-2}>  =  0.
//!
//! The relation is used in both directions: as a residual check on closed
//! forms and as a generator of the next moment from lower ones.

/// Eigenstate context for the recurrence: H = p^2/(2m) + sgn(lambda) a r^lambda.
#[derive(Debug, Clone, Copy)]
pub struct PowerLawEigenstate {
    pub lambda: f64,
    pub coupling: f64,
    pub mass: f64,
    pub energy: f64,
    pub l: u32,
}

/// Residual of the recurrence at order s; zero for exact moments.
pub fn virial_residual(
    state: &PowerLawEigenstate,
    s: f64,
    moment_s: f64,
    moment_lambda_plus_s: f64,
    moment_s_minus_2: f64,
) -> f64 {
    let ll = (state.l * (state.l + 1)) as f64;
    2.0 * (s + 1.0) * state.energy * moment_s
        - state.coupling * state.lambda.signum() * (2.0 * s + state.lambda + 2.0)
            * moment_lambda_plus_s
        + s / (4.0 * state.mass) * (s * s - 1.0 - 4.0 * ll) * moment_s_minus_2
}

/// Solves the recurrence at order s for <r^{lambda+s}>.
pub fn virial_next_moment(
    state: &PowerLawEigenstate,
    s: f64,
    moment_s: f64,
    moment_s_minus_2: f64,
) -> f64 {
    let ll = (state.l * (state.l + 1)) as f64;
    (2.0 * (s + 1.0) * state.energy * moment_s
        + s / (4.0 * state.mass) * (s * s - 1.0 - 4.0 * ll) * moment_s_minus_2)
        / (state.coupling * state.lambda.signum() * (2.0 * s + state.lambda + 2.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tol::VIRIAL_RESIDUAL_REL;
    use crate::{moment_r, TrialState};

    #[test]
    fn standard_virial_for_oscillator() {
        // s = 0 is the plain virial theorem 2E = 4 <V> for V = nu r^2.
        let (mass, nu): (f64, f64) = (1.3, 0.7);
        let scale = (2.0 * mass * nu).powf(0.25);
        for (n, l) in [(0u32, 0u32), (2, 1)] {
            let q = 2.0 * n as f64 + l as f64 + 1.5;
            let state = PowerLawEigenstate {
                lambda: 2.0,
                coupling: nu,
                mass,
                energy: (2.0 * nu / mass).sqrt() * q,
                l,
            };
            let trial = TrialState::oscillator(scale, n, l).unwrap();
            let r2 = moment_r(&trial, 2).unwrap();
            let res = virial_residual(&state, 0.0, 1.0, r2, 0.0);
            assert!(
                res.abs() <= VIRIAL_RESIDUAL_REL * state.energy.abs(),
                "n={n} l={l}: {res}"
            );
        }
    }

    #[test]
    fn coulomb_moments_satisfy_recurrence() {
        // H = p^2/(2m) - alpha/r: eta = m alpha, E = -m alpha^2/(2 N^2).
        let (mass, alpha) = (0.9, 1.4);
        for (n, l) in [(0u32, 0u32), (1, 0), (2, 2)] {
            let nn = (n + l + 1) as f64;
            let state = PowerLawEigenstate {
                lambda: -1.0,
                coupling: alpha,
                mass,
                energy: -mass * alpha * alpha / (2.0 * nn * nn),
                l,
            };
            let trial = TrialState::hydrogenic(mass * alpha, n, l).unwrap();
            for s in [0i32, 1, 2, 3] {
                let m_s = moment_r(&trial, s).unwrap();
                let m_prev = moment_r(&trial, s - 1).unwrap();
                let m_sm2 = if s == 0 {
                    0.0 // multiplied by s = 0
                } else {
                    moment_r(&trial, s - 2).unwrap()
                };
                let res = virial_residual(&state, s as f64, m_s, m_prev, m_sm2);
                let size = (2.0 * (s as f64 + 1.0) * state.energy * m_s).abs();
                assert!(res.abs() <= VIRIAL_RESIDUAL_REL * size, "n={n} l={l} s={s}: {res}");
            }
        }
    }

    #[test]
    fn generator_recovers_linear_well_second_moment() {
        // H = p^2/(2m) + a r at l = 0: s = 1 links <r>, <r^2> and <1/r>;
        // the <1/r> coefficient vanishes there, so <r^2> = 4 E <r> / (5a).
        let (mass, slope) = (0.5, 1.0);
        let kappa = crate::airy_well::kappa(mass, slope);
        for n in 0..3u32 {
            let state = PowerLawEigenstate {
                lambda: 1.0,
                coupling: slope,
                mass,
                energy: crate::airy_well::energy(mass, slope, n),
                l: 0,
            };
            let r1 = crate::airy_well::radial_moment(kappa, n, 1).unwrap();
            let r2 = crate::airy_well::radial_moment(kappa, n, 2).unwrap();
            let got = virial_next_moment(&state, 1.0, r1, 0.0);
            assert!((got - r2).abs() <= VIRIAL_RESIDUAL_REL * r2, "n={n}: {got} vs {r2}");
        }
    }
}
