//! Kinetic-energy variants handled by the generic extremization.

/// T(p) for the supported kinematics. With hbar = 1 throughout:
/// nonrelativistic p^2/(2m), semirelativistic sigma sqrt(p^2 + m^2), and the
/// two-mass form sqrt(p^2 + m1^2) + sqrt(p^2 + m2^2).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum KineticSpec {
    NonRelativistic { mass: f64 },
    Semirelativistic { sigma: f64, mass: f64 },
    TwoMass { m1: f64, m2: f64 },
}

impl KineticSpec {
    /// T(p).
    pub fn energy(&self, p: f64) -> f64 {
        match *self {
            KineticSpec::NonRelativistic { mass } => p * p / (2.0 * mass),
            KineticSpec::Semirelativistic { sigma, mass } => {
                sigma * (p * p + mass * mass).sqrt()
            }
            KineticSpec::TwoMass { m1, m2 } => {
                (p * p + m1 * m1).sqrt() + (p * p + m2 * m2).sqrt()
            }
        }
    }

    /// p T'(p), the kinetic side of the virial identity.
    pub fn p_times_deriv(&self, p: f64) -> f64 {
        match *self {
            KineticSpec::NonRelativistic { mass } => p * p / mass,
            KineticSpec::Semirelativistic { sigma, mass } => {
                sigma * p * p / (p * p + mass * mass).sqrt()
            }
            KineticSpec::TwoMass { m1, m2 } => {
                p * p / (p * p + m1 * m1).sqrt() + p * p / (p * p + m2 * m2).sqrt()
            }
        }
    }

    /// True when the spectrum is a total mass with no rest-mass floor, in
    /// which case a non-positive extremum signals collapse rather than a
    /// bound state.
    pub fn fully_massless(&self) -> bool {
        match *self {
            KineticSpec::NonRelativistic { .. } => false,
            KineticSpec::Semirelativistic { mass, .. } => mass == 0.0,
            KineticSpec::TwoMass { m1, m2 } => m1 == 0.0 && m2 == 0.0,
        }
    }

    /// Parameters are admissible: positive mass for the nonrelativistic
    /// form, positive sigma and non-negative masses otherwise.
    pub fn is_valid(&self) -> bool {
        match *self {
            KineticSpec::NonRelativistic { mass } => mass > 0.0,
            KineticSpec::Semirelativistic { sigma, mass } => sigma > 0.0 && mass >= 0.0,
            KineticSpec::TwoMass { m1, m2 } => m1 >= 0.0 && m2 >= 0.0,
        }
    }
}
