//! Radial potential descriptions used by the auxiliary-field engine.

use crate::tol::{DERIV_CONSISTENCY_REL, PROBE_RADII};
use crate::CoreError;
use std::fmt;
use std::sync::Arc;

/// A real function of the radius.
pub type RadialFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A central potential V(r) with its first derivative, an optional second
/// derivative, an open domain of validity, and a display label.
#[derive(Clone)]
pub struct PotentialSpec {
    value: RadialFn,
    deriv: RadialFn,
    second_deriv: Option<RadialFn>,
    domain: (f64, f64),
    label: String,
}

impl fmt::Debug for PotentialSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PotentialSpec")
            .field("label", &self.label)
            .field("domain", &self.domain)
            .finish()
    }
}

impl PotentialSpec {
    /// Builds a potential from value and derivative closures, verifying at a
    /// few probe radii that the derivative matches a central finite
    /// difference of the value.
    pub fn new<V, D>(label: &str, domain: (f64, f64), value: V, deriv: D) -> Result<Self, CoreError>
    where
        V: Fn(f64) -> f64 + Send + Sync + 'static,
        D: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        let spec = Self {
            value: Arc::new(value),
            deriv: Arc::new(deriv),
            second_deriv: None,
            domain,
            label: label.to_owned(),
        };
        spec.check_derivative()?;
        Ok(spec)
    }

    /// Attaches an analytic second derivative.
    pub fn with_second_deriv<S>(mut self, second: S) -> Self
    where
        S: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        self.second_deriv = Some(Arc::new(second));
        self
    }

    /// Pure power law V(r) = g sgn(lambda) r^lambda on (0, inf).
    pub fn power_law(g: f64, lambda: f64) -> Self {
        let sign = lambda.signum();
        Self {
            value: Arc::new(move |r: f64| g * sign * r.powf(lambda)),
            deriv: Arc::new(move |r: f64| g * lambda.abs() * r.powf(lambda - 1.0)),
            second_deriv: Some(Arc::new(move |r: f64| {
                g * lambda.abs() * (lambda - 1.0) * r.powf(lambda - 2.0)
            })),
            domain: (0.0, f64::INFINITY),
            label: format!("power({g};{lambda})"),
        }
    }

    /// Sum of power laws, Sum_i g_i sgn(lambda_i) r^{lambda_i} on (0, inf).
    pub fn power_sum(terms: &[(f64, f64)]) -> Self {
        let terms: Vec<(f64, f64)> = terms.to_vec();
        let t1 = terms.clone();
        let t2 = terms.clone();
        let t3 = terms.clone();
        Self {
            value: Arc::new(move |r: f64| {
                t1.iter()
                    .map(|&(g, lam)| g * lam.signum() * r.powf(lam))
                    .sum()
            }),
            deriv: Arc::new(move |r: f64| {
                t2.iter()
                    .map(|&(g, lam)| g * lam.abs() * r.powf(lam - 1.0))
                    .sum()
            }),
            second_deriv: Some(Arc::new(move |r: f64| {
                t3.iter()
                    .map(|&(g, lam)| g * lam.abs() * (lam - 1.0) * r.powf(lam - 2.0))
                    .sum()
            })),
            domain: (0.0, f64::INFINITY),
            label: format!("power-sum({terms:?})"),
        }
    }

    /// Linear-plus-Coulomb potential a r - b/r on (0, inf).
    pub fn funnel(a: f64, b: f64) -> Self {
        Self {
            value: Arc::new(move |r: f64| a * r - b / r),
            deriv: Arc::new(move |r: f64| a + b / (r * r)),
            second_deriv: Some(Arc::new(move |r: f64| -2.0 * b / (r * r * r))),
            domain: (0.0, f64::INFINITY),
            label: format!("funnel({a};{b})"),
        }
    }

    pub fn value(&self, r: f64) -> f64 {
        (self.value)(r)
    }

    pub fn deriv(&self, r: f64) -> f64 {
        (self.deriv)(r)
    }

    /// Second derivative, from the attached closure when present, otherwise
    /// by central finite differences of the first derivative.
    pub fn second_derivative(&self, r: f64) -> f64 {
        match &self.second_deriv {
            Some(s) => s(r),
            None => {
                let h = 1e-6 * r.abs().max(1e-3);
                ((self.deriv)(r + h) - (self.deriv)(r - h)) / (2.0 * h)
            }
        }
    }

    pub fn domain(&self) -> (f64, f64) {
        self.domain
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn contains(&self, r: f64) -> bool {
        r > self.domain.0 && r < self.domain.1
    }

    /// Internal accessors for composing derived potentials.
    pub(crate) fn value_fn(&self) -> RadialFn {
        Arc::clone(&self.value)
    }

    pub(crate) fn deriv_fn(&self) -> RadialFn {
        Arc::clone(&self.deriv)
    }

    pub(crate) fn from_parts(
        label: String,
        domain: (f64, f64),
        value: RadialFn,
        deriv: RadialFn,
        second_deriv: Option<RadialFn>,
    ) -> Self {
        Self {
            value,
            deriv,
            second_deriv,
            domain,
            label,
        }
    }

    fn check_derivative(&self) -> Result<(), CoreError> {
        for &r in &PROBE_RADII {
            if !self.contains(r * 0.999) || !self.contains(r * 1.001) {
                continue;
            }
            let h = 1e-5 * r;
            let fd = ((self.value)(r + h) - (self.value)(r - h)) / (2.0 * h);
            let an = (self.deriv)(r);
            let scale = an.abs().max(fd.abs()).max(1e-12);
            if (fd - an).abs() > DERIV_CONSISTENCY_REL * scale {
                return Err(CoreError::InconsistentDerivative {
                    label: self.label.clone(),
                    r,
                });
            }
        }
        Ok(())
    }
}
