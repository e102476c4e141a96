//! Solution records returned by the extremization.

use std::fmt;

/// Direction in which the auxiliary-field energy bounds the exact one,
/// as decided by the convexity of V as a function of the auxiliary form P.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    /// V is a concave function of P: the approximation lies above.
    Upper,
    /// V is a convex function of P: the approximation lies below.
    Lower,
    /// V is P itself (up to an affine map): the approximation is exact.
    Exact,
    /// Mixed convexity; no one-sided statement holds.
    Unknown,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BoundKind::Upper => "upper",
            BoundKind::Lower => "lower",
            BoundKind::Exact => "exact",
            BoundKind::Unknown => "unknown",
        };
        f.write_str(s)
    }
}

/// Stationary point of the auxiliary problem: energy E = T(p0) + V(r0) with
/// p0 r0 = Q, the virial identity p0 T'(p0) = r0 V'(r0), the optimal
/// auxiliary-field value nu0, and the bound direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AfmSolution {
    pub energy: f64,
    pub r0: f64,
    pub p0: f64,
    pub nu0: f64,
    pub bound_tag: BoundKind,
}
