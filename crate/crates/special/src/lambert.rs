//! Real branches of the Lambert W function, `w e^w = z`.
//!
//! The principal branch `W0` covers `z >= -1/e`; the secondary branch `Wm1`
//! covers `-1/e <= z < 0`. Both are seeded with branch-appropriate
//! asymptotics and polished by Halley iteration on `f(w) = w e^w - z`.

use crate::{tol, DomainError};

/// Real branch selector for [`lambert_w`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// Principal branch, `W >= -1`.
    Principal,
    /// Secondary real branch, `W <= -1`, defined on `[-1/e, 0)`.
    Secondary,
}

const INV_E: f64 = 1.0 / std::f64::consts::E;
// Arguments this close below -1/e are treated as the branch point itself;
// callers arrive there through rounded arithmetic on exact cancellations.
const BRANCH_POINT_SLACK: f64 = 1e-12;

/// Lambert W on the requested real branch.
pub fn lambert_w(z: f64, branch: Branch) -> Result<f64, DomainError> {
    if !z.is_finite() {
        return Err(DomainError::BelowBranchPoint(z));
    }
    let offset = z + INV_E;
    if offset < -BRANCH_POINT_SLACK * INV_E {
        return Err(DomainError::BelowBranchPoint(z));
    }
    let offset = offset.max(0.0);
    if offset == 0.0 {
        return Ok(-1.0);
    }
    match branch {
        Branch::Principal => Ok(halley(z, seed_principal(z, offset))),
        Branch::Secondary => {
            if z >= 0.0 {
                return Err(DomainError::SecondaryBranchNonNegative(z));
            }
            Ok(halley(z, seed_secondary(z, offset)))
        }
    }
}

/// Series about the branch point, shared by both seeds:
/// `W = -1 + p - p^2/3 + 11 p^3/72` with `p = ±sqrt(2 e (z + 1/e))`.
fn branch_point_series(p: f64) -> f64 {
    -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0)))
}

fn seed_principal(z: f64, offset: f64) -> f64 {
    if offset < 0.25 * INV_E {
        branch_point_series((2.0 * std::f64::consts::E * offset).sqrt())
    } else if z < 0.5 {
        // W ~ z(1 - z + 3z^2/2) near zero; adequate as a Halley seed.
        z * (1.0 - z * (1.0 - 1.5 * z))
    } else if z < 10.0 {
        // Crude but always inside the (wide) Halley basin at this scale.
        (1.0 + z).ln()
    } else {
        let l1 = z.ln();
        let l2 = l1.ln();
        l1 - l2 + l2 / l1
    }
}

fn seed_secondary(z: f64, offset: f64) -> f64 {
    if offset < 0.25 * INV_E {
        branch_point_series(-(2.0 * std::f64::consts::E * offset).sqrt())
    } else {
        // z -> 0^-: W ~ ln(-z) - ln(-ln(-z)).
        let l1 = (-z).ln();
        let l2 = (-l1).ln();
        l1 - l2 + l2 / l1
    }
}

fn halley(z: f64, mut w: f64) -> f64 {
    for _ in 0..tol::MAX_ITER {
        let ew = w.exp();
        let f = w * ew - z;
        if f == 0.0 {
            break;
        }
        let fp = ew * (w + 1.0);
        // Halley step with f'' = e^w (w + 2).
        let step = f / (fp - f * (w + 2.0) / (2.0 * (w + 1.0)));
        w -= step;
        if step.abs() <= tol::STEP_CONVERGED * (1.0 + w.abs()) {
            break;
        }
    }
    w
}
