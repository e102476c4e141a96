//! Tangency radius of the screened Coulomb well.
//!
//! The bound-state radius for `-g exp(-r)/r` solves
//!
//!   r (1 + r) exp(-r) = t,
//!
//! whose left side rises from 0 to a single maximum at the golden ratio
//! and decays beyond. The physical branch is the inner one, r in (0, phi].

use crate::DomainError;

/// Golden ratio, the radius where the tangency map peaks.
pub const YUKAWA_RADIUS_MAX: f64 = 1.618_033_988_749_894_8;

/// Peak value `phi^3 exp(-phi)` of `r (1 + r) exp(-r)`; scales above this
/// admit no solution (the state has been pushed out of the well).
pub const YUKAWA_SCALE_MAX: f64 = 0.839_962_094_657_175_1;

// Scales this close above the peak are treated as the peak itself; callers
// land there through rounded arithmetic at the critical coupling.
const PEAK_SLACK: f64 = 1e-12;

/// Inner solution of `r (1 + r) exp(-r) = t` for `t` in `(0, YUKAWA_SCALE_MAX]`.
pub fn yukawa_radius(t: f64) -> Result<f64, DomainError> {
    if !(t > 0.0) || t > YUKAWA_SCALE_MAX * (1.0 + PEAK_SLACK) {
        return Err(DomainError::YukawaScaleOutOfRange(t));
    }
    if t >= YUKAWA_SCALE_MAX {
        return Ok(YUKAWA_RADIUS_MAX);
    }
    // The map is strictly increasing on (0, phi); plain bisection is exact
    // enough and unconditionally safe this close to a flat maximum.
    let (mut lo, mut hi) = (0.0f64, YUKAWA_RADIUS_MAX);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if scale_at(mid) < t {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

fn scale_at(r: f64) -> f64 {
    r * (1.0 + r) * (-r).exp()
}
