//! Property tests: residuals, monotonicity and branch identities hold over
//! randomly drawn arguments, not just the frozen grids.

use afm_special::{
    lambert_w, reduced_cubic_root, reduced_quartic_root, yukawa_radius, Branch, Sign,
};
use proptest::prelude::*;

proptest! {
    #[test]
    fn cubic_residuals_stay_bounded(y in 0.0f64..1e6) {
        let x = reduced_cubic_root(y, Sign::Plus);
        prop_assert!((x * x * x + 3.0 * x - 2.0 * y).abs() <= 1e-11 * (2.0 * y).max(1.0));
        let x = reduced_cubic_root(y, Sign::Minus);
        prop_assert!((x * x * x - 3.0 * x - 2.0 * y).abs() <= 1e-11 * (2.0 * y).max(1.0));
    }

    #[test]
    fn quartic_residuals_stay_bounded(y in 0.0f64..1e6) {
        let x = reduced_quartic_root(y, Sign::Plus);
        prop_assert!((4.0 * x.powi(4) + 8.0 * x - 3.0 * y).abs() <= 1e-11 * (3.0 * y).max(1.0));
        let x = reduced_quartic_root(y, Sign::Minus);
        prop_assert!((4.0 * x.powi(4) - 8.0 * x - 3.0 * y).abs() <= 1e-11 * (3.0 * y).max(1.0));
    }

    #[test]
    fn roots_are_monotone_in_y(y in 0.0f64..1e5, dy in 1e-6f64..10.0) {
        for sign in [Sign::Plus, Sign::Minus] {
            prop_assert!(reduced_cubic_root(y + dy, sign) > reduced_cubic_root(y, sign));
            prop_assert!(reduced_quartic_root(y + dy, sign) > reduced_quartic_root(y, sign));
        }
    }

    #[test]
    fn lambert_defining_identity(z in -0.36f64..50.0) {
        let w = lambert_w(z, Branch::Principal).unwrap();
        prop_assert!((w * w.exp() - z).abs() <= 1e-12 * z.abs().max(1.0));
    }

    #[test]
    fn lambert_secondary_identity(z in -0.3678f64..-1e-6) {
        let w = lambert_w(z, Branch::Secondary).unwrap();
        prop_assert!(w <= -1.0 + 1e-12);
        prop_assert!((w * w.exp() - z).abs() <= 1e-12);
    }

    #[test]
    fn lambert_derivative_identity(z in -0.3f64..20.0) {
        // dW/dz = W / (z (1 + W)), checked against a centered difference.
        let h = 1e-6 * z.abs().max(0.05);
        let wm = lambert_w(z - h, Branch::Principal).unwrap();
        let wp = lambert_w(z + h, Branch::Principal).unwrap();
        let w = lambert_w(z, Branch::Principal).unwrap();
        let analytic = if z == 0.0 { 1.0 } else { w / (z * (1.0 + w)) };
        let numeric = (wp - wm) / (2.0 * h);
        prop_assert!((analytic - numeric).abs() <= 1e-4 * analytic.abs().max(1.0));
    }

    #[test]
    fn yukawa_radius_inverts_the_scale_map(r in 1e-6f64..1.618) {
        let t = r * (1.0 + r) * (-r).exp();
        let back = yukawa_radius(t).unwrap();
        prop_assert!((back - r).abs() <= 1e-9 * r.max(1e-3));
    }
}
