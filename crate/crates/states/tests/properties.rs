//! Randomized structural properties of the observable closed forms.

use afm_states::{
    moment_r, overlap_dilated, virial_residual, DilatedFamily, PowerLawEigenstate, TrialState,
};
use proptest::prelude::*;

fn family() -> impl Strategy<Value = DilatedFamily> {
    prop_oneof![
        Just(DilatedFamily::Oscillator),
        Just(DilatedFamily::Hydrogenic)
    ]
}

proptest! {
    #[test]
    fn overlap_never_exceeds_unity(
        fam in family(),
        n in 0u32..6,
        np in 0u32..6,
        l in 0u32..5,
        a in 0.05f64..20.0,
    ) {
        let f = overlap_dilated(fam, n, np, l, a).unwrap();
        prop_assert!(f.is_finite());
        prop_assert!(f.abs() <= 1.0 + 1e-9, "F = {f}");
    }

    #[test]
    fn overlap_at_unit_dilation_is_kronecker(
        fam in family(),
        n in 0u32..6,
        np in 0u32..6,
        l in 0u32..5,
    ) {
        let f = overlap_dilated(fam, n, np, l, 1.0).unwrap();
        let want = if n == np { 1.0 } else { 0.0 };
        prop_assert!((f - want).abs() < 1e-9, "F = {f}, want {want}");
    }

    #[test]
    fn overlap_swap_identity(
        fam in family(),
        n in 0u32..5,
        np in 0u32..5,
        l in 0u32..4,
        a in 0.1f64..10.0,
    ) {
        let direct = overlap_dilated(fam, n, np, l, a).unwrap();
        let swapped = overlap_dilated(fam, np, n, l, 1.0 / a).unwrap();
        prop_assert!((direct - swapped).abs() < 1e-9, "{direct} vs {swapped}");
    }

    #[test]
    fn radial_moments_positive_and_growing_in_n(
        scale in 0.3f64..3.0,
        l in 0u32..4,
        n in 0u32..6,
    ) {
        let lo = TrialState::oscillator(scale, n, l).unwrap();
        let hi = TrialState::oscillator(scale, n + 1, l).unwrap();
        for k in [-2i32, -1, 1, 2, 3, 4] {
            prop_assert!(moment_r(&lo, k).unwrap() > 0.0);
        }
        // The band number grows with n, and <r^2> = band/scale^2 with it.
        prop_assert!(moment_r(&hi, 2).unwrap() > moment_r(&lo, 2).unwrap());
    }

    #[test]
    fn coulomb_eigenstates_satisfy_virial_recurrence(
        mass in 0.3f64..3.0,
        alpha in 0.3f64..3.0,
        n in 0u32..5,
        l in 0u32..4,
        s in 0i32..4,
    ) {
        let nn = (n + l + 1) as f64;
        let state = PowerLawEigenstate {
            lambda: -1.0,
            coupling: alpha,
            mass,
            energy: -mass * alpha * alpha / (2.0 * nn * nn),
            l,
        };
        let trial = TrialState::hydrogenic(mass * alpha, n, l).unwrap();
        let m_s = moment_r(&trial, s).unwrap();
        let m_prev = moment_r(&trial, s - 1).unwrap();
        let m_sm2 = if s == 0 { 0.0 } else { moment_r(&trial, s - 2).unwrap() };
        let res = virial_residual(&state, s as f64, m_s, m_prev, m_sm2);
        let size = (2.0 * (s as f64 + 1.0) * state.energy * m_s).abs();
        prop_assert!(res.abs() <= 1e-9 * size, "residual {res} vs scale {size}");
    }

    #[test]
    fn oscillator_eigenstates_satisfy_virial_recurrence(
        mass in 0.3f64..3.0,
        nu in 0.3f64..3.0,
        n in 0u32..5,
        l in 0u32..4,
        s in 0i32..4,
    ) {
        let q = 2.0 * n as f64 + l as f64 + 1.5;
        let state = PowerLawEigenstate {
            lambda: 2.0,
            coupling: nu,
            mass,
            energy: (2.0 * nu / mass).sqrt() * q,
            l,
        };
        let scale = (2.0 * mass * nu).powf(0.25);
        let trial = TrialState::oscillator(scale, n, l).unwrap();
        let m_s = moment_r(&trial, s).unwrap();
        let m_next = moment_r(&trial, s + 2).unwrap();
        let m_sm2 = if s == 0 { 0.0 } else { moment_r(&trial, s - 2).unwrap() };
        let res = virial_residual(&state, s as f64, m_s, m_next, m_sm2);
        let size = (2.0 * (s as f64 + 1.0) * state.energy * m_s).abs();
        prop_assert!(res.abs() <= 1e-9 * size, "residual {res} vs scale {size}");
    }
}
