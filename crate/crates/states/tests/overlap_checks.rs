//! Overlap kernels cross-checked against direct quadrature, and the
//! transition-probability grids of the linear-well trial states.

use afm_states::{
    linear_well_transition_probability, numeric_overlap, overlap_dilated, DilatedFamily,
    TrialState,
};

/// Overlap via quadrature: both kernels equal the overlap of a unit-scale
/// state with the a-dilated partner, the dilation acting on the full
/// inverse-length scale.
fn quadrature_overlap(family: DilatedFamily, n: u32, np: u32, l: u32, a: f64) -> f64 {
    let (lhs, rhs) = match family {
        DilatedFamily::Oscillator => (
            TrialState::oscillator(1.0, n, l).unwrap(),
            TrialState::oscillator(a, np, l).unwrap(),
        ),
        DilatedFamily::Hydrogenic => (
            TrialState::hydrogenic(1.0, n, l).unwrap(),
            TrialState::hydrogenic(a, np, l).unwrap(),
        ),
    };
    numeric_overlap(&lhs, &rhs)
}

#[test]
fn kernels_match_quadrature() {
    let dilations = [0.45, 1.0, 1.8, 2.519_842];
    for family in [DilatedFamily::Oscillator, DilatedFamily::Hydrogenic] {
        for &(n, np, l) in &[(0u32, 0u32, 0u32), (0, 1, 0), (1, 2, 1), (2, 0, 2), (3, 3, 0)] {
            for &a in &dilations {
                let closed = overlap_dilated(family, n, np, l, a).unwrap();
                let quad = quadrature_overlap(family, n, np, l, a);
                assert!(
                    (closed - quad).abs() < 1e-9,
                    "{family:?} n={n} n'={np} l={l} a={a}: closed {closed}, quad {quad}"
                );
            }
        }
    }
}

#[test]
fn swap_identity_against_quadrature() {
    // n > n' exercises the swapped branch of the closed form.
    let closed = overlap_dilated(DilatedFamily::Hydrogenic, 3, 1, 0, 0.6).unwrap();
    let quad = quadrature_overlap(DilatedFamily::Hydrogenic, 3, 1, 0, 0.6);
    assert!((closed - quad).abs() < 1e-9, "closed {closed}, quad {quad}");
}

/// Printed-table comparison: `decimals` is the precision of the quoted value.
fn assert_printed(got: f64, printed: f64, decimals: i32, what: &str) {
    let tol = 0.5 * 10f64.powi(-decimals) + 1e-12;
    assert!(
        (got - printed).abs() <= tol,
        "{what}: got {got:.6}, printed {printed}"
    );
}

#[test]
fn hydrogenic_linear_well_transition_grid() {
    // |F|^2 between optimized hydrogen-like states of H = p^2 + r.
    let l0: [(u32, u32, f64, i32); 6] = [
        (0, 1, 0.43, 2),
        (0, 2, 0.055, 3),
        (0, 3, 0.0097, 4),
        (1, 2, 0.43, 2),
        (1, 3, 0.049, 3),
        (2, 3, 0.43, 2),
    ];
    for (n, np, printed, decimals) in l0 {
        let p = linear_well_transition_probability(DilatedFamily::Hydrogenic, n, np, 0);
        assert_printed(p, printed, decimals, &format!("Hy l=0 ({n},{np})"));
    }
    let l1: [(u32, u32, f64, i32); 6] = [
        (0, 1, 0.29, 2),
        (0, 2, 0.028, 3),
        (0, 3, 0.0039, 4),
        (1, 2, 0.36, 2),
        (1, 3, 0.036, 3),
        (2, 3, 0.39, 2),
    ];
    for (n, np, printed, decimals) in l1 {
        let p = linear_well_transition_probability(DilatedFamily::Hydrogenic, n, np, 1);
        assert_printed(p, printed, decimals, &format!("Hy l=1 ({n},{np})"));
    }
}

#[test]
fn oscillator_linear_well_transition_grid() {
    let l0: [(u32, u32, f64, i32); 6] = [
        (0, 1, 0.029, 3),
        (0, 2, 0.0036, 4),
        (0, 3, 0.00064, 5),
        (1, 2, 0.027, 3),
        (1, 3, 0.0031, 4),
        (2, 3, 0.027, 3),
    ];
    for (n, np, printed, decimals) in l0 {
        let p = linear_well_transition_probability(DilatedFamily::Oscillator, n, np, 0);
        assert_printed(p, printed, decimals, &format!("HO l=0 ({n},{np})"));
    }
    let l1: [(u32, u32, f64, i32); 6] = [
        (0, 1, 0.023, 3),
        (0, 2, 0.0026, 4),
        (0, 3, 0.00039, 5),
        (1, 2, 0.026, 3),
        (1, 3, 0.0027, 4),
        (2, 3, 0.026, 3),
    ];
    for (n, np, printed, decimals) in l1 {
        let p = linear_well_transition_probability(DilatedFamily::Oscillator, n, np, 1);
        assert_printed(p, printed, decimals, &format!("HO l=1 ({n},{np})"));
    }
}

#[test]
fn neighbour_transition_weakens_with_orbital_excitation() {
    // |<HO;0,l | HO;1,l>|^2 for l = 0..5.
    let printed = [0.029, 0.023, 0.019, 0.017, 0.014, 0.013];
    for (l, want) in printed.into_iter().enumerate() {
        let p = linear_well_transition_probability(DilatedFamily::Oscillator, 0, 1, l as u32);
        assert_printed(p, want, 3, &format!("HO (0,1) l={l}"));
    }
}

#[test]
fn oscillator_trials_track_exact_linear_well_states() {
    // Squared overlap of the exact s-wave state of p^2 + r with the
    // oscillator trial state at the same n: 0.997, 0.979, 0.951, then
    // decaying below 0.75 by n = 6 and below 0.25 by n = 14.
    let printed = [0.997, 0.979, 0.951];
    for (n, want) in printed.into_iter().enumerate() {
        let n = n as u32;
        let exact = TrialState::airy_well(1.0, n, 0).unwrap();
        let trial = afm_states::afm_state_for_linear(DilatedFamily::Oscillator, n, 0);
        let overlap = numeric_overlap(&exact, &trial);
        assert_printed(overlap * overlap, want, 3, &format!("|<{n}|HO;{n}>|^2"));
    }
    for (n, cap) in [(6u32, 0.75), (14, 0.25)] {
        let exact = TrialState::airy_well(1.0, n, 0).unwrap();
        let trial = afm_states::afm_state_for_linear(DilatedFamily::Oscillator, n, 0);
        let overlap = numeric_overlap(&exact, &trial);
        assert!(
            overlap * overlap < cap,
            "n={n}: {} should be below {cap}",
            overlap * overlap
        );
    }
}
