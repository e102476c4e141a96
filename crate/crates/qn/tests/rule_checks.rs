//! Cross-variant behavior of the quantum-number rules.

use afm_qn::{eval_q, LinearSource, QModel};
use std::f64::consts::PI;

/// Every two-body rule must grow strictly with n and with l across the
/// fitted windows.
#[test]
fn rules_increase_in_both_quantum_numbers() {
    let cases: Vec<(QModel, Vec<f64>)> = vec![
        (QModel::Ho, vec![0.0]),
        (QModel::Coulomb, vec![0.0]),
        (QModel::LinearFit { source: LinearSource::Fitted }, vec![-1.0, -0.5, 0.5, 1.0, 2.0]),
        (
            QModel::LinearFit { source: LinearSource::Constrained },
            vec![-1.0, -0.5, 0.5, 1.0, 2.0],
        ),
        (QModel::QuadraticFit, vec![-1.0, -0.5, 0.5, 1.0, 2.0]),
        (QModel::SqrtFit, vec![0.0, 1.0, 5.0]),
        (QModel::FunnelFit, vec![0.0, 0.5, 1.5]),
        (QModel::UrPowerFit, vec![0.5, 1.0, 2.0]),
        (QModel::SrCoulombFit, vec![0.2, 0.6, 1.0]),
        (QModel::UrFunnelFit, vec![0.0, 0.4, 1.0]),
    ];
    for (model, params) in cases {
        for &p in &params {
            for n in 0..=10u32 {
                for l in 0..=10u32 {
                    let q = eval_q(model, n, l, p).unwrap();
                    assert!(q > 0.0, "{model:?} p={p} n={n} l={l}: q={q}");
                    let up_n = eval_q(model, n + 1, l, p).unwrap();
                    let up_l = eval_q(model, n, l + 1, p).unwrap();
                    assert!(up_n > q, "{model:?} p={p} not increasing in n at ({n},{l})");
                    assert!(up_l > q, "{model:?} p={p} not increasing in l at ({n},{l})");
                }
            }
        }
    }
}

/// The s-wave linear-potential rule approaches its semiclassical asymptote.
#[test]
fn airy_rule_matches_semiclassical_asymptote() {
    let mut prev = 0.0;
    for n in 0..=10u32 {
        let q = eval_q(QModel::AiryL0, n, 0, 0.0).unwrap();
        assert!(q > prev, "not increasing at n = {n}");
        prev = q;
        if n >= 3 {
            let asymptote = PI / 3.0f64.sqrt() * f64::from(n) + 3.0f64.sqrt() * PI / 4.0;
            assert!(
                (q - asymptote).abs() < 0.01 * asymptote,
                "n = {n}: {q} vs {asymptote}"
            );
        }
    }
}

/// The fitted linear rule stays between the band and Coulomb rules for
/// exponents strictly inside (-1, 2), touching them at the ends.
#[test]
fn fitted_linear_rule_interpolates_the_exact_rules() {
    for n in 0..=6u32 {
        for l in 0..=6u32 {
            let lo = eval_q(QModel::Coulomb, n, l, 0.0).unwrap();
            let hi = eval_q(QModel::Ho, n, l, 0.0).unwrap();
            for lambda in [-0.5, 0.5, 1.0, 1.5] {
                let q =
                    eval_q(QModel::LinearFit { source: LinearSource::Fitted }, n, l, lambda)
                        .unwrap();
                assert!(q >= lo - 1e-12 && q <= hi + 1e-12, "({n},{l}) lambda={lambda}: {q}");
            }
        }
    }
}
