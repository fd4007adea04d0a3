//! Cross-module invariants: monotone restatements of the two-point bounds
//! and small-x limits that tie the evaluators together.

use modstruve::verify::{check_monotone_fn, Direction};
use modstruve::{bessel_i, lgamma, struve_l, AccuracySpec, GridSpec};

fn budget() -> AccuracySpec {
    AccuracySpec::default()
}

fn xs() -> Vec<f64> {
    GridSpec::default().x_points()
}

/// ln of x^ν w(x)^{−1} L_ν(x) for a positive weight w.
fn log_scaled(nu: f64, x: f64, log_w: f64) -> f64 {
    nu * x.ln() - log_w + struve_l(nu, x, &budget()).unwrap().value.ln()
}

#[test]
fn exp_weighted_struve_increases_for_nu_above_half() {
    for nu in [0.5, 1.0, 3.0] {
        let out = check_monotone_fn(
            "exp_weighted",
            Some(nu),
            |x| Ok(log_scaled(nu, x, x)),
            &xs(),
            Direction::Increasing,
        )
        .unwrap();
        assert!(out.pass, "nu={nu}: {out:?}");
    }
}

#[test]
fn cosh_weighted_struve_direction_split() {
    let log_coshm1 = |x: f64| (2.0 * (0.5 * x).sinh().powi(2)).ln();
    for nu in [0.5, 1.0, 3.0] {
        let out = check_monotone_fn(
            "cosh_weighted_up",
            Some(nu),
            |x| Ok(log_scaled(nu, x, log_coshm1(x))),
            &xs(),
            Direction::Increasing,
        )
        .unwrap();
        assert!(out.pass, "nu={nu}: {out:?}");
    }
    for nu in [-0.45, 0.0, 0.45] {
        let out = check_monotone_fn(
            "cosh_weighted_down",
            Some(nu),
            |x| Ok(log_scaled(nu, x, log_coshm1(x))),
            &xs(),
            Direction::Decreasing,
        )
        .unwrap();
        assert!(out.pass, "nu={nu}: {out:?}");
    }
}

#[test]
fn phi_weighted_struve_direction_split() {
    // φ(x) = 1 − cosh x + x sinh x − x²/2, the L_{3/2} factor; the direct
    // form cancels below x ≈ 1, where Σ (2k−1)x^{2k}/(2k)! takes over
    let log_phi = |x: f64| {
        if x >= 1.0 {
            return (1.0 - x.cosh() + x * x.sinh() - 0.5 * x * x).ln();
        }
        let x2 = x * x;
        let mut term = x2 * x2 / 24.0;
        let mut sum = 0.0;
        let mut k = 2u32;
        loop {
            let contrib = (2.0 * k as f64 - 1.0) * term;
            sum += contrib;
            if contrib < f64::EPSILON * sum {
                return sum.ln();
            }
            k += 1;
            term *= x2 / ((2.0 * k as f64 - 1.0) * (2.0 * k as f64));
        }
    };
    for nu in [1.5, 2.0, 5.0] {
        let out = check_monotone_fn(
            "phi_weighted_up",
            Some(nu),
            |x| Ok(log_scaled(nu, x, log_phi(x))),
            &xs(),
            Direction::Increasing,
        )
        .unwrap();
        assert!(out.pass, "nu={nu}: {out:?}");
    }
    for nu in [-0.45, 0.5, 1.45] {
        let out = check_monotone_fn(
            "phi_weighted_down",
            Some(nu),
            |x| Ok(log_scaled(nu, x, log_phi(x))),
            &xs(),
            Direction::Decreasing,
        )
        .unwrap();
        assert!(out.pass, "nu={nu}: {out:?}");
    }
}

#[test]
fn small_x_limit_of_bessel_over_struve() {
    // I_{ν+1}(x)/L_ν(x) → √π Γ(ν+3/2)/(2 Γ(ν+2)) as x → 0
    for nu in [-0.25, 0.5, 1.3, 4.0] {
        let limit = (0.5 * std::f64::consts::PI.ln() + lgamma(nu + 1.5).unwrap()
            - 2f64.ln()
            - lgamma(nu + 2.0).unwrap())
        .exp();
        let ratio = bessel_i(nu + 1.0, 1e-4, &budget()).unwrap().value
            / struve_l(nu, 1e-4, &budget()).unwrap().value;
        assert!(
            ((ratio - limit) / limit).abs() <= 1e-6,
            "nu={nu}: ratio {ratio}, limit {limit}"
        );
    }
}

#[test]
fn registry_citations_are_unique_and_complete() {
    let cat = modstruve::bounds::catalogue();
    let mut citations: Vec<&str> = cat.iter().map(|c| c.citation).collect();
    citations.sort_unstable();
    let before = citations.len();
    citations.dedup();
    assert_eq!(citations.len(), before, "citations must be unique");
    for tag in [
        "(2.1)",
        "(2.2)",
        "(2.3) lower",
        "(2.3) upper",
        "(2.4)",
        "(2.5)",
        "(3.1)",
        "(3.4)",
        "(3.5)",
        "(3.6)",
        "(3.6a)",
        "(3.7)",
        "(3.8)",
        "(3.9)",
        "(R4a)",
        "(R4b)",
        "(R4c)",
        "(R6a)",
        "(R6b)",
        "(R6c)",
        "(R6d)",
        "(R7)",
    ] {
        assert!(
            cat.iter().any(|c| c.citation == tag),
            "catalogue is missing {tag}"
        );
    }
}
