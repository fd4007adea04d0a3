//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Run with `cargo test --test acceptance -- --nocapture` to see the
//! lines and timings.

use modstruve::bounds::{registry, Expected};
use modstruve::relations::{
    residual_derivative_recurrence, residual_ode, residual_shift_recurrence,
    residual_subtraction_recurrence, residual_xnu_derivative, turan_delta, turan_delta_identity,
};
use modstruve::verify::default_property_suite;
use modstruve::{
    bessel_i, run_verification, struve_closed_form, struve_l, struve_l_quad, AccuracySpec,
    GridSpec, QuadratureSpec, VerifyConfig,
};
use std::process::Command;
use std::time::Instant;

fn budget() -> AccuracySpec {
    AccuracySpec::default()
}

fn report_line(n: u32, what: &str, pass: bool, t: Instant) {
    println!(
        "criterion {n}: {} ({what}, {:.2}s)",
        if pass { "PASS" } else { "FAIL" },
        t.elapsed().as_secs_f64()
    );
    assert!(pass, "criterion {n} failed: {what}");
}

#[test]
fn criterion_1_cross_method_oracle_equivalence() {
    let t = Instant::now();
    let q = QuadratureSpec::default();

    for nu in [-0.25, 0.0, 0.5, 1.0, 2.5, 5.0] {
        for x in [0.1, 1.0, 5.0, 10.0, 20.0] {
            let series = struve_l(nu, x, &budget()).unwrap().value;
            let quad = struve_l_quad(nu, x, &q).unwrap().value;
            let rel = ((series - quad) / series).abs();
            assert!(
                rel <= 1e-8,
                "series vs quadrature at nu={nu}, x={x}: rel={rel:e}"
            );
        }
    }
    for nu in [-0.5, 0.5, 1.5] {
        for x in [0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0] {
            let series = struve_l(nu, x, &budget()).unwrap().value;
            let closed = struve_closed_form(nu, x).unwrap().value;
            let rel = ((series - closed) / closed).abs();
            assert!(
                rel <= 1e-12,
                "series vs closed form at nu={nu}, x={x}: rel={rel:e}"
            );
        }
    }
    let within_budget = t.elapsed().as_secs_f64() < 5.0;
    report_line(1, "series vs quadrature and closed forms", within_budget, t);
}

#[test]
fn criterion_2_identity_residuals_on_default_grid() {
    let t = Instant::now();
    let grid = GridSpec::default();
    let xs = grid.x_points();
    let mut worst: f64 = 0.0;
    for nu in grid.nu_points() {
        for &x in &xs {
            // the three recurrences plus the equation and derivative identities
            if nu > -0.5 + 1e-3 {
                for r in [
                    residual_subtraction_recurrence(nu, x, &budget()).unwrap(),
                    residual_derivative_recurrence(nu, x, &budget()).unwrap(),
                    residual_ode(nu, x, &budget()).unwrap(),
                    turan_delta_identity(nu, x, &budget()).unwrap(),
                ] {
                    worst = worst.max(r.rel_residual.abs());
                    assert!(
                        r.rel_residual.abs() <= 1e-8,
                        "{} at nu={nu}, x={x}: rel={:e}",
                        r.identity,
                        r.rel_residual
                    );
                }
            }
            for r in [
                residual_shift_recurrence(nu, x, &budget()).unwrap(),
                residual_xnu_derivative(nu, x, &budget()).unwrap(),
            ] {
                worst = worst.max(r.rel_residual.abs());
                assert!(
                    r.rel_residual.abs() <= 1e-8,
                    "{} at nu={nu}, x={x}: rel={:e}",
                    r.identity,
                    r.rel_residual
                );
            }
        }
    }
    let within_budget = t.elapsed().as_secs_f64() < 30.0;
    report_line(
        2,
        &format!("six identities, worst relative residual {worst:.2e}"),
        within_budget,
        t,
    );
}

#[test]
fn criterion_3_inequality_sweep_zero_violations() {
    let t = Instant::now();
    let config = VerifyConfig {
        properties: false,
        ..VerifyConfig::default()
    };
    let run = run_verification(&config).unwrap();
    assert!(
        run.report.eval_errors.is_empty(),
        "{:?}",
        run.report.eval_errors
    );
    assert_eq!(run.report.cases.len(), registry().len());
    for c in &run.report.cases {
        assert!(c.points > 0, "case {} was clipped away entirely", c.name);
        assert!(
            c.violations.is_empty(),
            "case {} has {} violations, first: {:?}",
            c.name,
            c.violations.len(),
            c.violations.first()
        );
    }
    // reversal ranges were actually exercised, with flipped direction
    for name in [
        "bessel_upper",
        "ratio_cosh",
        "ratio_l32",
        "l0_bound",
        "upper_sinh",
    ] {
        let reversed = run
            .records
            .iter()
            .filter(|r| r.case == name && r.expected == Expected::Reversed)
            .count();
        assert!(reversed > 0, "case {name} swept no reversed points");
        assert!(run
            .records
            .iter()
            .filter(|r| r.case == name && r.expected == Expected::Reversed)
            .all(|r| r.margin < 0.0));
    }
    // equality points reproduce equality to 1e-10 of scale
    let mut equality_points = 0;
    for r in run
        .records
        .iter()
        .filter(|r| r.expected == Expected::Equality)
    {
        equality_points += 1;
        let scale = r.lhs.abs().max(r.rhs.abs());
        assert!(
            r.margin.abs() <= 1e-10 * scale,
            "equality at case {} nu={} x={}: margin={:e}, scale={:e}",
            r.case,
            r.nu,
            r.x,
            r.margin,
            scale
        );
    }
    assert!(equality_points > 0);
    let within_budget = t.elapsed().as_secs_f64() < 60.0;
    report_line(
        3,
        &format!(
            "{} cases, {} records, {equality_points} equality points",
            run.report.cases.len(),
            run.records.len()
        ),
        within_budget,
        t,
    );
}

#[test]
fn criterion_4_property_suite_and_spot_values() {
    let t = Instant::now();
    let suite = default_property_suite(&GridSpec::default(), &budget()).unwrap();
    let expected_names = [
        "1a_bessel_over_struve_increasing_x",
        "1b_bessel_over_struve_decreasing_x",
        "1c_norm_ratio_increasing_x",
        "1d_norm_ratio_decreasing_x",
        "1e_norm_decreasing_and_logconvex_nu",
        "1f_successive_ratio_decreasing_nu",
        "1g_log_deriv_increasing_x",
        "1h_shifted_logconvex_x",
        "closed_ratio_half",
        "r7_struve_logconcave_nu",
        "r7_wright_logconcave_nu",
        "r7_scaled_ratio_decreasing_nu",
    ];
    for name in expected_names {
        let matches: Vec<_> = suite.iter().filter(|p| p.name == name).collect();
        assert_eq!(matches.len(), 1, "property {name} must appear exactly once");
        assert!(matches[0].pass, "property {name} failed: {:?}", matches[0]);
    }
    assert_eq!(suite.len(), expected_names.len());

    // spot value: I_{ν+1}/L_ν at x = 1e−4, ν = 1/2 equals 2/3
    let ratio = bessel_i(1.5, 1e-4, &budget()).unwrap().value
        / struve_l(0.5, 1e-4, &budget()).unwrap().value;
    assert!(
        (ratio - 2.0 / 3.0).abs() <= 1e-6,
        "small-x ratio at nu=1/2: {ratio}"
    );
    // spot value: the ratio is identically 1 at ν = −1/2
    for x in GridSpec::default().x_points() {
        let r = bessel_i(0.5, x, &budget()).unwrap().value
            / struve_l(-0.5, x, &budget()).unwrap().value;
        assert!((r - 1.0).abs() <= 1e-12, "x={x}: ratio {r}");
    }
    report_line(4, "structural property suite plus spot ratios", true, t);
}

#[test]
fn criterion_5_bound_chain_ordering() {
    let t = Instant::now();
    let grid = GridSpec::default();
    let xs = grid.x_points();

    // sharpened Turán lower < Δ < Turán upper, pointwise
    for nu in grid.nu_points() {
        for &x in &xs {
            let delta = turan_delta(nu, x, &budget()).unwrap();
            let sharp = ((std::f64::consts::PI / 4.0).ln() + (2.0 * nu + 2.0) * (0.5 * x).ln()
                - (nu + 1.5).ln()
                - 2.0 * modstruve::lgamma(nu + 1.5).unwrap())
            .exp();
            let upper = struve_l(nu, x, &budget()).unwrap().value.powi(2) / (nu + 1.5);
            assert!(
                sharp < delta && delta < upper,
                "Turán chain at nu={nu}, x={x}: {sharp:e} vs {delta:e} vs {upper:e}"
            );
        }
    }

    let coshm1 = |v: f64| 2.0 * (0.5 * v).sinh().powi(2);
    let phi = |v: f64| 1.0 - v.cosh() + v * v.sinh() - 0.5 * v * v;

    // the cosh two-point bound improves on the exp two-point bound
    for nu in grid.nu_points().into_iter().filter(|&n| n > 0.5) {
        for w in xs.windows(2) {
            let (x, y) = (w[0], w[1]);
            let factor = (y / x).powf(nu);
            let exp_bound = (x - y).exp() * factor;
            let cosh_bound = coshm1(x) / coshm1(y) * factor;
            assert!(
                cosh_bound <= exp_bound,
                "two-point bounds at nu={nu}, x={x}, y={y}"
            );
        }
    }

    // log-derivative lower bounds sharpen: linear ≤ cosh ≤ x2
    for &x in &xs {
        let linear = 1.0; // common −ν/x term dropped from all three
        let cosh_b = x.sinh() / coshm1(x);
        let x2_b = x * coshm1(x) / phi(x);
        assert!(
            linear <= cosh_b && cosh_b <= x2_b,
            "x={x}: 1, {cosh_b}, {x2_b}"
        );
    }
    report_line(
        5,
        "Turán chain, two-point chain, log-derivative chain",
        true,
        t,
    );
}

#[test]
fn criterion_6_negative_control_and_determinism() {
    let t = Instant::now();

    // flipping any single case yields at least one violation (library level)
    for case in registry() {
        let config = VerifyConfig {
            cases: Some(vec![case.name.to_string()]),
            flip: vec![case.name.to_string()],
            properties: false,
            ..VerifyConfig::default()
        };
        let run = run_verification(&config).unwrap();
        assert!(!run.report.pass, "flipping {} did not fail", case.name);
        assert!(
            !run.report.cases[0].violations.is_empty(),
            "flipping {} produced no violation records",
            case.name
        );
    }

    // ... and exit code 1 through the binary, with deterministic reports
    let bin = env!("CARGO_BIN_EXE_modstruve");
    let tmp = std::env::temp_dir();
    let flipped = Command::new(bin)
        .args([
            "verify",
            "--case",
            "ratio_cosh",
            "--flip",
            "ratio_cosh",
            "--no-properties",
            "--out",
        ])
        .arg(tmp.join("flipped.json"))
        .output()
        .unwrap();
    assert_eq!(flipped.status.code(), Some(1), "flip run must exit 1");
    let flipped_report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(tmp.join("flipped.json")).unwrap()).unwrap();
    assert!(!flipped_report["cases"][0]["violations"]
        .as_array()
        .unwrap()
        .is_empty());

    let mut payloads = Vec::new();
    for name in ["det_a.json", "det_b.json"] {
        let out = Command::new(bin)
            .args([
                "verify",
                "--case",
                "turan_upper",
                "--no-properties",
                "--out",
            ])
            .arg(tmp.join(name))
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
        let mut v: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(tmp.join(name)).unwrap()).unwrap();
        v["wall_time"] = 0.0.into();
        payloads.push(v.to_string());
    }
    assert_eq!(
        payloads[0], payloads[1],
        "reports must be bit-identical modulo wall_time"
    );

    report_line(
        6,
        "22 flipped controls, exit code 1, deterministic JSON",
        true,
        t,
    );
}
