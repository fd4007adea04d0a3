//! Grid sweeps over the inequality catalogue, finite-difference
//! monotonicity and midpoint convexity checks, and machine-readable
//! reports.
//!
//! Monotonicity is checked through consecutive grid differences, not
//! derivative estimation: sign checks need sampling density, not high-order
//! accuracy. Log-convexity and log-concavity are checked through the
//! midpoint inequality over grid pairs, which is the defining form.

use crate::bounds::{
    equality_sweep, registry, sweep_case, Expected, InequalityCase, InequalityRecord,
};
use crate::error::{Error, Result};
use crate::eval::{struve_l, struve_norm, AccuracySpec};
use crate::grid::GridSpec;
use crate::quad::next_shifted_series;
use serde::{Deserialize, Serialize};
use std::time::Instant;

/// Claimed direction of a monotone target.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Increasing,
    Decreasing,
}

impl Direction {
    fn as_str(self) -> &'static str {
        match self {
            Direction::Increasing => "increasing",
            Direction::Decreasing => "decreasing",
        }
    }
}

/// The most stressed point of a property check: the pair (or triple) with
/// the smallest slack `gap`. Negative gap means the check failed there.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WorstPoint {
    pub nu: f64,
    pub x: f64,
    pub gap: f64,
}

/// Outcome of one property check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropertyOutcome {
    pub name: String,
    pub direction: String,
    pub pass: bool,
    pub worst_point: WorstPoint,
}

/// Relative slack granted to finite differences and midpoint comparisons.
const FD_TOL: f64 = 1e-12;

/// Checks that `f` is monotone in the claimed direction along `axis`,
/// through consecutive differences. A difference may undershoot zero by at
/// most `FD_TOL` of the local value.
pub fn check_monotone_fn(
    name: &str,
    axis_label_nu: Option<f64>,
    f: impl Fn(f64) -> Result<f64>,
    axis: &[f64],
    direction: Direction,
) -> Result<PropertyOutcome> {
    if axis.len() < 2 {
        return Err(Error::Config(format!(
            "monotonicity check {name} needs at least 2 axis points"
        )));
    }
    let values: Vec<f64> = axis.iter().map(|&t| f(t)).collect::<Result<_>>()?;
    let mut worst = WorstPoint {
        nu: axis_label_nu.unwrap_or(axis[0]),
        x: axis[0],
        gap: f64::INFINITY,
    };
    let mut pass = true;
    for i in 0..values.len() - 1 {
        let diff = match direction {
            Direction::Increasing => values[i + 1] - values[i],
            Direction::Decreasing => values[i] - values[i + 1],
        };
        let scale = values[i].abs().max(values[i + 1].abs());
        let gap = diff + FD_TOL * scale;
        if gap < worst.gap {
            worst = match axis_label_nu {
                Some(nu) => WorstPoint {
                    nu,
                    x: axis[i],
                    gap,
                },
                None => WorstPoint {
                    nu: axis[i],
                    x: f64::NAN,
                    gap,
                },
            };
        }
        if gap < 0.0 {
            pass = false;
        }
    }
    Ok(PropertyOutcome {
        name: name.to_string(),
        direction: direction.as_str().to_string(),
        pass,
        worst_point: worst,
    })
}

/// Functions of x whose monotonicity the catalogue asserts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum XTarget {
    /// I_{ν+1}(x)/L_ν(x)
    BesselOverStruve { nu: f64 },
    /// 𝓛_ν(x)/𝓛_μ(x), a positive multiple of 2^{ν−μ} x^{μ−ν} L_ν/L_μ
    NormRatioTwoOrders { nu: f64, mu: f64 },
    /// x L'_ν(x)/L_ν(x)
    LogDeriv { nu: f64 },
    /// L_{1/2}(x)/L_{−1/2}(x) from the closed forms
    ClosedRatioHalf,
}

impl XTarget {
    fn name(&self) -> String {
        match self {
            XTarget::BesselOverStruve { nu } => format!("bessel_over_struve[nu={nu}]"),
            XTarget::NormRatioTwoOrders { nu, mu } => format!("norm_ratio[nu={nu},mu={mu}]"),
            XTarget::LogDeriv { nu } => format!("log_deriv[nu={nu}]"),
            XTarget::ClosedRatioHalf => "closed_ratio_half".to_string(),
        }
    }

    fn eval(&self, x: f64, budget: &AccuracySpec) -> Result<f64> {
        match *self {
            XTarget::BesselOverStruve { nu } => {
                let i = crate::eval::bessel_i(nu + 1.0, x, budget)?.value;
                Ok(i / struve_l(nu, x, budget)?.value)
            }
            XTarget::NormRatioTwoOrders { nu, mu } => {
                Ok(struve_norm(nu, x, budget)?.value / struve_norm(mu, x, budget)?.value)
            }
            XTarget::LogDeriv { nu } => {
                let lp = crate::eval::struve_l_prime(nu, x, budget)?.value;
                Ok(x * lp / struve_l(nu, x, budget)?.value)
            }
            XTarget::ClosedRatioHalf => {
                let top = crate::eval::struve_closed_form(0.5, x)?.value;
                let bot = crate::eval::struve_closed_form(-0.5, x)?.value;
                Ok(top / bot)
            }
        }
    }

    fn nu_label(&self) -> Option<f64> {
        match *self {
            XTarget::BesselOverStruve { nu }
            | XTarget::NormRatioTwoOrders { nu, .. }
            | XTarget::LogDeriv { nu } => Some(nu),
            XTarget::ClosedRatioHalf => Some(0.5),
        }
    }
}

/// Monotonicity of an x-target along an x axis.
pub fn check_monotone_x(
    target: XTarget,
    xs: &[f64],
    direction: Direction,
    budget: &AccuracySpec,
) -> Result<PropertyOutcome> {
    check_monotone_fn(
        &target.name(),
        target.nu_label(),
        |x| target.eval(x, budget),
        xs,
        direction,
    )
}

/// Functions of ν whose monotonicity the catalogue asserts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NuTarget {
    /// ν ↦ 𝓛_ν(x)
    NormStruve { x: f64 },
    /// ν ↦ L_{ν+1}(x)/L_ν(x)
    SuccessiveRatio { x: f64 },
    /// ν ↦ 2 L_{ν+1}(x)/(x L_ν(x))
    ScaledSuccessiveRatio { x: f64 },
}

impl NuTarget {
    fn name(&self) -> String {
        match self {
            NuTarget::NormStruve { x } => format!("norm_struve[x={x}]"),
            NuTarget::SuccessiveRatio { x } => format!("successive_ratio[x={x}]"),
            NuTarget::ScaledSuccessiveRatio { x } => format!("scaled_successive_ratio[x={x}]"),
        }
    }

    fn eval(&self, nu: f64, budget: &AccuracySpec) -> Result<f64> {
        match *self {
            NuTarget::NormStruve { x } => Ok(struve_norm(nu, x, budget)?.value),
            NuTarget::SuccessiveRatio { x } => {
                Ok(struve_l(nu + 1.0, x, budget)?.value / struve_l(nu, x, budget)?.value)
            }
            NuTarget::ScaledSuccessiveRatio { x } => {
                let r = struve_l(nu + 1.0, x, budget)?.value / struve_l(nu, x, budget)?.value;
                Ok(2.0 * r / x)
            }
        }
    }

    fn x_of(&self) -> f64 {
        match *self {
            NuTarget::NormStruve { x }
            | NuTarget::SuccessiveRatio { x }
            | NuTarget::ScaledSuccessiveRatio { x } => x,
        }
    }
}

/// Monotonicity of a ν-target along a ν axis.
pub fn check_monotone_nu(
    target: NuTarget,
    nus: &[f64],
    direction: Direction,
    budget: &AccuracySpec,
) -> Result<PropertyOutcome> {
    if nus.len() < 2 {
        return Err(Error::Config("nu axis needs at least 2 points".into()));
    }
    let values: Vec<f64> = nus
        .iter()
        .map(|&nu| target.eval(nu, budget))
        .collect::<Result<_>>()?;
    let mut worst = WorstPoint {
        nu: nus[0],
        x: target.x_of(),
        gap: f64::INFINITY,
    };
    let mut pass = true;
    for i in 0..values.len() - 1 {
        let diff = match direction {
            Direction::Increasing => values[i + 1] - values[i],
            Direction::Decreasing => values[i] - values[i + 1],
        };
        let gap = diff + FD_TOL * values[i].abs().max(values[i + 1].abs());
        if gap < worst.gap {
            worst = WorstPoint {
                nu: nus[i],
                x: target.x_of(),
                gap,
            };
        }
        if gap < 0.0 {
            pass = false;
        }
    }
    Ok(PropertyOutcome {
        name: target.name(),
        direction: direction.as_str().to_string(),
        pass,
        worst_point: worst,
    })
}

/// Largest ν-distance between pair members in midpoint checks.
const PAIR_SPAN: f64 = 4.0;

#[allow(clippy::too_many_arguments)]
fn midpoint_pairs(
    name: String,
    direction: &str,
    axis: &[f64],
    point_of: impl Fn(f64) -> (f64, f64),
    log_f: impl Fn(f64) -> Result<f64>,
    span: f64,
    // gap oriented so that nonnegative (up to tolerance) means pass
    orient: impl Fn(f64) -> f64,
    strict: bool,
) -> Result<PropertyOutcome> {
    let logs: Vec<f64> = axis.iter().map(|&t| log_f(t)).collect::<Result<_>>()?;
    let (nu0, x0) = point_of(axis[0]);
    let mut worst = WorstPoint {
        nu: nu0,
        x: x0,
        gap: f64::INFINITY,
    };
    let mut pass = true;
    for i in 0..axis.len() {
        for j in (i + 1)..axis.len() {
            if axis[j] - axis[i] > span {
                break;
            }
            let mid = 0.5 * (axis[i] + axis[j]);
            let log_mid = log_f(mid)?;
            // convexity: 2 ln f(mid) ≤ ln f_i + ln f_j ; orient flips for concavity
            let raw = logs[i] + logs[j] - 2.0 * log_mid;
            let gap = if strict {
                orient(raw)
            } else {
                orient(raw) + FD_TOL
            };
            if gap < worst.gap {
                let (nu, x) = point_of(axis[i]);
                worst = WorstPoint { nu, x, gap };
            }
            if (strict && gap <= 0.0 && axis[j] != axis[i]) || (!strict && gap < 0.0) {
                pass = false;
            }
        }
    }
    Ok(PropertyOutcome {
        name,
        direction: direction.to_string(),
        pass,
        worst_point: worst,
    })
}

/// Midpoint log-convexity of ν ↦ 𝓛_ν(x) over all grid pairs with
/// ν-distance up to 4.
pub fn check_logconvex_nu(x: f64, nus: &[f64], budget: &AccuracySpec) -> Result<PropertyOutcome> {
    midpoint_pairs(
        format!("norm_logconvex_nu[x={x}]"),
        "log-convex",
        nus,
        |nu| (nu, x),
        |nu| Ok(struve_norm(nu, x, budget)?.value.ln()),
        PAIR_SPAN,
        |raw| raw,
        false,
    )
}

/// Strict midpoint log-concavity of ν ↦ L_ν(x).
pub fn check_logconcave_nu(x: f64, nus: &[f64], budget: &AccuracySpec) -> Result<PropertyOutcome> {
    midpoint_pairs(
        format!("struve_logconcave_nu[x={x}]"),
        "log-concave",
        nus,
        |nu| (nu, x),
        |nu| Ok(struve_l(nu, x, budget)?.value.ln()),
        PAIR_SPAN,
        |raw| -raw,
        true,
    )
}

/// Midpoint log-convexity of x ↦ 1/√π + 2^ν Γ(ν+3/2) x^{−ν} L_{ν+1}(x)
/// over all pairs of the x axis.
pub fn check_logconvex_x(nu: f64, xs: &[f64], budget: &AccuracySpec) -> Result<PropertyOutcome> {
    let sqrt_pi_inv = 1.0 / std::f64::consts::PI.sqrt();
    midpoint_pairs(
        format!("shifted_logconvex_x[nu={nu}]"),
        "log-convex",
        xs,
        |x| (nu, x),
        |x| Ok((sqrt_pi_inv + next_shifted_series(nu, x, budget)?).ln()),
        f64::INFINITY,
        |raw| raw,
        false,
    )
}

/// Discrete Wright log-concavity of g(ν) = 2^{ν+1} x^{−ν−1} L_ν(x):
/// g(ν+1) g(ν+a) ≥ g(ν) g(ν+a+1) across the ν axis, for shift a > 0.
pub fn check_wright_logconcave(
    x: f64,
    a: f64,
    nus: &[f64],
    budget: &AccuracySpec,
) -> Result<PropertyOutcome> {
    if !(a > 0.0) {
        return Err(Error::Config(format!(
            "Wright shift must be positive, got {a}"
        )));
    }
    let log_g = |nu: f64| -> Result<f64> {
        let l = struve_l(nu, x, budget)?.value;
        Ok((nu + 1.0) * (2f64.ln() - x.ln()) + l.ln())
    };
    let mut worst = WorstPoint {
        nu: nus[0],
        x,
        gap: f64::INFINITY,
    };
    let mut pass = true;
    for &nu in nus {
        let lhs = log_g(nu + 1.0)? + log_g(nu + a)?;
        let rhs = log_g(nu)? + log_g(nu + a + 1.0)?;
        let gap = lhs - rhs + FD_TOL;
        if gap < worst.gap {
            worst = WorstPoint { nu, x, gap };
        }
        if gap < 0.0 {
            pass = false;
        }
    }
    Ok(PropertyOutcome {
        name: format!("wright_logconcave[x={x},a={a}]"),
        direction: "log-concave".to_string(),
        pass,
        worst_point: worst,
    })
}

fn merge_outcomes(name: &str, direction: &str, parts: Vec<PropertyOutcome>) -> PropertyOutcome {
    let mut pass = true;
    let mut worst = WorstPoint {
        nu: f64::NAN,
        x: f64::NAN,
        gap: f64::INFINITY,
    };
    for p in parts {
        pass &= p.pass;
        if p.worst_point.gap < worst.gap {
            worst = p.worst_point;
        }
    }
    PropertyOutcome {
        name: name.to_string(),
        direction: direction.to_string(),
        pass,
        worst_point: worst,
    }
}

/// The default property suite: one check per monotonicity/convexity claim,
/// sweeping representative parameters over the grid axes.
pub fn default_property_suite(
    grid: &GridSpec,
    budget: &AccuracySpec,
) -> Result<Vec<PropertyOutcome>> {
    let xs = grid.x_points();
    let nus = grid.nu_points();
    let probe_xs = [0.5, 1.0, 5.0, 20.0];
    let mut out = Vec::new();

    // a: I_{ν+1}/L_ν rises in x for ν ≥ −1/2 (constant at −1/2 exactly)
    let parts = [-0.5, 0.0, 1.0, 3.0, 6.0]
        .iter()
        .map(|&nu| {
            check_monotone_x(
                XTarget::BesselOverStruve { nu },
                &xs,
                Direction::Increasing,
                budget,
            )
        })
        .collect::<Result<Vec<_>>>()?;
    out.push(merge_outcomes(
        "1a_bessel_over_struve_increasing_x",
        "increasing",
        parts,
    ));

    // b: the same ratio falls in x on (−3/2, −1/2]
    let parts = [-1.4, -1.0, -0.75, -0.5]
        .iter()
        .map(|&nu| {
            check_monotone_x(
                XTarget::BesselOverStruve { nu },
                &xs,
                Direction::Decreasing,
                budget,
            )
        })
        .collect::<Result<Vec<_>>>()?;
    out.push(merge_outcomes(
        "1b_bessel_over_struve_decreasing_x",
        "decreasing",
        parts,
    ));

    // c: 𝓛_ν/𝓛_μ rises in x when μ ≥ ν (constant when μ = ν)
    let parts = [(0.0, 1.0), (-1.0, 2.0), (1.5, 3.5), (2.0, 2.0)]
        .iter()
        .map(|&(nu, mu)| {
            check_monotone_x(
                XTarget::NormRatioTwoOrders { nu, mu },
                &xs,
                Direction::Increasing,
                budget,
            )
        })
        .collect::<Result<Vec<_>>>()?;
    out.push(merge_outcomes(
        "1c_norm_ratio_increasing_x",
        "increasing",
        parts,
    ));

    // d: and falls when ν ≥ μ
    let parts = [(1.0, 0.0), (2.0, -1.0), (3.5, 1.5)]
        .iter()
        .map(|&(nu, mu)| {
            check_monotone_x(
                XTarget::NormRatioTwoOrders { nu, mu },
                &xs,
                Direction::Decreasing,
                budget,
            )
        })
        .collect::<Result<Vec<_>>>()?;
    out.push(merge_outcomes(
        "1d_norm_ratio_decreasing_x",
        "decreasing",
        parts,
    ));

    // e: ν ↦ 𝓛_ν(x) falls and is midpoint log-convex
    let mut parts = Vec::new();
    for x in probe_xs {
        parts.push(check_monotone_nu(
            NuTarget::NormStruve { x },
            &nus,
            Direction::Decreasing,
            budget,
        )?);
        parts.push(check_logconvex_nu(x, &nus, budget)?);
    }
    out.push(merge_outcomes(
        "1e_norm_decreasing_and_logconvex_nu",
        "decreasing+log-convex",
        parts,
    ));

    // f: ν ↦ L_{ν+1}/L_ν falls
    let parts = probe_xs
        .iter()
        .map(|&x| {
            check_monotone_nu(
                NuTarget::SuccessiveRatio { x },
                &nus,
                Direction::Decreasing,
                budget,
            )
        })
        .collect::<Result<Vec<_>>>()?;
    out.push(merge_outcomes(
        "1f_successive_ratio_decreasing_nu",
        "decreasing",
        parts,
    ));

    // g: x ↦ x L'_ν/L_ν rises for every ν > −3/2
    let parts = [-1.4, -0.5, 0.0, 2.0, 5.0]
        .iter()
        .map(|&nu| check_monotone_x(XTarget::LogDeriv { nu }, &xs, Direction::Increasing, budget))
        .collect::<Result<Vec<_>>>()?;
    out.push(merge_outcomes(
        "1g_log_deriv_increasing_x",
        "increasing",
        parts,
    ));

    // h: x ↦ 1/√π + 2^ν Γ(ν+3/2) x^{−ν} L_{ν+1}(x) is log-convex, ν ≥ −1/2
    let parts = [-0.5, 0.0, 1.5]
        .iter()
        .map(|&nu| check_logconvex_x(nu, &xs, budget))
        .collect::<Result<Vec<_>>>()?;
    out.push(merge_outcomes(
        "1h_shifted_logconvex_x",
        "log-convex",
        parts,
    ));

    // the closed-form ratio L_{1/2}/L_{−1/2} rises in x
    out.push(check_monotone_x(
        XTarget::ClosedRatioHalf,
        &xs,
        Direction::Increasing,
        budget,
    )?);

    // ν ↦ L_ν(x) is strictly log-concave
    let parts = [0.5, 1.0, 5.0]
        .iter()
        .map(|&x| check_logconcave_nu(x, &nus, budget))
        .collect::<Result<Vec<_>>>()?;
    out.push(merge_outcomes(
        "r7_struve_logconcave_nu",
        "log-concave",
        parts,
    ));

    // discrete Wright log-concavity of 2^{ν+1} x^{−ν−1} L_ν(x)
    let mut parts = Vec::new();
    for x in [1.0, 5.0] {
        for a in [0.5, 1.0, 2.0] {
            parts.push(check_wright_logconcave(x, a, &nus, budget)?);
        }
    }
    out.push(merge_outcomes(
        "r7_wright_logconcave_nu",
        "log-concave",
        parts,
    ));

    // ν ↦ 2 L_{ν+1}/(x L_ν) is strictly decreasing
    let parts = probe_xs
        .iter()
        .map(|&x| {
            check_monotone_nu(
                NuTarget::ScaledSuccessiveRatio { x },
                &nus,
                Direction::Decreasing,
                budget,
            )
        })
        .collect::<Result<Vec<_>>>()?;
    out.push(merge_outcomes(
        "r7_scaled_ratio_decreasing_nu",
        "decreasing",
        parts,
    ));

    Ok(out)
}

// ---------------------------------------------------------------------------
// full verification runs and reports
// ---------------------------------------------------------------------------

/// What to run and how.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyConfig {
    /// Case names to sweep; `None` runs the whole catalogue.
    pub cases: Option<Vec<String>>,
    /// Cases whose relation is deliberately inverted (negative control).
    pub flip: Vec<String>,
    pub grid: GridSpec,
    /// Whether the property suite runs alongside the inequality sweeps.
    pub properties: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            cases: None,
            flip: Vec::new(),
            grid: GridSpec::default(),
            properties: true,
        }
    }
}

/// A violating record, in report form.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ViolationRecord {
    pub nu: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<f64>,
    pub x: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y: Option<f64>,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
}

/// Per-case summary in the report.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CaseSummary {
    pub name: String,
    pub citation: String,
    pub points: usize,
    /// Smallest directed margin over swept (non-equality) points; negative
    /// means a violation. Null when the grid clips the case away entirely.
    pub min_margin: Option<f64>,
    pub violations: Vec<ViolationRecord>,
}

/// The full report. Identical configs produce byte-identical JSON except
/// for `wall_time`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepReport {
    pub tool_version: String,
    pub config: VerifyConfig,
    pub cases: Vec<CaseSummary>,
    pub properties: Vec<PropertyOutcome>,
    pub eval_errors: Vec<String>,
    pub pass: bool,
    pub wall_time: f64,
}

/// A finished run: the report plus every individual record (for CSV export).
#[derive(Debug, Clone)]
pub struct VerificationRun {
    pub report: SweepReport,
    pub records: Vec<InequalityRecord>,
}

fn directed_margin(rec: &InequalityRecord) -> f64 {
    match rec.expected {
        Expected::Forward => rec.margin,
        Expected::Reversed => -rec.margin,
        Expected::Equality => {
            let scale = rec.lhs.abs().max(rec.rhs.abs());
            crate::bounds::EQUALITY_TOL * scale - rec.margin.abs()
        }
    }
}

fn flipped_satisfied(rec: &InequalityRecord) -> bool {
    match rec.expected {
        Expected::Forward => rec.margin < 0.0,
        Expected::Reversed => rec.margin > 0.0,
        Expected::Equality => rec.satisfied,
    }
}

/// Sweeps the selected cases (plus their equality points) and, optionally,
/// the property suite. Violations are collected per case; evaluator
/// failures are collected but do not abort the run.
pub fn run_verification(config: &VerifyConfig) -> Result<VerificationRun> {
    let started = Instant::now();
    config.grid.validate()?;
    let budget = AccuracySpec::default();

    let all = registry();
    let selected: Vec<&InequalityCase> = match &config.cases {
        None => all.iter().collect(),
        Some(names) => {
            let mut picked = Vec::new();
            for n in names {
                let case = all
                    .iter()
                    .find(|c| c.name == n.as_str())
                    .ok_or_else(|| Error::Config(format!("unknown case name: {n}")))?;
                picked.push(case);
            }
            picked
        }
    };
    for f in &config.flip {
        if !all.iter().any(|c| c.name == f.as_str()) {
            return Err(Error::Config(format!(
                "unknown case name in flip list: {f}"
            )));
        }
    }

    let mut summaries = Vec::new();
    let mut all_records = Vec::new();
    let mut eval_errors = Vec::new();
    for case in &selected {
        let flipped = config.flip.iter().any(|f| f == case.name);
        let mut sweep = sweep_case(case, &config.grid, &budget);
        let eq = equality_sweep(case, &config.grid, &budget);
        sweep.records.extend(eq.records);
        sweep.errors.extend(eq.errors);

        let mut min_margin: Option<f64> = None;
        let mut violations = Vec::new();
        for rec in &sweep.records {
            if rec.expected != Expected::Equality {
                let dm = directed_margin(rec);
                min_margin = Some(min_margin.map_or(dm, |m: f64| m.min(dm)));
            }
            let ok = if flipped {
                flipped_satisfied(rec)
            } else {
                rec.satisfied
            };
            if !ok {
                violations.push(ViolationRecord {
                    nu: rec.nu,
                    mu: rec.mu,
                    x: rec.x,
                    y: rec.y,
                    lhs: rec.lhs,
                    rhs: rec.rhs,
                    margin: rec.margin,
                });
            }
        }
        for e in &sweep.errors {
            eval_errors.push(format!(
                "{}: nu={} x={}: {}",
                case.name, e.point.nu, e.point.x, e.message
            ));
        }
        summaries.push(CaseSummary {
            name: case.name.to_string(),
            citation: case.citation.to_string(),
            points: sweep.records.len(),
            min_margin,
            violations,
        });
        all_records.extend(sweep.records);
    }

    let properties = if config.properties {
        default_property_suite(&config.grid, &budget)?
    } else {
        Vec::new()
    };

    let pass = summaries.iter().all(|s| s.violations.is_empty())
        && properties.iter().all(|p| p.pass)
        && eval_errors.is_empty();

    Ok(VerificationRun {
        report: SweepReport {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            config: config.clone(),
            cases: summaries,
            properties,
            eval_errors,
            pass,
            wall_time: started.elapsed().as_secs_f64(),
        },
        records: all_records,
    })
}

/// Renders records as CSV with full round-trip precision, one row each.
pub fn records_to_csv(records: &[InequalityRecord]) -> String {
    let mut out = String::from("case,nu,mu,x,y,lhs,rhs,margin,satisfied\n");
    for r in records {
        let opt = |v: Option<f64>| v.map(|t| t.to_string()).unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            r.case,
            r.nu,
            opt(r.mu),
            r.x,
            opt(r.y),
            r.lhs,
            r.rhs,
            r.margin,
            r.satisfied
        ));
    }
    out
}

/// Renders a short human-readable summary of a report.
pub fn render_summary(report: &SweepReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "verification report (tool {}): {}\n",
        report.tool_version,
        if report.pass { "PASS" } else { "FAIL" }
    ));
    out.push_str(&format!(
        "grid: nu [{}, {}] x{}, x [{}, {}] x{} ({:?})\n",
        report.config.grid.nu_min,
        report.config.grid.nu_max,
        report.config.grid.nu_steps,
        report.config.grid.x_min,
        report.config.grid.x_max,
        report.config.grid.x_steps,
        report.config.grid.x_scale,
    ));
    out.push_str(&format!("cases ({}):\n", report.cases.len()));
    for c in &report.cases {
        out.push_str(&format!(
            "  {:<22} {:<12} points {:>6}  min margin {:>13}  violations {}\n",
            c.name,
            c.citation,
            c.points,
            c.min_margin
                .map(|m| format!("{m:.3e}"))
                .unwrap_or_else(|| "-".into()),
            c.violations.len()
        ));
    }
    if !report.properties.is_empty() {
        out.push_str(&format!("properties ({}):\n", report.properties.len()));
        for p in &report.properties {
            out.push_str(&format!(
                "  {:<40} {:<22} {}  (worst gap {:.3e} at nu={:.4}, x={:.4})\n",
                p.name,
                p.direction,
                if p.pass { "pass" } else { "FAIL" },
                p.worst_point.gap,
                p.worst_point.nu,
                p.worst_point.x
            ));
        }
    }
    if !report.eval_errors.is_empty() {
        out.push_str(&format!(
            "evaluator errors ({}):\n",
            report.eval_errors.len()
        ));
        for e in report.eval_errors.iter().take(20) {
            out.push_str(&format!("  {e}\n"));
        }
    }
    out
}
