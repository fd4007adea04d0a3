//! The executable inequality catalogue.
//!
//! Every two-sided bound, ratio bound and Turán-type inequality handled by
//! this crate lives here as a named case carrying its own applicability
//! domain, strictness, reversal range and equality points. The citation tags
//! refer to the numbered catalogue in the guide (see the book's inequality
//! chapter); `catalogue()` exports the same data machine-readably.
//!
//! Strict inequalities are verified with margin > 0 at exact floating
//! evaluation. No tolerance is granted anywhere except within
//! 1e−10·scale of a declared equality point.

use crate::error::{Error, Result};
use crate::eval::{
    bessel_i, coshm1, phi_l32, struve_inhom, struve_l, struve_l_continued, struve_l_prime,
    struve_norm, AccuracySpec,
};
use crate::gamma::lgamma_raw;
use crate::grid::GridSpec;
use crate::relations::{log_deriv_slope, turan_delta};
use serde::Serialize;

const HALF_LN_PI: f64 = 0.572_364_942_924_700_1;

/// Tolerance factor at declared equality points.
pub const EQUALITY_TOL: f64 = 1e-10;

/// Exclusion margin around domain boundaries, reversal edges and equality
/// orders when clipping sweep grids.
pub const BOUNDARY_EPS: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    StrictLess,
    LessOrEqual,
}

/// Where and how a case applies.
#[derive(Debug, Clone, Serialize)]
pub struct Applicability {
    /// Orders where the stated direction holds (upper end may be infinite).
    pub nu_range: (f64, f64),
    pub needs_second_order: bool,
    pub needs_second_point: bool,
    /// Orders where the inequality flips.
    pub reversal_nu_range: Option<(f64, f64)>,
    /// Orders at which equality holds exactly.
    pub equality_nus: &'static [f64],
}

/// Evaluation point: order ν, argument x, and the optional second order μ
/// or second argument y that two-order and two-point cases need.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CasePoint {
    pub nu: f64,
    pub mu: Option<f64>,
    pub x: f64,
    pub y: Option<f64>,
}

impl CasePoint {
    pub fn simple(nu: f64, x: f64) -> Self {
        Self {
            nu,
            mu: None,
            x,
            y: None,
        }
    }

    pub fn with_mu(nu: f64, mu: f64, x: f64) -> Self {
        Self {
            nu,
            mu: Some(mu),
            x,
            y: None,
        }
    }

    pub fn with_y(nu: f64, x: f64, y: f64) -> Self {
        Self {
            nu,
            mu: None,
            x,
            y: Some(y),
        }
    }
}

/// Which direction the catalogue expects at a given point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Expected {
    Forward,
    Reversed,
    Equality,
}

/// Outcome of one case at one point. All cases are normalized so the
/// forward claim reads lhs < rhs (or ≤); `margin` is rhs − lhs.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct InequalityRecord {
    pub case: &'static str,
    pub nu: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<f64>,
    pub x: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y: Option<f64>,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub expected: Expected,
    pub satisfied: bool,
}

type CaseEval = fn(&CasePoint, &AccuracySpec) -> Result<(f64, f64)>;

/// A named, citable inequality with its domain data and evaluator.
#[derive(Clone)]
pub struct InequalityCase {
    pub name: &'static str,
    pub citation: &'static str,
    pub applicability: Applicability,
    pub relation: Relation,
    eval: CaseEval,
}

impl InequalityCase {
    /// Direction expected at ν (and μ for two-order cases).
    pub fn expected_direction(&self, point: &CasePoint) -> Result<Expected> {
        let nu = point.nu;
        if self.applicability.needs_second_order {
            let mu = point.mu.ok_or_else(|| {
                Error::Domain(format!("case {} needs a second order mu", self.name))
            })?;
            let lo = self.applicability.nu_range.0;
            if !(nu > lo && mu > lo) {
                return Err(Error::Domain(format!(
                    "case {}: both orders must exceed {lo}",
                    self.name
                )));
            }
            return Ok(if (mu - nu).abs() <= 1e-9 {
                Expected::Equality
            } else if mu > nu {
                Expected::Forward
            } else {
                Expected::Reversed
            });
        }
        for &e in self.applicability.equality_nus {
            if (nu - e).abs() <= 1e-9 {
                return Ok(Expected::Equality);
            }
        }
        if let Some((lo, hi)) = self.applicability.reversal_nu_range {
            if nu > lo && nu < hi {
                return Ok(Expected::Reversed);
            }
        }
        let (lo, hi) = self.applicability.nu_range;
        if nu > lo - 1e-9 && nu < hi {
            return Ok(Expected::Forward);
        }
        Err(Error::Domain(format!(
            "case {}: order {nu} outside the applicability domain",
            self.name
        )))
    }

    /// Evaluates the case at one point.
    pub fn evaluate(&self, point: &CasePoint, budget: &AccuracySpec) -> Result<InequalityRecord> {
        if self.applicability.needs_second_point {
            match point.y {
                Some(y) if point.x < y => {}
                Some(y) => {
                    return Err(Error::Domain(format!(
                        "case {}: needs 0 < x < y, got x = {}, y = {y}",
                        self.name, point.x
                    )))
                }
                None => {
                    return Err(Error::Domain(format!(
                        "case {} needs a second argument y",
                        self.name
                    )))
                }
            }
        }
        let expected = self.expected_direction(point)?;
        let (lhs, rhs) = (self.eval)(point, budget)?;
        if !lhs.is_finite() || !rhs.is_finite() {
            return Err(Error::Overflow("inequality side evaluation"));
        }
        let margin = rhs - lhs;
        let scale = lhs.abs().max(rhs.abs());
        let satisfied = match (expected, self.relation) {
            (Expected::Forward, Relation::StrictLess) => margin > 0.0,
            (Expected::Forward, Relation::LessOrEqual) => margin >= 0.0,
            (Expected::Reversed, Relation::StrictLess) => margin < 0.0,
            (Expected::Reversed, Relation::LessOrEqual) => margin <= 0.0,
            (Expected::Equality, _) => margin.abs() <= EQUALITY_TOL * scale,
        };
        Ok(InequalityRecord {
            case: self.name,
            nu: point.nu,
            mu: point.mu,
            x: point.x,
            y: point.y,
            lhs,
            rhs,
            margin,
            expected,
            satisfied,
        })
    }

    /// Boundary orders that sweeps must stay `BOUNDARY_EPS` away from.
    fn boundary_nus(&self) -> Vec<f64> {
        let mut b = vec![self.applicability.nu_range.0];
        if self.applicability.nu_range.1.is_finite() {
            b.push(self.applicability.nu_range.1);
        }
        if let Some((lo, hi)) = self.applicability.reversal_nu_range {
            b.push(lo);
            b.push(hi);
        }
        b.extend_from_slice(self.applicability.equality_nus);
        b
    }

    /// True when ν is sweepable: inside forward or reversal territory and
    /// clear of every boundary by `BOUNDARY_EPS`.
    pub fn sweepable(&self, nu: f64) -> bool {
        if self
            .boundary_nus()
            .iter()
            .any(|b| (nu - b).abs() < BOUNDARY_EPS)
        {
            return false;
        }
        let p = CasePoint {
            nu,
            mu: self.applicability.needs_second_order.then_some(nu + 1.0),
            x: 1.0,
            y: None,
        };
        matches!(
            self.expected_direction(&p),
            Ok(Expected::Forward) | Ok(Expected::Reversed)
        )
    }
}

// ---------------------------------------------------------------------------
// case evaluators (lhs, rhs) with the forward claim lhs < rhs
// ---------------------------------------------------------------------------

fn ev_bessel_upper(p: &CasePoint, b: &AccuracySpec) -> Result<(f64, f64)> {
    let l = struve_l(p.nu, p.x, b)?.value;
    let i = bessel_i(p.nu + 1.0, p.x, b)?.value;
    // 2Γ(ν+2)/(√π Γ(ν+3/2))
    let c = (2f64.ln() + lgamma_raw(p.nu + 2.0) - HALF_LN_PI - lgamma_raw(p.nu + 1.5)).exp();
    Ok((l, c * i))
}

fn ev_norm_order(p: &CasePoint, b: &AccuracySpec) -> Result<(f64, f64)> {
    let mu = p.mu.expect("validated");
    Ok((
        struve_norm(mu, p.x, b)?.value,
        struve_norm(p.nu, p.x, b)?.value,
    ))
}

fn ev_turan_lower(p: &CasePoint, b: &AccuracySpec) -> Result<(f64, f64)> {
    Ok((0.0, turan_delta(p.nu, p.x, b)?))
}

fn ev_turan_upper(p: &CasePoint, b: &AccuracySpec) -> Result<(f64, f64)> {
    let l = struve_l(p.nu, p.x, b)?.value;
    Ok((turan_delta(p.nu, p.x, b)?, l * l / (p.nu + 1.5)))
}

fn ev_turan_sharp_lower(p: &CasePoint, b: &AccuracySpec) -> Result<(f64, f64)> {
    // (π/4)(x/2)^{2ν+2}/((ν+3/2)[Γ(ν+3/2)]²)
    let lower = ((std::f64::consts::PI / 4.0).ln() + (2.0 * p.nu + 2.0) * (0.5 * p.x).ln()
        - (p.nu + 1.5).ln()
        - 2.0 * lgamma_raw(p.nu + 1.5))
    .exp();
    Ok((lower, turan_delta(p.nu, p.x, b)?))
}

fn ev_ratio_cosh(p: &CasePoint, b: &AccuracySpec) -> Result<(f64, f64)> {
    let l = struve_l(p.nu, p.x, b)?.value;
    let l_next = struve_l(p.nu + 1.0, p.x, b)?.value;
    Ok((l_next / l, coshm1(p.x) / p.x.sinh()))
}

fn ev_log_deriv_positive(p: &CasePoint, b: &AccuracySpec) -> Result<(f64, f64)> {
    Ok((0.0, log_deriv_slope(p.nu, p.x, b)?))
}

fn ev_ratio_l32(p: &CasePoint, b: &AccuracySpec) -> Result<(f64, f64)> {
    let l = struve_l(p.nu, p.x, b)?.value;
    let l_next = struve_l(p.nu + 1.0, p.x, b)?.value;
    Ok((l_next / l, phi_l32(p.x) / (p.x * coshm1(p.x))))
}

fn logderiv(p: &CasePoint, b: &AccuracySpec) -> Result<f64> {
    Ok(struve_l_prime(p.nu, p.x, b)?.value / struve_l(p.nu, p.x, b)?.value)
}

fn ev_logderiv_linear(p: &CasePoint, b: &AccuracySpec) -> Result<(f64, f64)> {
    Ok((1.0 - p.nu / p.x, logderiv(p, b)?))
}

fn ev_logderiv_cosh(p: &CasePoint, b: &AccuracySpec) -> Result<(f64, f64)> {
    Ok((p.x.sinh() / coshm1(p.x) - p.nu / p.x, logderiv(p, b)?))
}

fn ev_logderiv_x2(p: &CasePoint, b: &AccuracySpec) -> Result<(f64, f64)> {
    Ok((
        p.x * coshm1(p.x) / phi_l32(p.x) - p.nu / p.x,
        logderiv(p, b)?,
    ))
}

fn two_point_lhs(p: &CasePoint, b: &AccuracySpec) -> Result<f64> {
    let y = p.y.expect("validated");
    Ok(struve_l(p.nu, p.x, b)?.value / struve_l(p.nu, y, b)?.value)
}

fn ev_two_point_exp(p: &CasePoint, b: &AccuracySpec) -> Result<(f64, f64)> {
    let y = p.y.expect("validated");
    Ok((two_point_lhs(p, b)?, (p.x - y).exp() * (y / p.x).powf(p.nu)))
}

fn ev_two_point_cosh(p: &CasePoint, b: &AccuracySpec) -> Result<(f64, f64)> {
    let y = p.y.expect("validated");
    Ok((
        two_point_lhs(p, b)?,
        (coshm1(p.x) / coshm1(y)) * (y / p.x).powf(p.nu),
    ))
}

fn ev_two_point_x2(p: &CasePoint, b: &AccuracySpec) -> Result<(f64, f64)> {
    let y = p.y.expect("validated");
    Ok((
        two_point_lhs(p, b)?,
        (phi_l32(p.x) / phi_l32(y)) * (y / p.x).powf(p.nu),
    ))
}

fn ev_two_point_power(p: &CasePoint, b: &AccuracySpec) -> Result<(f64, f64)> {
    let y = p.y.expect("validated");
    Ok((two_point_lhs(p, b)?, (p.x / y).powf(p.nu + 1.0)))
}

fn ev_l0_bound(p: &CasePoint, b: &AccuracySpec) -> Result<(f64, f64)> {
    let l = struve_l(p.nu, p.x, b)?.value;
    let l0 = struve_l(0.0, p.x, b)?.value;
    // x^ν/(2^ν Γ(ν+1)) = (x/2)^ν/Γ(ν+1)
    let factor = (p.nu * (0.5 * p.x).ln() - lgamma_raw(p.nu + 1.0)).exp();
    Ok((l, l0 * factor))
}

fn ev_logderiv_lower(p: &CasePoint, b: &AccuracySpec) -> Result<(f64, f64)> {
    Ok((p.nu + 1.0, p.x * logderiv(p, b)?))
}

fn ev_ratio_prev_lower(p: &CasePoint, b: &AccuracySpec) -> Result<(f64, f64)> {
    let l = struve_l(p.nu, p.x, b)?.value;
    let l_prev = struve_l_continued(p.nu - 1.0, p.x, b)?.value;
    Ok(((2.0 * p.nu + 1.0) / p.x, l_prev / l))
}

fn ev_upper_bessel_exp(p: &CasePoint, b: &AccuracySpec) -> Result<(f64, f64)> {
    let l = struve_l(p.nu, p.x, b)?.value;
    // x^{ν+1} e^{x²/(4(ν+2))}/(√π 2^ν Γ(ν+3/2))
    let rhs = ((p.nu + 1.0) * p.x.ln() + p.x * p.x / (4.0 * (p.nu + 2.0))
        - HALF_LN_PI
        - p.nu * 2f64.ln()
        - lgamma_raw(p.nu + 1.5))
    .exp();
    Ok((l, rhs))
}

fn ev_upper_l0_exp(p: &CasePoint, b: &AccuracySpec) -> Result<(f64, f64)> {
    let l = struve_l(p.nu, p.x, b)?.value;
    // x^{ν+1} e^{x²/8}/(π 2^{ν−1} Γ(ν+1))
    let rhs = ((p.nu + 1.0) * p.x.ln() + p.x * p.x / 8.0
        - std::f64::consts::PI.ln()
        - (p.nu - 1.0) * 2f64.ln()
        - lgamma_raw(p.nu + 1.0))
    .exp();
    Ok((l, rhs))
}

fn ev_upper_sinh(p: &CasePoint, b: &AccuracySpec) -> Result<(f64, f64)> {
    let l = struve_l(p.nu, p.x, b)?.value;
    Ok((l, p.x.sinh() * struve_inhom(p.nu, p.x)))
}

fn ev_lower_sinh(p: &CasePoint, b: &AccuracySpec) -> Result<(f64, f64)> {
    let l = struve_l(p.nu, p.x, b)?.value;
    let n = 2.0 * p.nu + 3.0;
    Ok((n * (p.x / n).sinh() * struve_inhom(p.nu, p.x), l))
}

// ---------------------------------------------------------------------------
// the catalogue
// ---------------------------------------------------------------------------

const INF: f64 = f64::INFINITY;

fn app(
    nu_range: (f64, f64),
    reversal: Option<(f64, f64)>,
    equality: &'static [f64],
) -> Applicability {
    Applicability {
        nu_range,
        needs_second_order: false,
        needs_second_point: false,
        reversal_nu_range: reversal,
        equality_nus: equality,
    }
}

fn app2pt(
    nu_range: (f64, f64),
    reversal: Option<(f64, f64)>,
    equality: &'static [f64],
) -> Applicability {
    Applicability {
        needs_second_point: true,
        ..app(nu_range, reversal, equality)
    }
}

/// Every case in catalogue order. Construction is cheap; the registry is a
/// value, not a global.
pub fn registry() -> Vec<InequalityCase> {
    use Relation::{LessOrEqual, StrictLess};
    vec![
        InequalityCase {
            name: "bessel_upper",
            citation: "(2.1)",
            applicability: app((-0.5, INF), Some((-1.5, -0.5)), &[-0.5]),
            relation: StrictLess,
            eval: ev_bessel_upper,
        },
        InequalityCase {
            name: "norm_order_monotone",
            citation: "(2.2)",
            applicability: Applicability {
                nu_range: (-1.5, INF),
                needs_second_order: true,
                needs_second_point: false,
                reversal_nu_range: None,
                equality_nus: &[],
            },
            relation: StrictLess,
            eval: ev_norm_order,
        },
        InequalityCase {
            name: "turan_lower",
            citation: "(2.3) lower",
            applicability: app((-1.5, INF), None, &[]),
            relation: StrictLess,
            eval: ev_turan_lower,
        },
        InequalityCase {
            name: "turan_upper",
            citation: "(2.3) upper",
            applicability: app((-1.5, INF), None, &[]),
            relation: StrictLess,
            eval: ev_turan_upper,
        },
        InequalityCase {
            name: "ratio_cosh",
            citation: "(2.4)",
            applicability: app((-0.5, INF), Some((-1.5, -0.5)), &[-0.5]),
            relation: StrictLess,
            eval: ev_ratio_cosh,
        },
        InequalityCase {
            name: "log_deriv_positive",
            citation: "(2.5)",
            applicability: app((-1.5, INF), None, &[]),
            relation: StrictLess,
            eval: ev_log_deriv_positive,
        },
        InequalityCase {
            name: "ratio_l32",
            citation: "(3.1)",
            applicability: app((0.5, INF), Some((-1.5, 0.5)), &[0.5]),
            relation: StrictLess,
            eval: ev_ratio_l32,
        },
        InequalityCase {
            name: "logderiv_linear",
            citation: "(3.4)",
            applicability: app((0.5, INF), None, &[]),
            relation: StrictLess,
            eval: ev_logderiv_linear,
        },
        InequalityCase {
            name: "two_point_exp",
            citation: "(3.5)",
            applicability: app2pt((0.5, INF), None, &[]),
            relation: StrictLess,
            eval: ev_two_point_exp,
        },
        InequalityCase {
            name: "logderiv_cosh",
            citation: "(3.6a)",
            applicability: app((0.5, INF), Some((-0.5, 0.5)), &[0.5]),
            relation: LessOrEqual,
            eval: ev_logderiv_cosh,
        },
        InequalityCase {
            name: "two_point_cosh",
            citation: "(3.6)",
            applicability: app2pt((0.5, INF), Some((-0.5, 0.5)), &[0.5]),
            relation: LessOrEqual,
            eval: ev_two_point_cosh,
        },
        InequalityCase {
            name: "logderiv_x2",
            citation: "(3.7)",
            applicability: app((1.5, INF), Some((-0.5, 1.5)), &[1.5]),
            relation: LessOrEqual,
            eval: ev_logderiv_x2,
        },
        InequalityCase {
            name: "two_point_x2",
            citation: "(3.8)",
            applicability: app2pt((1.5, INF), Some((-0.5, 1.5)), &[1.5]),
            relation: LessOrEqual,
            eval: ev_two_point_x2,
        },
        InequalityCase {
            name: "l0_bound",
            citation: "(3.9)",
            applicability: app((0.0, INF), Some((-1.0, 0.0)), &[0.0]),
            relation: LessOrEqual,
            eval: ev_l0_bound,
        },
        InequalityCase {
            name: "logderiv_lower",
            citation: "(R4a)",
            applicability: app((-1.5, INF), None, &[]),
            relation: StrictLess,
            eval: ev_logderiv_lower,
        },
        InequalityCase {
            name: "ratio_prev_lower",
            citation: "(R4b)",
            applicability: app((-1.5, INF), None, &[]),
            relation: StrictLess,
            eval: ev_ratio_prev_lower,
        },
        InequalityCase {
            name: "two_point_power",
            citation: "(R4c)",
            applicability: app2pt((-1.5, INF), None, &[]),
            relation: StrictLess,
            eval: ev_two_point_power,
        },
        InequalityCase {
            name: "turan_sharp_lower",
            citation: "(R7)",
            applicability: app((-1.5, INF), None, &[]),
            relation: StrictLess,
            eval: ev_turan_sharp_lower,
        },
        InequalityCase {
            name: "upper_bessel_exp",
            citation: "(R6a)",
            applicability: app((-0.5, INF), None, &[]),
            relation: StrictLess,
            eval: ev_upper_bessel_exp,
        },
        InequalityCase {
            name: "upper_l0_exp",
            citation: "(R6b)",
            applicability: app((0.0, INF), None, &[]),
            relation: StrictLess,
            eval: ev_upper_l0_exp,
        },
        InequalityCase {
            name: "upper_sinh",
            citation: "(R6c)",
            applicability: app((-0.5, INF), Some((-1.5, -0.5)), &[-0.5]),
            relation: StrictLess,
            eval: ev_upper_sinh,
        },
        InequalityCase {
            name: "lower_sinh",
            citation: "(R6d)",
            applicability: app((-1.0, INF), None, &[]),
            relation: StrictLess,
            eval: ev_lower_sinh,
        },
    ]
}

/// Looks a case up by name.
pub fn find_case(name: &str) -> Result<InequalityCase> {
    registry()
        .into_iter()
        .find(|c| c.name == name)
        .ok_or_else(|| Error::Config(format!("unknown case name: {name}")))
}

/// Serializable case metadata for documentation generation.
#[derive(Debug, Clone, Serialize)]
pub struct CaseInfo {
    pub name: &'static str,
    pub citation: &'static str,
    pub relation: Relation,
    pub nu_min: f64,
    pub nu_max: f64,
    pub needs_second_order: bool,
    pub needs_second_point: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reversal_nu_range: Option<(f64, f64)>,
    pub equality_nus: Vec<f64>,
}

/// The whole catalogue as metadata rows.
pub fn catalogue() -> Vec<CaseInfo> {
    registry()
        .iter()
        .map(|c| CaseInfo {
            name: c.name,
            citation: c.citation,
            relation: c.relation,
            nu_min: c.applicability.nu_range.0,
            nu_max: c.applicability.nu_range.1,
            needs_second_order: c.applicability.needs_second_order,
            needs_second_point: c.applicability.needs_second_point,
            reversal_nu_range: c.applicability.reversal_nu_range,
            equality_nus: c.applicability.equality_nus.to_vec(),
        })
        .collect()
}

// ---------------------------------------------------------------------------
// per-case entry points
// ---------------------------------------------------------------------------

fn eval_named(name: &str, point: CasePoint, budget: &AccuracySpec) -> Result<InequalityRecord> {
    find_case(name)?.evaluate(&point, budget)
}

pub fn case_bessel_upper(nu: f64, x: f64, budget: &AccuracySpec) -> Result<InequalityRecord> {
    eval_named("bessel_upper", CasePoint::simple(nu, x), budget)
}

pub fn case_norm_monotone_nu(
    nu: f64,
    mu: f64,
    x: f64,
    budget: &AccuracySpec,
) -> Result<InequalityRecord> {
    eval_named("norm_order_monotone", CasePoint::with_mu(nu, mu, x), budget)
}

/// The full Turán chain at one point: sharpened lower bound, positivity of
/// the determinant, and the upper bound, in that order.
pub fn case_turan(nu: f64, x: f64, budget: &AccuracySpec) -> Result<Vec<InequalityRecord>> {
    Ok(vec![
        eval_named("turan_sharp_lower", CasePoint::simple(nu, x), budget)?,
        eval_named("turan_lower", CasePoint::simple(nu, x), budget)?,
        eval_named("turan_upper", CasePoint::simple(nu, x), budget)?,
    ])
}

pub fn case_ratio_cosh(nu: f64, x: f64, budget: &AccuracySpec) -> Result<InequalityRecord> {
    eval_named("ratio_cosh", CasePoint::simple(nu, x), budget)
}

pub fn case_log_deriv_positive(nu: f64, x: f64, budget: &AccuracySpec) -> Result<InequalityRecord> {
    eval_named("log_deriv_positive", CasePoint::simple(nu, x), budget)
}

pub fn case_ratio_l32(nu: f64, x: f64, budget: &AccuracySpec) -> Result<InequalityRecord> {
    eval_named("ratio_l32", CasePoint::simple(nu, x), budget)
}

/// Log-derivative lower bounds, weakest to sharpest.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LogDerivBound {
    Linear,
    Cosh,
    X2,
}

pub fn case_logderiv_lower_family(
    variant: LogDerivBound,
    nu: f64,
    t: f64,
    budget: &AccuracySpec,
) -> Result<InequalityRecord> {
    let name = match variant {
        LogDerivBound::Linear => "logderiv_linear",
        LogDerivBound::Cosh => "logderiv_cosh",
        LogDerivBound::X2 => "logderiv_x2",
    };
    eval_named(name, CasePoint::simple(nu, t), budget)
}

/// Two-point ratio bounds for L_ν(x)/L_ν(y) with 0 < x < y.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwoPointBound {
    Exp,
    Cosh,
    X2,
    Power,
}

pub fn case_two_point_ratio_family(
    variant: TwoPointBound,
    nu: f64,
    x: f64,
    y: f64,
    budget: &AccuracySpec,
) -> Result<InequalityRecord> {
    let name = match variant {
        TwoPointBound::Exp => "two_point_exp",
        TwoPointBound::Cosh => "two_point_cosh",
        TwoPointBound::X2 => "two_point_x2",
        TwoPointBound::Power => "two_point_power",
    };
    eval_named(name, CasePoint::with_y(nu, x, y), budget)
}

/// Both low-order ratio bounds: x L'_ν/L_ν > ν+1 and L_{ν−1}/L_ν > (2ν+1)/x.
pub fn case_lowratio_bound(
    nu: f64,
    x: f64,
    budget: &AccuracySpec,
) -> Result<(InequalityRecord, InequalityRecord)> {
    Ok((
        eval_named("logderiv_lower", CasePoint::simple(nu, x), budget)?,
        eval_named("ratio_prev_lower", CasePoint::simple(nu, x), budget)?,
    ))
}

pub fn case_l0_bound(nu: f64, x: f64, budget: &AccuracySpec) -> Result<InequalityRecord> {
    eval_named("l0_bound", CasePoint::simple(nu, x), budget)
}

/// Elementary upper bounds on L_ν.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpUpperBound {
    BesselExp,
    L0Exp,
    Sinh,
}

pub fn case_exp_upper_family(
    variant: ExpUpperBound,
    nu: f64,
    x: f64,
    budget: &AccuracySpec,
) -> Result<InequalityRecord> {
    let name = match variant {
        ExpUpperBound::BesselExp => "upper_bessel_exp",
        ExpUpperBound::L0Exp => "upper_l0_exp",
        ExpUpperBound::Sinh => "upper_sinh",
    };
    eval_named(name, CasePoint::simple(nu, x), budget)
}

pub fn case_sinh_lower(nu: f64, x: f64, budget: &AccuracySpec) -> Result<InequalityRecord> {
    eval_named("lower_sinh", CasePoint::simple(nu, x), budget)
}

// ---------------------------------------------------------------------------
// sweeps
// ---------------------------------------------------------------------------

/// Point that failed to evaluate during a sweep, with the reason.
#[derive(Debug, Clone, Serialize)]
pub struct SweepError {
    pub point: CasePoint,
    pub message: String,
}

/// All records of one case over one grid.
#[derive(Debug, Clone, Serialize)]
pub struct CaseSweep {
    pub case: &'static str,
    pub records: Vec<InequalityRecord>,
    pub errors: Vec<SweepError>,
}

/// Order offsets used for two-order cases and the flag for two-point cases:
/// μ runs at ν + 1/2 and ν + 2; (x, y) runs over consecutive grid pairs.
pub const MU_OFFSETS: [f64; 2] = [0.5, 2.0];

/// Sweeps a case over the grid, clipped to its applicability with the
/// boundary exclusion margin. Points in reversal ranges carry the flipped
/// expected direction. Declared equality orders are excluded here and
/// handled by [`equality_sweep`]. Evaluation failures are recorded, not
/// fatal. Record order is deterministic: ν ascending, then μ, then x.
pub fn sweep_case(case: &InequalityCase, grid: &GridSpec, budget: &AccuracySpec) -> CaseSweep {
    let mut out = CaseSweep {
        case: case.name,
        records: Vec::new(),
        errors: Vec::new(),
    };
    let xs = grid.x_points();
    for nu in grid.nu_points() {
        if !case.sweepable(nu) {
            continue;
        }
        let mut points = Vec::new();
        if case.applicability.needs_second_order {
            for d in MU_OFFSETS {
                for &x in &xs {
                    points.push(CasePoint::with_mu(nu, nu + d, x));
                }
            }
        } else if case.applicability.needs_second_point {
            for w in xs.windows(2) {
                points.push(CasePoint::with_y(nu, w[0], w[1]));
            }
        } else {
            for &x in &xs {
                points.push(CasePoint::simple(nu, x));
            }
        }
        for p in points {
            match case.evaluate(&p, budget) {
                Ok(rec) => out.records.push(rec),
                Err(e) => out.errors.push(SweepError {
                    point: p,
                    message: e.to_string(),
                }),
            }
        }
    }
    out
}

/// Evaluates a case exactly at its declared equality orders over the grid's
/// x axis (or consecutive pairs for two-point cases). Two-order cases are
/// probed at μ = ν for a few sample orders.
pub fn equality_sweep(case: &InequalityCase, grid: &GridSpec, budget: &AccuracySpec) -> CaseSweep {
    let mut out = CaseSweep {
        case: case.name,
        records: Vec::new(),
        errors: Vec::new(),
    };
    let xs = grid.x_points();
    let mut points = Vec::new();
    if case.applicability.needs_second_order {
        for nu in [-1.0, 0.5, 3.0] {
            for &x in &xs {
                points.push(CasePoint::with_mu(nu, nu, x));
            }
        }
    } else {
        for &e in case.applicability.equality_nus {
            if case.applicability.needs_second_point {
                for w in xs.windows(2) {
                    points.push(CasePoint::with_y(e, w[0], w[1]));
                }
            } else {
                for &x in &xs {
                    points.push(CasePoint::simple(e, x));
                }
            }
        }
    }
    for p in points {
        match case.evaluate(&p, budget) {
            Ok(rec) => out.records.push(rec),
            Err(e) => out.errors.push(SweepError {
                point: p,
                message: e.to_string(),
            }),
        }
    }
    out
}
