//! Recurrence and differential-equation identities, evaluated as residuals.
//!
//! Each identity ties together independently summed series (different
//! orders, derivatives of different degree), so a small relative residual is
//! evidence that the evaluators agree with each other, not merely with
//! themselves. The residual scale always includes the inhomogeneous term
//! (x/2)^ν/(√π Γ(ν+3/2)); it is what distinguishes these identities from
//! their Bessel counterparts and must not be washed out at large ν.

use crate::error::{Error, Result};
use crate::eval::{
    struve_inhom, struve_l, struve_l_continued, struve_l_prime, struve_l_second, AccuracySpec,
};
use crate::gamma::lgamma_raw;

/// Left-minus-right of one identity at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidualReport {
    pub identity: &'static str,
    pub nu: f64,
    pub x: f64,
    pub residual: f64,
    /// Magnitude used for normalization: max(|lhs|, |rhs|, inhomogeneity).
    pub scale: f64,
    pub rel_residual: f64,
}

fn report(
    identity: &'static str,
    nu: f64,
    x: f64,
    lhs: f64,
    rhs: f64,
    floor: f64,
) -> ResidualReport {
    let scale = lhs.abs().max(rhs.abs()).max(floor);
    ResidualReport {
        identity,
        nu,
        x,
        residual: lhs - rhs,
        scale,
        rel_residual: (lhs - rhs) / scale,
    }
}

fn require_nu_above(nu: f64, bound: f64, identity: &str) -> Result<()> {
    if nu > bound {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "{identity} requires nu > {bound}, got {nu}"
        )))
    }
}

/// L_{ν−1}(x) − L_{ν+1}(x) = (2ν/x) L_ν(x) + (x/2)^ν/(√π Γ(ν+3/2)),
/// for ν > −1/2.
pub fn residual_subtraction_recurrence(
    nu: f64,
    x: f64,
    budget: &AccuracySpec,
) -> Result<ResidualReport> {
    require_nu_above(nu, -0.5, "subtraction recurrence")?;
    let l_prev = struve_l(nu - 1.0, x, budget)?.value;
    let l = struve_l(nu, x, budget)?.value;
    let l_next = struve_l(nu + 1.0, x, budget)?.value;
    let inhom = struve_inhom(nu, x);
    let lhs = l_prev - l_next;
    let rhs = (2.0 * nu / x) * l + inhom;
    Ok(report("subtraction_recurrence", nu, x, lhs, rhs, inhom))
}

/// x L'_ν(x) + ν L_ν(x) = x L_{ν−1}(x), for ν > −1/2.
pub fn residual_derivative_recurrence(
    nu: f64,
    x: f64,
    budget: &AccuracySpec,
) -> Result<ResidualReport> {
    require_nu_above(nu, -0.5, "derivative recurrence")?;
    let l = struve_l(nu, x, budget)?.value;
    let lp = struve_l_prime(nu, x, budget)?.value;
    let l_prev = struve_l(nu - 1.0, x, budget)?.value;
    let lhs = x * lp + nu * l;
    let rhs = x * l_prev;
    Ok(report(
        "derivative_recurrence",
        nu,
        x,
        lhs,
        rhs,
        struve_inhom(nu, x),
    ))
}

/// L_{ν+1}(x) = L'_ν(x) − (ν/x) L_ν(x) − (x/2)^ν/(√π Γ(ν+3/2)),
/// for ν > −3/2.
pub fn residual_shift_recurrence(nu: f64, x: f64, budget: &AccuracySpec) -> Result<ResidualReport> {
    require_nu_above(nu, -1.5, "shift recurrence")?;
    let l = struve_l(nu, x, budget)?.value;
    let lp = struve_l_prime(nu, x, budget)?.value;
    let l_next = struve_l(nu + 1.0, x, budget)?.value;
    let inhom = struve_inhom(nu, x);
    let lhs = l_next;
    let rhs = lp - (nu / x) * l - inhom;
    Ok(report("shift_recurrence", nu, x, lhs, rhs, inhom))
}

/// The inhomogeneous modified Struve equation rearranged for L'':
/// L''_ν(x) = (1 + ν²/x²) L_ν(x) − L'_ν(x)/x + x^{ν−1}/(√π 2^{ν−1} Γ(ν+1/2)),
/// for ν > −1/2 (so that Γ(ν+1/2) stays positive).
///
/// The second derivative comes from its own termwise-differentiated series,
/// not finite differences, so the residual probes the identity rather than
/// differentiation error.
pub fn residual_ode(nu: f64, x: f64, budget: &AccuracySpec) -> Result<ResidualReport> {
    require_nu_above(nu, -0.5, "struve equation")?;
    let l = struve_l(nu, x, budget)?.value;
    let lp = struve_l_prime(nu, x, budget)?.value;
    let lpp = struve_l_second(nu, x, budget)?.value;
    // x^{ν−1}/(√π 2^{ν−1} Γ(ν+1/2)) = (x/2)^{ν−1}/(√π Γ(ν+1/2))
    let forcing =
        ((nu - 1.0) * (0.5 * x).ln() - 0.5 * std::f64::consts::PI.ln() - lgamma_raw(nu + 0.5))
            .exp();
    let lhs = lpp;
    let rhs = (1.0 + nu * nu / (x * x)) * l - lp / x + forcing;
    Ok(report("struve_equation", nu, x, lhs, rhs, forcing))
}

/// [x^{−ν} L_ν(x)]' = 2^{−ν}/(√π Γ(ν+3/2)) + x^{−ν} L_{ν+1}(x),
/// for ν > −3/2, with the left side expanded as x^{−ν}(L'_ν − (ν/x) L_ν).
pub fn residual_xnu_derivative(nu: f64, x: f64, budget: &AccuracySpec) -> Result<ResidualReport> {
    require_nu_above(nu, -1.5, "x^{-nu} derivative identity")?;
    let l = struve_l(nu, x, budget)?.value;
    let lp = struve_l_prime(nu, x, budget)?.value;
    let l_next = struve_l(nu + 1.0, x, budget)?.value;
    let xpow = (-nu * x.ln()).exp();
    let constant = (-nu * 2f64.ln() - 0.5 * std::f64::consts::PI.ln() - lgamma_raw(nu + 1.5)).exp();
    let lhs = xpow * (lp - (nu / x) * l);
    let rhs = constant + xpow * l_next;
    Ok(report("xnu_derivative", nu, x, lhs, rhs, constant))
}

/// Both routes to the Turán determinant
///
/// Δ_ν(x) = [L_ν(x)]² − L_{ν−1}(x) L_{ν+1}(x)
///        = (1 + ν²/x²)[L_ν(x)]² − [L'_ν(x)]² + x^ν L_{ν−1}(x)/(√π 2^ν Γ(ν+3/2)),
///
/// compared against each other, for ν > −1/2. The scale is [L_ν(x)]².
pub fn turan_delta_identity(nu: f64, x: f64, budget: &AccuracySpec) -> Result<ResidualReport> {
    require_nu_above(nu, -0.5, "Turan determinant identity")?;
    let l = struve_l(nu, x, budget)?.value;
    let lp = struve_l_prime(nu, x, budget)?.value;
    let l_prev = struve_l(nu - 1.0, x, budget)?.value;
    let l_next = struve_l(nu + 1.0, x, budget)?.value;
    let direct = l * l - l_prev * l_next;
    // x^ν/(√π 2^ν Γ(ν+3/2)) = inhom(ν, x)/1 with (x/2)^ν... identical factor
    let via_derivatives =
        (1.0 + nu * nu / (x * x)) * l * l - lp * lp + struve_inhom(nu, x) * l_prev;
    let scale = l * l;
    Ok(ResidualReport {
        identity: "turan_delta",
        nu,
        x,
        residual: direct - via_derivatives,
        scale,
        rel_residual: (direct - via_derivatives) / scale,
    })
}

/// Δ_ν(x) itself, with L_{ν−1} through the entire continuation so the
/// determinant stays evaluable for every ν > −3/2.
pub fn turan_delta(nu: f64, x: f64, budget: &AccuracySpec) -> Result<f64> {
    let l = struve_l(nu, x, budget)?.value;
    let l_prev = struve_l_continued(nu - 1.0, x, budget)?.value;
    let l_next = struve_l(nu + 1.0, x, budget)?.value;
    Ok(l * l - l_prev * l_next)
}

/// (1 + ν²/x²) L_ν² − (L'_ν)² + (ν+1/2) x^{ν−1} L_ν/(√π 2^{ν−1} Γ(ν+3/2)),
/// which equals (L_ν²/x)·d/dx(x L'_ν/L_ν). Positive on ν > −3/2, x > 0.
pub fn log_deriv_slope(nu: f64, x: f64, budget: &AccuracySpec) -> Result<f64> {
    let l = struve_l(nu, x, budget)?.value;
    let lp = struve_l_prime(nu, x, budget)?.value;
    // (ν+1/2) x^{ν−1}/(√π 2^{ν−1} Γ(ν+3/2)) = (ν+1/2)(x/2)^{ν−1}/(√π Γ(ν+3/2))
    let coeff = (nu + 0.5)
        * ((nu - 1.0) * (0.5 * x).ln() - 0.5 * std::f64::consts::PI.ln() - lgamma_raw(nu + 1.5))
            .exp();
    Ok((1.0 + nu * nu / (x * x)) * l * l - lp * lp + coeff * l)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> AccuracySpec {
        AccuracySpec::default()
    }

    #[test]
    fn subtraction_recurrence_residuals() {
        // closed forms make ν = 1/2 nearly exact
        let r = residual_subtraction_recurrence(0.5, 1.0, &b()).unwrap();
        assert!(r.rel_residual.abs() <= 1e-13, "rel {:e}", r.rel_residual);
        let r = residual_subtraction_recurrence(2.0, 5.0, &b()).unwrap();
        assert!(r.rel_residual.abs() <= 1e-9);
        // x → 0 at ν = 0: both sides settle on the inhomogeneity 2/π... scaled balance
        let r = residual_subtraction_recurrence(0.0, 1e-5, &b()).unwrap();
        assert!(r.rel_residual.abs() <= 1e-11, "rel {:e}", r.rel_residual);
        assert!(residual_subtraction_recurrence(-0.5, 1.0, &b()).is_err());
    }

    #[test]
    fn derivative_recurrence_residuals() {
        let r = residual_derivative_recurrence(0.5, 1.0, &b()).unwrap();
        assert!(r.rel_residual.abs() <= 1e-12);
        let r = residual_derivative_recurrence(1.5, 2.0, &b()).unwrap();
        assert!(r.rel_residual.abs() <= 1e-9);
        let r = residual_derivative_recurrence(1.0, 1e-4, &b()).unwrap();
        assert!(r.rel_residual.abs() <= 1e-9);
    }

    #[test]
    fn shift_recurrence_residuals() {
        let r = residual_shift_recurrence(-0.5, 1.0, &b()).unwrap();
        assert!(r.rel_residual.abs() <= 1e-12);
        let r = residual_shift_recurrence(1.0, 3.0, &b()).unwrap();
        assert!(r.rel_residual.abs() <= 1e-9);
    }

    #[test]
    fn recurrences_are_linearly_dependent() {
        // shift = (derivative − subtraction)/x up to rearrangement, so the
        // three residuals cannot be independent: reconstruct the shift
        // residual from the other two at a common point.
        let nu = 1.2;
        let x = 2.7;
        let sub = residual_subtraction_recurrence(nu, x, &b()).unwrap();
        let der = residual_derivative_recurrence(nu, x, &b()).unwrap();
        let shf = residual_shift_recurrence(nu, x, &b()).unwrap();
        // residual_der/x − residual_sub ... combination: (der − sub·x/... )
        // L_{ν+1} − (L' − (ν/x)L − inhom) = [(xL' + νL − xL_{ν−1}) − (L_{ν−1} − L_{ν+1} − (2ν/x)L − inhom)x]/(−x)
        let combined = (der.residual - x * sub.residual) / -x;
        assert!(
            (combined - shf.residual).abs() <= 1e-12 * shf.scale,
            "combined {combined:e} vs shift {:e}",
            shf.residual
        );
    }

    #[test]
    fn ode_residuals() {
        let r = residual_ode(0.5, 1.0, &b()).unwrap();
        assert!(r.rel_residual.abs() <= 1e-12);
        let r = residual_ode(2.0, 10.0, &b()).unwrap();
        assert!(r.rel_residual.abs() <= 1e-8);
        let r = residual_ode(-0.25, 0.5, &b()).unwrap();
        assert!(r.rel_residual.abs() <= 1e-9);
        assert!(residual_ode(-0.5, 1.0, &b()).is_err());
    }

    #[test]
    fn xnu_derivative_residuals() {
        let r = residual_xnu_derivative(-0.5, 1.0, &b()).unwrap();
        assert!(r.rel_residual.abs() <= 1e-12);
        let r = residual_xnu_derivative(0.0, 2.0, &b()).unwrap();
        assert!(r.rel_residual.abs() <= 1e-9);
        // same identity as the shift recurrence, rearranged
        let a = residual_xnu_derivative(0.8, 1.4, &b()).unwrap();
        let s = residual_shift_recurrence(0.8, 1.4, &b()).unwrap();
        let xpow = (0.8f64 * 1.4f64.ln()).exp();
        assert!((a.residual * xpow + s.residual).abs() <= 1e-12 * s.scale.max(1.0));
    }

    #[test]
    fn turan_identity_residuals() {
        let r = turan_delta_identity(0.5, 1.0, &b()).unwrap();
        assert!(r.rel_residual.abs() <= 1e-12);
        let r = turan_delta_identity(1.0, 2.0, &b()).unwrap();
        assert!(r.rel_residual.abs() <= 1e-9);
        // Δ itself is positive wherever tested
        for (nu, x) in [
            (-0.4, 0.3),
            (0.0, 1.0),
            (1.0, 2.0),
            (4.0, 20.0),
            (-1.2, 0.1),
        ] {
            assert!(turan_delta(nu, x, &b()).unwrap() > 0.0, "nu={nu} x={x}");
        }
    }

    #[test]
    fn slope_expression_matches_finite_difference() {
        // (L²/x)·d/dx[xL'/L] against a centered difference of xL'/L
        let budget = b();
        for (nu, x) in [(0.3, 1.0), (1.5, 4.0), (-1.0, 0.8)] {
            let h = 1e-5;
            let f = |t: f64| {
                let l = struve_l(nu, t, &budget).unwrap().value;
                let lp = struve_l_prime(nu, t, &budget).unwrap().value;
                t * lp / l
            };
            let fd = (f(x + h) - f(x - h)) / (2.0 * h);
            let l = struve_l(nu, x, &budget).unwrap().value;
            let expr = log_deriv_slope(nu, x, &budget).unwrap();
            let lhs = l * l / x * fd;
            assert!(
                ((lhs - expr) / expr).abs() <= 1e-5,
                "nu={nu} x={x}: fd route {lhs} vs expression {expr}"
            );
        }
    }
}
