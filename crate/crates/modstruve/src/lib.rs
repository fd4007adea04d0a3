//! Modified Struve and modified Bessel functions, evaluated by multiple
//! independent methods, plus an executable catalogue of the monotonicity,
//! convexity, Turán-type and two-sided-bound results that relate them.
//!
//! The crate is organized in layers:
//!
//! - [`gamma`] and [`sum`]: scalar kernels (log-gamma, reciprocal gamma,
//!   digamma, rising factorials, compensated summation).
//! - [`eval`]: power-series evaluators for L_ν, L'_ν, L''_ν, the normalized
//!   𝓛_ν and I_ν, exact closed forms at half-integer orders, and the
//!   coefficient-quotient monotonicity oracle.
//! - [`quad`]: tanh-sinh quadrature of the integral representations, the
//!   method-independent cross-check of the series.
//! - [`relations`]: recurrence and differential-equation identities as
//!   residual checks.
//! - [`bounds`]: the inequality catalogue with domains, strictness,
//!   reversal ranges and equality points.
//! - [`verify`]: grid sweeps, finite-difference monotonicity and midpoint
//!   convexity checks, and JSON/CSV reports.
//!
//! ```
//! use modstruve::{struve_l, struve_l_quad, AccuracySpec, QuadratureSpec};
//!
//! let series = struve_l(0.5, 1.0, &AccuracySpec::default()).unwrap();
//! let quad = struve_l_quad(0.5, 1.0, &QuadratureSpec::default()).unwrap();
//! let closed = (2.0 / (std::f64::consts::PI * 1.0)).sqrt() * (1f64.cosh() - 1.0);
//!
//! assert!((series.value - closed).abs() < 1e-13);
//! assert!((quad.value - closed).abs() < 1e-11);
//! ```

// Domain guards are written `!(x > bound)` on purpose: the negation also
// rejects NaN, which `x <= bound` would let through.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod error;
pub mod eval;
pub mod gamma;
pub mod grid;
pub mod quad;
pub mod relations;
pub mod sum;
pub mod verify;

pub use error::{Error, Result};
pub use eval::{
    bessel_i, quotient_sequence_monotone, struve_closed_form, struve_coeff_beta, struve_l,
    struve_l_continued, struve_l_prime, struve_l_second, struve_norm, AccuracySpec, Evaluation,
    Method, Monotonicity,
};
pub use gamma::{digamma, lgamma, log_pochhammer, recip_gamma};
pub use grid::{GridSpec, Scale};
pub use quad::{next_shifted_series, struve_l_quad, struve_next_shifted, QuadratureSpec};
pub use sum::{compensated_sum, KahanSum};
pub use verify::{run_verification, SweepReport, VerificationRun, VerifyConfig};

// The guide's code blocks double as doc-tests so the book cannot drift from
// the library.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/functions.md")]
    mod functions {}
    #[doc = include_str!("../../../book/src/evaluation.md")]
    mod evaluation {}
    #[doc = include_str!("../../../book/src/identities.md")]
    mod identities {}
    #[doc = include_str!("../../../book/src/inequalities.md")]
    mod inequalities {}
    #[doc = include_str!("../../../book/src/properties.md")]
    mod properties {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
