//! Compensated floating-point summation.

use crate::error::{Error, Result};

/// Neumaier-style compensated accumulator.
///
/// Keeps a running sum plus a correction term so the accumulated rounding
/// error stays bounded by a couple of machine epsilons of the absolute-value
/// sum, independent of the number of terms.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    comp: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.comp += (self.sum - t) + value;
        } else {
            self.comp += (value - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Sums a finite slice with compensated accumulation.
///
/// The result differs from the exact sum by at most a few machine epsilons
/// of `Σ|terms|`. Empty input sums to zero.
pub fn compensated_sum(terms: &[f64]) -> Result<f64> {
    let mut acc = KahanSum::new();
    for (i, &t) in terms.iter().enumerate() {
        if !t.is_finite() {
            return Err(Error::Domain(format!("non-finite term at index {i}")));
        }
        acc.add(t);
        if !acc.value().is_finite() {
            return Err(Error::Overflow("compensated_sum"));
        }
    }
    Ok(acc.value())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_keeps_small_term() {
        assert_eq!(compensated_sum(&[1.0, -1.0, 1e-20]).unwrap(), 1e-20);
    }

    #[test]
    fn empty_sum_is_zero() {
        assert_eq!(compensated_sum(&[]).unwrap(), 0.0);
    }

    #[test]
    fn repeated_tenth_sums_to_one() {
        let terms = [0.1; 10];
        let s = compensated_sum(&terms).unwrap();
        assert!((s - 1.0).abs() < 1e-15, "got {s}");
    }

    #[test]
    fn overflow_is_signalled() {
        let terms = [f64::MAX, f64::MAX];
        assert!(matches!(
            compensated_sum(&terms),
            Err(Error::Overflow("compensated_sum"))
        ));
    }

    #[test]
    fn non_finite_input_rejected() {
        assert!(matches!(
            compensated_sum(&[1.0, f64::NAN]),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn beats_naive_on_ill_conditioned_input() {
        // alternating large/small values where naive accumulation drifts
        let mut terms = Vec::new();
        for k in 0..2000 {
            terms.push(1e15);
            terms.push(3.25 + k as f64 * 1e-3);
            terms.push(-1e15);
        }
        let exact: f64 = (0..2000).map(|k| 3.25 + k as f64 * 1e-3).sum();
        let got = compensated_sum(&terms).unwrap();
        assert!(
            (got - exact).abs() <= 1e-9 * exact.abs(),
            "got {got}, want {exact}"
        );
    }
}
