//! Rectangular (ν, x) sampling grids for sweeps.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scale {
    Linear,
    Log,
}

/// Rectangular sampling description: `nu_steps` equally spaced orders and
/// `x_steps` linearly or logarithmically spaced arguments.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub nu_min: f64,
    pub nu_max: f64,
    pub nu_steps: usize,
    pub x_min: f64,
    pub x_max: f64,
    pub x_steps: usize,
    pub x_scale: Scale,
}

impl Default for GridSpec {
    /// The default verification grid: ν ∈ [−1.4, 6] on 64 points, x ∈
    /// [0.05, 30] on 64 log-spaced points. Covers every stated domain and
    /// reversal range at desk scale.
    fn default() -> Self {
        Self {
            nu_min: -1.4,
            nu_max: 6.0,
            nu_steps: 64,
            x_min: 0.05,
            x_max: 30.0,
            x_steps: 64,
            x_scale: Scale::Log,
        }
    }
}

impl GridSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.nu_min < self.nu_max) {
            return Err(Error::Config(format!(
                "nu_min {} must be below nu_max {}",
                self.nu_min, self.nu_max
            )));
        }
        if !(self.x_min > 0.0 && self.x_min < self.x_max) {
            return Err(Error::Config(format!(
                "x range must satisfy 0 < x_min < x_max, got [{}, {}]",
                self.x_min, self.x_max
            )));
        }
        if self.nu_steps < 2 || self.x_steps < 2 {
            return Err(Error::Config("grid axes need at least 2 steps".into()));
        }
        Ok(())
    }

    pub fn nu_points(&self) -> Vec<f64> {
        let n = self.nu_steps;
        let step = (self.nu_max - self.nu_min) / (n - 1) as f64;
        (0..n).map(|i| self.nu_min + i as f64 * step).collect()
    }

    pub fn x_points(&self) -> Vec<f64> {
        let n = self.x_steps;
        match self.x_scale {
            Scale::Linear => {
                let step = (self.x_max - self.x_min) / (n - 1) as f64;
                (0..n).map(|i| self.x_min + i as f64 * step).collect()
            }
            Scale::Log => {
                let lo = self.x_min.ln();
                let step = (self.x_max.ln() - lo) / (n - 1) as f64;
                (0..n).map(|i| (lo + i as f64 * step).exp()).collect()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_grid_shape() {
        let g = GridSpec::default();
        g.validate().unwrap();
        let nus = g.nu_points();
        let xs = g.x_points();
        assert_eq!(nus.len(), 64);
        assert_eq!(xs.len(), 64);
        assert_eq!(nus[0], -1.4);
        assert_eq!(*nus.last().unwrap(), 6.0);
        assert!((xs[0] - 0.05).abs() < 1e-15);
        assert!((xs[63] - 30.0).abs() < 1e-12);
        assert!(xs.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn invalid_specs_rejected() {
        let g = GridSpec {
            nu_min: 7.0,
            ..GridSpec::default()
        };
        assert!(g.validate().is_err());
        let g = GridSpec {
            x_min: -1.0,
            ..GridSpec::default()
        };
        assert!(g.validate().is_err());
        let g = GridSpec {
            nu_steps: 1,
            ..GridSpec::default()
        };
        assert!(g.validate().is_err());
    }
}
