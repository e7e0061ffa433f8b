//! Moment estimation with standard errors and seed provenance.

use crate::{Error, Result};

/// A Monte Carlo estimate of `E[X^m]` with its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentEstimate {
    /// Moment order `m >= 1`.
    pub order: u32,
    /// Sample mean of `x^m`.
    pub mean: f64,
    /// Sample standard deviation of `x^m` divided by `sqrt(n)`.
    pub std_error: f64,
    /// Number of samples behind the estimate.
    pub n_samples: usize,
    /// Seed the samples were generated from.
    pub seed: u64,
}

/// Estimate `E[X^m]` from raw samples.
///
/// Rejects fewer than two samples: a standard error is always reported and
/// needs at least two points.
pub fn accumulate_estimate(samples: &[f64], order: u32, seed: u64) -> Result<MomentEstimate> {
    if order < 1 {
        return Err(Error::InvalidParameter(
            "moment order must be at least 1".into(),
        ));
    }
    if samples.len() < 2 {
        return Err(Error::InvalidParameter(format!(
            "need at least 2 samples to report a standard error, got {}",
            samples.len()
        )));
    }
    let n = samples.len();
    let powered: Vec<f64> = samples.iter().map(|&x| x.powi(order as i32)).collect();
    let mean = powered.iter().sum::<f64>() / n as f64;
    let ss = powered.iter().map(|&x| (x - mean) * (x - mean)).sum::<f64>();
    let sd = (ss / (n - 1) as f64).sqrt();
    Ok(MomentEstimate {
        order,
        mean,
        std_error: sd / (n as f64).sqrt(),
        n_samples: n,
        seed,
    })
}

/// Neumaier compensated summation; the alternating inclusion–exclusion sums
/// this crate forms can cancel catastrophically under naive accumulation.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.compensation += (self.sum - t) + value;
        } else {
            self.compensation += (value - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn total(&self) -> f64 {
        self.sum + self.compensation
    }
}
