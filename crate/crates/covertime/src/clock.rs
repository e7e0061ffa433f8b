//! The resetting-time law `σ = Y/r`.
//!
//! `Y` is a strictly positive random variable with unit mean, so the rate `r`
//! is the inverse of the mean time between resets for every family member.
//! The exponential member makes the reset process Markovian, which is what
//! the closed forms in [`crate::continuum`] and the linear-algebra results in
//! [`crate::network`] assume; the other members exercise the general theory
//! in Monte Carlo only.

use rand::Rng;
use rand_distr::{Distribution, Exp1, Gamma};

use crate::{Error, Result};

/// Distribution family of the unit-mean variable `Y`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ClockFamily {
    /// `Y ~ Exp(1)`: resets form a Poisson process of rate `r`.
    Exponential,
    /// `Y ≡ 1`: resets tick every `1/r` exactly.
    Deterministic,
    /// `Y ~ Gamma(shape, 1/shape)`: unit mean, variance `1/shape`.
    GammaUnitMean { shape: f64 },
}

/// Resetting clock: family of `Y` plus the rate `r > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResetClock {
    family: ClockFamily,
    rate: f64,
}

impl ResetClock {
    pub fn exponential(rate: f64) -> Result<Self> {
        Self::new(ClockFamily::Exponential, rate)
    }

    pub fn deterministic(rate: f64) -> Result<Self> {
        Self::new(ClockFamily::Deterministic, rate)
    }

    pub fn gamma_unit_mean(shape: f64, rate: f64) -> Result<Self> {
        if !(shape > 0.0) || !shape.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "gamma clock shape must be positive and finite, got {shape}"
            )));
        }
        Self::new(ClockFamily::GammaUnitMean { shape }, rate)
    }

    pub fn new(family: ClockFamily, rate: f64) -> Result<Self> {
        if !(rate > 0.0) || !rate.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "resetting rate must be positive and finite, got {rate}"
            )));
        }
        if let ClockFamily::GammaUnitMean { shape } = family {
            if !(shape > 0.0) || !shape.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "gamma clock shape must be positive and finite, got {shape}"
                )));
            }
        }
        Ok(Self { family, rate })
    }

    pub fn rate(&self) -> f64 {
        self.rate
    }

    pub fn family(&self) -> ClockFamily {
        self.family
    }

    pub fn is_exponential(&self) -> bool {
        matches!(self.family, ClockFamily::Exponential)
    }

    pub fn family_name(&self) -> &'static str {
        match self.family {
            ClockFamily::Exponential => "exponential",
            ClockFamily::Deterministic => "deterministic",
            ClockFamily::GammaUnitMean { .. } => "gamma-unit-mean",
        }
    }

    /// Draw one reset time `σ = Y/r`. Always strictly positive.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let y = match self.family {
            ClockFamily::Exponential => {
                let e: f64 = Exp1.sample(rng);
                e
            }
            ClockFamily::Deterministic => 1.0,
            ClockFamily::GammaUnitMean { shape } => {
                // unit mean: scale = 1/shape
                let g = Gamma::new(shape, 1.0 / shape).expect("validated at construction");
                g.sample(rng)
            }
        };
        (y / self.rate).max(f64::MIN_POSITIVE)
    }
}
