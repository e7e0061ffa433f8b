//! Searcher and target specifications shared by the analytic and Monte Carlo
//! modules.

use crate::{Error, Result};

/// 1D Brownian searcher. Starts from and resets to the origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BrownianSpec {
    /// Diffusivity `D > 0` (length²/time).
    pub diffusivity: f64,
    /// Start-and-reset position; pinned at 0 for the interval problems.
    pub start: f64,
}

impl BrownianSpec {
    pub fn new(diffusivity: f64) -> Result<Self> {
        if !(diffusivity > 0.0) || !diffusivity.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "diffusivity must be positive and finite, got {diffusivity}"
            )));
        }
        Ok(Self {
            diffusivity,
            start: 0.0,
        })
    }
}

/// Velocity sign of a run-and-tumble particle at t = 0 and after each reset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VelocitySign {
    Plus,
    Minus,
    /// Fair coin at t = 0 and after every reset.
    #[default]
    SymmetricRandom,
}

/// 1D run-and-tumble particle: speed `v`, direction reversals at rate `γ`.
/// Starts from and resets to the origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RtpSpec {
    pub speed: f64,
    pub switch_rate: f64,
    pub initial_velocity: VelocitySign,
}

impl RtpSpec {
    pub fn new(speed: f64, switch_rate: f64) -> Result<Self> {
        if !(speed > 0.0) || !speed.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "speed must be positive and finite, got {speed}"
            )));
        }
        if !(switch_rate > 0.0) || !switch_rate.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "switch rate must be positive and finite, got {switch_rate}"
            )));
        }
        Ok(Self {
            speed,
            switch_rate,
            initial_velocity: VelocitySign::default(),
        })
    }

    pub fn with_initial_velocity(mut self, sign: VelocitySign) -> Self {
        self.initial_velocity = sign;
        self
    }
}

/// Target interval `[-a, b]` for a searcher started at the origin.
///
/// `constrained` puts reflecting walls at `-a` and `b`. A positive detection
/// radius `R` reduces the search to the point-particle cover problem of
/// `[R - a, b - R]`, so `R < min(a, b)` is required for a nontrivial target.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntervalTarget {
    pub a: f64,
    pub b: f64,
    pub constrained: bool,
    pub detection_radius: f64,
}

impl IntervalTarget {
    pub fn new(a: f64, b: f64, constrained: bool, detection_radius: f64) -> Result<Self> {
        if !(a > 0.0) || !a.is_finite() || !(b > 0.0) || !b.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "interval half-widths must be positive and finite, got a={a}, b={b}"
            )));
        }
        if detection_radius < 0.0 || !detection_radius.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "detection radius must be non-negative and finite, got {detection_radius}"
            )));
        }
        if detection_radius > 0.0 && detection_radius >= a.min(b) {
            return Err(Error::InvalidParameter(format!(
                "detection radius {detection_radius} must be below min(a, b) = {}; \
                 the reduced interval [R-a, b-R] would be empty or trivial",
                a.min(b)
            )));
        }
        Ok(Self {
            a,
            b,
            constrained,
            detection_radius,
        })
    }

    pub fn unconstrained(a: f64, b: f64) -> Result<Self> {
        Self::new(a, b, false, 0.0)
    }

    pub fn constrained(a: f64, b: f64) -> Result<Self> {
        Self::new(a, b, true, 0.0)
    }

    /// Effective point-particle distance to the left target, `a - R`.
    pub fn effective_a(&self) -> f64 {
        self.a - self.detection_radius
    }

    /// Effective point-particle distance to the right target, `b - R`.
    pub fn effective_b(&self) -> f64 {
        self.b - self.detection_radius
    }

    pub fn is_symmetric(&self) -> bool {
        self.a == self.b
    }
}
