//! Frequent-resetting asymptotics: leading-order success-probability
//! logarithms, the moment approximation `prefactor · m! / (r p)^m`, and
//! closed-form optimal-rate estimates.

use crate::numeric::{ln_factorial, validate_positive};
use crate::{Error, Result};

/// Geometry + process for a success-probability asymptotic.
///
/// `ln p` here is the log-probability of reaching the farthest part of the
/// target before the next reset, to leading order as `r` grows. The 1D
/// settings carry the exact exponents of their closed forms; the
/// ball/torus/subdiffusive settings carry the large-`r` laws with the
/// `L²/(4D)` short-time constant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AsymptoticSetting {
    /// Interval `[-a, b]` with `b > a`: far distance `b`, `p = e^{-b sqrt(r/D)}`.
    Bm1dAsymmetric { b: f64, diffusivity: f64 },
    /// Symmetric interval `[-a, a]`: `p = e^{-a sqrt(r/D)}`, MCT prefactor 3/2.
    Bm1dSymmetric { a: f64, diffusivity: f64 },
    /// Symmetric RTP interval: `p = e^{-a(γ+r)/v} / 2`, MCT prefactor 3/2.
    Rtp1dSymmetric { a: f64, speed: f64, switch_rate: f64 },
    /// Target ball of radius `a` around the start, detection radius `R`:
    /// `ln p ~ -sqrt((a-R)² r / 4D)`.
    BallRd {
        radius: f64,
        detection_radius: f64,
        diffusivity: f64,
    },
    /// Full d-torus of diameter `ℓ`: `ln p ~ -sqrt((ℓ-2R)² r / 4D)`.
    TorusRd {
        diameter: f64,
        detection_radius: f64,
        diffusivity: f64,
    },
    /// Subdiffusive searcher (mean-squared displacement `~ t^α`, α in (0,1)):
    /// `ln p ~ -γ r^{β/(β+1)}` with `β = α/(2-α)`.
    Subdiffusion {
        distance: f64,
        generalized_diffusivity: f64,
        exponent: f64,
    },
}

/// `β`, the constant `C` and the amplitude `γ` of the subdiffusive law
/// `ln p ~ -γ r^{β/(β+1)}` for far distance `L`:
/// `β = α/(2-α)`, `C = (2-α) α^β (L²/4K)^{β/α}`,
/// `γ = (β+1) β^{-β/(β+1)} C^{1/(β+1)}`.
pub fn subdiffusion_coefficients(distance: f64, k_alpha: f64, alpha: f64) -> Result<(f64, f64, f64)> {
    validate_positive(distance, "distance")?;
    validate_positive(k_alpha, "generalized diffusivity")?;
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "subdiffusion exponent must lie in (0, 1), got {alpha}"
        )));
    }
    let beta = alpha / (2.0 - alpha);
    let c = (2.0 - alpha)
        * alpha.powf(beta)
        * (distance * distance / (4.0 * k_alpha)).powf(beta / alpha);
    let gamma = (beta + 1.0) / beta.powf(beta / (beta + 1.0)) * c.powf(1.0 / (beta + 1.0));
    Ok((beta, c, gamma))
}

impl AsymptoticSetting {
    /// Distance from the start to the farthest part of the target, after the
    /// detection-radius reduction. Must be positive (a target inside the
    /// initially detected ball is rejected).
    pub fn far_distance(&self) -> Result<f64> {
        let l = match *self {
            AsymptoticSetting::Bm1dAsymmetric { b, .. } => b,
            AsymptoticSetting::Bm1dSymmetric { a, .. } => a,
            AsymptoticSetting::Rtp1dSymmetric { a, .. } => a,
            AsymptoticSetting::BallRd {
                radius,
                detection_radius,
                ..
            } => radius - detection_radius,
            AsymptoticSetting::TorusRd {
                diameter,
                detection_radius,
                ..
            } => diameter - 2.0 * detection_radius,
            AsymptoticSetting::Subdiffusion { distance, .. } => distance,
        };
        if !(l > 0.0) || !l.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "far-target distance must be positive, got {l} (target inside the initially detected ball?)"
            )));
        }
        Ok(l)
    }

    fn check(&self) -> Result<()> {
        match *self {
            AsymptoticSetting::Bm1dAsymmetric { diffusivity, .. }
            | AsymptoticSetting::Bm1dSymmetric { diffusivity, .. }
            | AsymptoticSetting::BallRd { diffusivity, .. }
            | AsymptoticSetting::TorusRd { diffusivity, .. } => {
                validate_positive(diffusivity, "diffusivity")?;
            }
            AsymptoticSetting::Rtp1dSymmetric {
                speed, switch_rate, ..
            } => {
                validate_positive(speed, "speed")?;
                validate_positive(switch_rate, "switch rate")?;
            }
            AsymptoticSetting::Subdiffusion {
                distance,
                generalized_diffusivity,
                exponent,
            } => {
                subdiffusion_coefficients(distance, generalized_diffusivity, exponent)?;
            }
        }
        if let AsymptoticSetting::BallRd {
            detection_radius, ..
        }
        | AsymptoticSetting::TorusRd {
            detection_radius, ..
        } = *self
        {
            if detection_radius < 0.0 {
                return Err(Error::InvalidParameter(
                    "detection radius must be non-negative".into(),
                ));
            }
        }
        self.far_distance().map(|_| ())
    }
}

/// Leading-order `ln p` of hitting the farthest target part before a reset.
pub fn log_success_prob_asymptotic(setting: &AsymptoticSetting, r: f64) -> Result<f64> {
    setting.check()?;
    validate_positive(r, "resetting rate")?;
    let l = setting.far_distance()?;
    Ok(match *setting {
        AsymptoticSetting::Bm1dAsymmetric { diffusivity, .. }
        | AsymptoticSetting::Bm1dSymmetric { diffusivity, .. } => {
            -(l * l * r / diffusivity).sqrt()
        }
        AsymptoticSetting::Rtp1dSymmetric {
            a,
            speed,
            switch_rate,
        } => -a * (switch_rate + r) / speed - std::f64::consts::LN_2,
        AsymptoticSetting::BallRd { diffusivity, .. }
        | AsymptoticSetting::TorusRd { diffusivity, .. } => {
            -(l * l * r / (4.0 * diffusivity)).sqrt()
        }
        AsymptoticSetting::Subdiffusion {
            distance,
            generalized_diffusivity,
            exponent,
        } => {
            let (beta, _, gamma) =
                subdiffusion_coefficients(distance, generalized_diffusivity, exponent)?;
            -gamma * r.powf(beta / (beta + 1.0))
        }
    })
}

/// Frequent-resetting moment approximation
/// `prefactor · m! / (r e^{ln_p})^m`, formed in log space.
///
/// `prefactor` is 1 for a unique farthest target point and 3/2 for two
/// symmetric farthest points.
pub fn mct_frequent_reset_approx(m: u32, r: f64, ln_p: f64, prefactor: f64) -> Result<f64> {
    if m < 1 {
        return Err(Error::InvalidParameter("moment order must be >= 1".into()));
    }
    validate_positive(r, "resetting rate")?;
    if prefactor != 1.0 && prefactor != 1.5 {
        return Err(Error::InvalidParameter(format!(
            "prefactor must be 1 (unique farthest point) or 3/2 (two symmetric farthest points), got {prefactor}"
        )));
    }
    Ok((prefactor.ln() + ln_factorial(m as u64) - m as f64 * (r.ln() + ln_p)).exp())
}

/// Closed-form estimate of the MCT-minimizing resetting rate for a setting.
pub fn optimal_rate_estimate(setting: &AsymptoticSetting) -> Result<f64> {
    setting.check()?;
    let l = setting.far_distance()?;
    Ok(match *setting {
        AsymptoticSetting::Bm1dAsymmetric { diffusivity, .. }
        | AsymptoticSetting::Bm1dSymmetric { diffusivity, .. } => 4.0 * diffusivity / (l * l),
        AsymptoticSetting::Rtp1dSymmetric { a, speed, .. } => speed / a,
        AsymptoticSetting::BallRd { diffusivity, .. }
        | AsymptoticSetting::TorusRd { diffusivity, .. } => 16.0 * diffusivity / (l * l),
        AsymptoticSetting::Subdiffusion {
            distance,
            generalized_diffusivity,
            exponent,
        } => {
            let (beta, _, gamma) =
                subdiffusion_coefficients(distance, generalized_diffusivity, exponent)?;
            ((beta + 1.0) / (gamma * beta)).powf((beta + 1.0) / beta)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ball_setting_reference() {
        // a=2, R=1, D=1: ln p = -sqrt(r)/2
        let s = AsymptoticSetting::BallRd {
            radius: 2.0,
            detection_radius: 1.0,
            diffusivity: 1.0,
        };
        let lp = log_success_prob_asymptotic(&s, 4.0).unwrap();
        assert!((lp - (-1.0)).abs() < 1e-14);
        assert!((optimal_rate_estimate(&s).unwrap() - 16.0).abs() < 1e-12);
    }

    #[test]
    fn torus_setting_reference() {
        // ℓ=4, R=1, D=1: ln p = -sqrt(r)
        let s = AsymptoticSetting::TorusRd {
            diameter: 4.0,
            detection_radius: 1.0,
            diffusivity: 1.0,
        };
        let lp = log_success_prob_asymptotic(&s, 1.0).unwrap();
        assert!((lp - (-1.0)).abs() < 1e-14);
        assert!((optimal_rate_estimate(&s).unwrap() - 4.0).abs() < 1e-12);
    }

    #[test]
    fn one_dimensional_estimates() {
        let bm = AsymptoticSetting::Bm1dAsymmetric {
            b: 2.0,
            diffusivity: 1.0,
        };
        assert!((optimal_rate_estimate(&bm).unwrap() - 1.0).abs() < 1e-12);
        let rtp = AsymptoticSetting::Rtp1dSymmetric {
            a: 4.0,
            speed: 2.0,
            switch_rate: 1.0,
        };
        assert!((optimal_rate_estimate(&rtp).unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn subdiffusion_recovers_diffusive_exponent() {
        // α -> 1: β -> 1, C -> L²/4D, γ -> 2 sqrt(L²/4D)
        let (l, d) = (2.0, 1.0);
        let (beta, c, gamma) = subdiffusion_coefficients(l, d, 0.999).unwrap();
        assert!((beta - 1.0).abs() < 2e-3);
        assert!((c - l * l / (4.0 * d)).abs() < 5e-3);
        assert!((gamma - 2.0 * (l * l / (4.0 * d)).sqrt()).abs() < 5e-3);
        // and the ln p law approaches the diffusive -sqrt(L² r / D)
        let s = AsymptoticSetting::Subdiffusion {
            distance: l,
            generalized_diffusivity: d,
            exponent: 0.999,
        };
        let r = 100.0;
        let lp = log_success_prob_asymptotic(&s, r).unwrap();
        assert!((lp / -(l * l * r / d).sqrt() - 1.0).abs() < 2e-2);
    }

    #[test]
    fn approx_formula_hand_values() {
        // m=1, prefactor 1, p = e^{-2}, r = 10: e²/10
        let v = mct_frequent_reset_approx(1, 10.0, -2.0, 1.0).unwrap();
        assert!((v - 2f64.exp() / 10.0).abs() < 1e-14);
        // m=2 doubles via the factorial
        let v2 = mct_frequent_reset_approx(2, 10.0, -2.0, 1.0).unwrap();
        assert!((v2 - 2.0 * (2f64.exp() / 10.0).powi(2)).abs() < 1e-13);
    }

    #[test]
    fn ln_p_decreasing_in_rate_and_distance() {
        let mk = |b: f64| AsymptoticSetting::Bm1dAsymmetric {
            b,
            diffusivity: 1.0,
        };
        let mut prev = 0.0;
        for r in [1.0, 10.0, 100.0] {
            let lp = log_success_prob_asymptotic(&mk(2.0), r).unwrap();
            assert!(lp < prev);
            prev = lp;
        }
        assert!(
            log_success_prob_asymptotic(&mk(3.0), 5.0).unwrap()
                < log_success_prob_asymptotic(&mk(2.0), 5.0).unwrap()
        );
    }

    #[test]
    fn rejects_swallowed_target() {
        let s = AsymptoticSetting::BallRd {
            radius: 1.0,
            detection_radius: 1.0,
            diffusivity: 1.0,
        };
        assert!(log_success_prob_asymptotic(&s, 1.0).is_err());
        assert!(mct_frequent_reset_approx(1, 1.0, -1.0, 2.0).is_err());
    }
}
