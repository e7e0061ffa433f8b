//! Mean cover time of the interval `[-a, b]` by a 1D Brownian searcher that
//! resets to the origin at exponential rate `r`.
//!
//! Everything is a function of `α = sqrt(r/D)`. The unconstrained searcher
//! roams the whole line; the constrained one lives between reflecting walls
//! at `-a` and `b`. Both cover times decompose by the strong Markov property
//! into the first exit of `(-a, b)` plus the remaining single-boundary search
//! weighted by the exit-side probabilities `ξ_a`, `ξ_b`; the closed forms
//! below are those compositions collapsed into single expressions.

use crate::numeric::validate_positive;
use crate::Result;

/// Pieces of the interval cover-time composition for a resetting Brownian
/// searcher: the first-exit mean, the exit-side probabilities, the reflected
/// second legs, and `α = sqrt(r/D)`.
#[derive(Debug, Clone, Copy)]
pub struct BmComponents {
    /// Mean first exit time of `(-a, b)` started (and resetting) at 0.
    pub interval_exit_mean: f64,
    /// Probability of exiting at `-a` before `b`.
    pub xi_a: f64,
    /// Probability of exiting at `b` before `-a`.
    pub xi_b: f64,
    /// Remaining mean time to reach `-a` after first exiting at `b`
    /// (reflecting wall at `b`, resetting to 0).
    pub constrained_leg_a: f64,
    /// Remaining mean time to reach `b` after first exiting at `-a`
    /// (reflecting wall at `-a`, resetting to 0).
    pub constrained_leg_b: f64,
    /// `sqrt(r/D)`.
    pub alpha: f64,
    diffusivity: f64,
    rate: f64,
}

impl BmComponents {
    /// Mean exit time of the half line for a searcher at `x0 > 0` resetting
    /// to `xr > 0`, target at the origin:
    /// `(1 - e^{-α x0}) / (r e^{-α xr})`.
    pub fn halfline_exit_mean(&self, x0: f64, xr: f64) -> f64 {
        halfline_exit_mean(x0, xr, self.diffusivity, self.rate)
    }
}

fn check_params(a: f64, b: f64, d: f64, r: f64) -> Result<f64> {
    validate_positive(a, "a")?;
    validate_positive(b, "b")?;
    validate_positive(d, "diffusivity")?;
    validate_positive(r, "resetting rate")?;
    Ok((r / d).sqrt())
}

/// Mean exit time of the half line with initial position `x0`, resetting
/// position `xr` and the absorbing target at the origin.
pub fn halfline_exit_mean(x0: f64, xr: f64, d: f64, r: f64) -> f64 {
    let alpha = (r / d).sqrt();
    // e^{α xr} (1 - e^{-α x0}) / r, prefactor kept separate to avoid overflow
    (alpha * xr).exp() * (-(-alpha * x0).exp_m1()) / r
}

/// All composition pieces at once.
pub fn bm_components(a: f64, b: f64, d: f64, r: f64) -> Result<BmComponents> {
    let alpha = check_params(a, b, d, r)?;
    let m = a.max(b);
    let ea = ((a - m) * alpha).exp(); // <= 1
    let eb = ((b - m) * alpha).exp(); // <= 1, one of the two is exactly 1
    let e2a = (-2.0 * a * alpha).exp();
    let e2b = (-2.0 * b * alpha).exp();
    let e2ab = (-2.0 * (a + b) * alpha).exp();
    let eab = (-(a + b) * alpha).exp();

    // sinh(x α) scaled by e^{-m α}: e^{(x-m)α} (1 - e^{-2xα}) / 2
    let den_s = ea * (1.0 - e2a) + eb * (1.0 - e2b);
    let xi_a = eb * (1.0 - e2b) / den_s;
    let xi_b = ea * (1.0 - e2a) / den_s;

    // interval exit: (e^{min(a,b)α} (1-e^{-2(a+b)α})/den_s - 1) / r
    let mn = a.min(b);
    let interval_exit_mean =
        (mn * alpha).exp() * ((1.0 - e2ab) / den_s - (-mn * alpha).exp()) / r;

    // reflected legs: (cosh((a+b)α) - 1) / (r cosh(xα)) with the wall at the
    // already-visited side; scaled as e^{otherα} [(1+e^{-2(a+b)α}) - 2e^{-(a+b)α}]
    let common = (1.0 + e2ab) - 2.0 * eab;
    let constrained_leg_a = (a * alpha).exp() * common / (r * (1.0 + e2b));
    let constrained_leg_b = (b * alpha).exp() * common / (r * (1.0 + e2a));

    Ok(BmComponents {
        interval_exit_mean,
        xi_a,
        xi_b,
        constrained_leg_a,
        constrained_leg_b,
        alpha,
        diffusivity: d,
        rate: r,
    })
}

/// Scaled numerator/denominator of the unconstrained closed form:
/// returns `(num_s, den_s)` with the cover time `e^{Mα} num_s / (r den_s)`,
/// `M = max(a, b)`.
fn unconstrained_scaled(a: f64, b: f64, alpha: f64) -> (f64, f64) {
    let m = a.max(b);
    let e = |x: f64| ((x - 2.0 * m) * alpha).exp();
    let num_s = e(a + b) + e(2.0 * a) + e(2.0 * b) - e(a) - e(b) - e(0.0);
    let den_s = ((a - m) * alpha).exp() + ((b - m) * alpha).exp();
    (num_s, den_s)
}

/// Mean cover time of `[-a, b]`, searcher free on the whole line:
/// `(e^{(a+b)α} + e^{2aα} + e^{2bα} - e^{aα} - e^{bα} - 1) / (r (e^{aα} + e^{bα}))`.
///
/// Overflows to `inf` only when the value itself exceeds `f64::MAX`; use
/// [`ln_bm_mct_unconstrained`] past that point.
pub fn bm_mct_unconstrained(a: f64, b: f64, d: f64, r: f64) -> Result<f64> {
    let alpha = check_params(a, b, d, r)?;
    let (num_s, den_s) = unconstrained_scaled(a, b, alpha);
    Ok((a.max(b) * alpha).exp() * num_s / (r * den_s))
}

/// `ln` of [`bm_mct_unconstrained`], finite for any representable inputs.
pub fn ln_bm_mct_unconstrained(a: f64, b: f64, d: f64, r: f64) -> Result<f64> {
    let alpha = check_params(a, b, d, r)?;
    let (num_s, den_s) = unconstrained_scaled(a, b, alpha);
    Ok(a.max(b) * alpha + num_s.ln() - den_s.ln() - r.ln())
}

/// Scaled bracket of the constrained closed form: cover time is
/// `e^{Mα} B / r` with `M = max(a, b)`.
fn constrained_scaled_bracket(a: f64, b: f64, alpha: f64) -> f64 {
    let m = a.max(b);
    let mn = a.min(b);
    let e2a = (-2.0 * a * alpha).exp();
    let e2b = (-2.0 * b * alpha).exp();
    let e2ab = (-2.0 * (a + b) * alpha).exp();
    let ea = ((a - m) * alpha).exp();
    let eb = ((b - m) * alpha).exp();
    let den_s = ea * (1.0 - e2a) + eb * (1.0 - e2b);
    let xi_a = eb * (1.0 - e2b) / den_s;
    let xi_b = ea * (1.0 - e2a) / den_s;

    // interval term scaled by e^{-Mα}
    let interval = ((mn - m) * alpha).exp() * (1.0 - e2ab) / den_s - (-m * alpha).exp();
    // (e^{(a+b)α} - 1)^2 legs in the exponential form, scaled by e^{-Mα}
    let sq = {
        let em = (-(a + b) * alpha).exp();
        (1.0 - em) * (1.0 - em)
    };
    let leg_b = ((b - m) * alpha).exp() * sq / (1.0 + e2a); // after exiting at -a
    let leg_a = ((a - m) * alpha).exp() * sq / (1.0 + e2b); // after exiting at b
    interval + xi_a * leg_b + xi_b * leg_a
}

/// Mean cover time of `[-a, b]` between reflecting walls at `-a` and `b`.
pub fn bm_mct_constrained(a: f64, b: f64, d: f64, r: f64) -> Result<f64> {
    let alpha = check_params(a, b, d, r)?;
    Ok((a.max(b) * alpha).exp() * constrained_scaled_bracket(a, b, alpha) / r)
}

/// `ln` of [`bm_mct_constrained`].
pub fn ln_bm_mct_constrained(a: f64, b: f64, d: f64, r: f64) -> Result<f64> {
    let alpha = check_params(a, b, d, r)?;
    Ok(a.max(b) * alpha + constrained_scaled_bracket(a, b, alpha).ln() - r.ln())
}

/// The frequent-resetting product `r · p · E[T_r]` with
/// `p = e^{-max(a,b) α}`, evaluated without forming any large exponential.
///
/// Tends to 1 for `a != b` and to 3/2 for `a == b`; its distance from the
/// limit decays like `e^{-c α}`.
pub fn bm_frequent_reset_ratio(a: f64, b: f64, d: f64, r: f64, constrained: bool) -> Result<f64> {
    let alpha = check_params(a, b, d, r)?;
    if constrained {
        Ok(constrained_scaled_bracket(a, b, alpha))
    } else {
        let (num_s, den_s) = unconstrained_scaled(a, b, alpha);
        Ok(num_s / den_s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // High-precision reference values (50-digit evaluation of the closed
    // forms at the pinned parameter points).
    const UNC1_A1_B2_D1_R1: f64 = 1.086_161_269_630_487_6;
    const UNC_ETR_A1_B2_D1_R1: f64 = 7.021_176_657_759_208;
    const UNC_ETR_A1_B2_D1_R5: f64 = 17.487_326_906_591_37;
    const UNC_ETR_A1_B2_D1_R10: f64 = 55.806_724_927_746_94;
    const CONC_ETR_A1_B2_D1_R5: f64 = 17.289_370_134_441_637;
    const CONC_ETR_A1_B1_D1_R2: f64 = 2.308_177_203_827_430_8;
    const HALFLINE_X3_XR2_D1_R1: f64 = 7.021_176_657_759_208;

    fn rel(x: f64, y: f64) -> f64 {
        (x - y).abs() / y.abs().max(1e-300)
    }

    #[test]
    fn interval_exit_matches_reference() {
        let c = bm_components(1.0, 2.0, 1.0, 1.0).unwrap();
        assert!(rel(c.interval_exit_mean, UNC1_A1_B2_D1_R1) < 1e-13);
    }

    #[test]
    fn symmetric_interval_splits_evenly() {
        let c = bm_components(1.5, 1.5, 0.7, 2.3).unwrap();
        assert!((c.xi_a - 0.5).abs() < 1e-15);
        assert!((c.xi_b - 0.5).abs() < 1e-15);
    }

    #[test]
    fn exit_probabilities_sum_to_one() {
        for (a, b, d, r) in [(1.0, 2.0, 1.0, 1.0), (0.3, 4.0, 2.5, 17.0)] {
            let c = bm_components(a, b, d, r).unwrap();
            assert!((c.xi_a + c.xi_b - 1.0).abs() < 1e-14);
            assert!(c.xi_a > 0.0 && c.xi_a < 1.0);
        }
    }

    #[test]
    fn halfline_vanishes_at_target() {
        let c = bm_components(1.0, 2.0, 1.0, 1.0).unwrap();
        assert!(c.halfline_exit_mean(1e-14, 2.0) < 1e-10);
        assert!(rel(c.halfline_exit_mean(3.0, 2.0), HALFLINE_X3_XR2_D1_R1) < 1e-13);
    }

    #[test]
    fn unconstrained_reference_values() {
        assert!(rel(
            bm_mct_unconstrained(1.0, 2.0, 1.0, 1.0).unwrap(),
            UNC_ETR_A1_B2_D1_R1
        ) < 1e-13);
        assert!(rel(
            bm_mct_unconstrained(1.0, 2.0, 1.0, 5.0).unwrap(),
            UNC_ETR_A1_B2_D1_R5
        ) < 1e-13);
        assert!(rel(
            bm_mct_unconstrained(1.0, 2.0, 1.0, 10.0).unwrap(),
            UNC_ETR_A1_B2_D1_R10
        ) < 1e-13);
    }

    #[test]
    fn constrained_reference_values() {
        assert!(rel(
            bm_mct_constrained(1.0, 2.0, 1.0, 5.0).unwrap(),
            CONC_ETR_A1_B2_D1_R5
        ) < 1e-13);
        assert!(rel(
            bm_mct_constrained(1.0, 1.0, 1.0, 2.0).unwrap(),
            CONC_ETR_A1_B1_D1_R2
        ) < 1e-13);
    }

    #[test]
    fn unconstrained_composition_identity() {
        // closed form == interval exit + ξ_a · halfline(a+b, b) + ξ_b · halfline(a+b, a)
        for (a, b, d, r) in [
            (1.0, 2.0, 1.0, 1.0),
            (1.0, 1.0, 1.0, 7.0),
            (0.4, 3.2, 0.6, 11.0),
        ] {
            let c = bm_components(a, b, d, r).unwrap();
            let composed = c.interval_exit_mean
                + c.xi_a * c.halfline_exit_mean(a + b, b)
                + c.xi_b * c.halfline_exit_mean(a + b, a);
            let closed = bm_mct_unconstrained(a, b, d, r).unwrap();
            assert!(rel(closed, composed) < 1e-12, "a={a} b={b} d={d} r={r}");
        }
    }

    #[test]
    fn symmetric_numerator_factorization() {
        // a == b collapses the numerator to (3e^{aα}+1)(e^{aα}-1).
        let (a, d) = (1.0, 1.0);
        for k in 0..20 {
            let r = 0.1 * 1.45f64.powi(k);
            let alpha = (r / d).sqrt();
            let ea = (a * alpha).exp();
            let factored = (3.0 * ea + 1.0) * (ea - 1.0) / (2.0 * r * ea);
            let closed = bm_mct_unconstrained(a, a, d, r).unwrap();
            assert!(rel(closed, factored) < 1e-12, "r={r}");
        }
    }

    #[test]
    fn ratio_tends_to_one_asymmetric() {
        // r p E[T_r] -> 1 with p = e^{-bα}, a < b. The true deviation is
        // e^{-3α}, already ~1e-13 at r = 100: monotonicity is asserted up to
        // the double-precision floor the evaluation bottoms out on.
        let mut prev_dev = f64::INFINITY;
        for r in [1e2, 1e3, 1e4, 1e5] {
            let ratio = bm_frequent_reset_ratio(1.0, 2.0, 1.0, r, false).unwrap();
            let dev = (ratio - 1.0).abs();
            assert!(
                dev < prev_dev + 1e-12,
                "deviation not decreasing at r={r}: {dev} after {prev_dev}"
            );
            prev_dev = dev;
        }
        assert!(prev_dev < 5e-2);
    }

    #[test]
    fn ratio_tends_to_three_halves_symmetric() {
        let mut prev_dev = f64::INFINITY;
        for r in [1e2, 1e3, 1e4, 1e5] {
            let ratio = bm_frequent_reset_ratio(1.0, 1.0, 1.0, r, false).unwrap();
            let dev = (ratio - 1.5).abs();
            assert!(dev < prev_dev + 1e-12, "r={r}");
            prev_dev = dev;
        }
        assert!(prev_dev < 5e-2);
    }

    #[test]
    fn constrained_to_unconstrained_ratio_tends_to_one() {
        // both tend to 1/(r e^{-bα}) for a < b; log-space gap bottoms out on
        // the rounding floor scaled by Mα
        let mut prev = f64::INFINITY;
        for k in 1..=4 {
            let r = 10f64.powi(k);
            let lc = ln_bm_mct_constrained(1.0, 2.0, 1.0, r).unwrap();
            let lu = ln_bm_mct_unconstrained(1.0, 2.0, 1.0, r).unwrap();
            let gap = (lc - lu).abs();
            assert!(gap < prev + 1e-11, "r={r}: gap {gap} after {prev}");
            prev = gap;
        }
        assert!(prev < 1e-3);
    }

    #[test]
    fn constrained_leg_continuous_as_b_shrinks() {
        // with a + b fixed, the leg toward a tends to a finite limit as
        // b -> 0+ (its denominator cosh(bα) -> 1: no pole)
        let (total, d, r) = (3.0, 1.0, 2.0);
        let alpha = (r / d as f64).sqrt();
        let limit = ((total * alpha).cosh() - 1.0) / r;
        let mut prev_gap = f64::INFINITY;
        for b in [0.5, 0.1, 1e-3, 1e-6] {
            let c = bm_components(total - b, b, d, r).unwrap();
            assert!(c.constrained_leg_a.is_finite() && c.constrained_leg_a > 0.0);
            let gap = (c.constrained_leg_a - limit).abs();
            assert!(gap < prev_gap, "b={b}: gap {gap} after {prev_gap}");
            prev_gap = gap;
        }
        assert!(prev_gap < 1e-5 * limit);
    }

    #[test]
    fn large_rate_stays_finite_in_log_space() {
        // linear value may overflow past ~1e308; the ln form must not
        let ln = ln_bm_mct_unconstrained(1.0, 2.0, 1.0, 1e6).unwrap();
        assert!(ln.is_finite() && ln > 0.0);
        let ln_c = ln_bm_mct_constrained(1.0, 2.0, 1.0, 1e6).unwrap();
        assert!(ln_c.is_finite());
        // moderate parameters stay finite in linear space across the range
        for k in 0..=6 {
            let r = 10f64.powi(k);
            let v = bm_mct_unconstrained(0.5, 0.5, 1.0, r).unwrap();
            assert!(v.is_finite() && v > 0.0, "r={r}");
        }
    }

    #[test]
    fn diverges_as_rate_vanishes() {
        // unconstrained MCT -> infinity as r -> 0+ (no resetting: infinite MFPT)
        let v1 = bm_mct_unconstrained(1.0, 2.0, 1.0, 1e-2).unwrap();
        let v2 = bm_mct_unconstrained(1.0, 2.0, 1.0, 1e-4).unwrap();
        let v3 = bm_mct_unconstrained(1.0, 2.0, 1.0, 1e-6).unwrap();
        assert!(v2 > 5.0 * v1);
        assert!(v3 > 5.0 * v2);
    }

    #[test]
    fn symmetric_constrained_has_benefit_window() {
        // for a == b there are rates with MCT below the r -> 0 limit
        let a = 1.0;
        let d = 1.0;
        let limit = bm_mct_constrained(a, a, d, 1e-9).unwrap();
        let best = (0..60)
            .map(|k| bm_mct_constrained(a, a, d, 0.05 * 1.2f64.powi(k)).unwrap())
            .fold(f64::INFINITY, f64::min);
        assert!(
            best < limit,
            "no benefit window found: best {best} vs limit {limit}"
        );
    }

    #[test]
    fn rejects_invalid_parameters() {
        assert!(bm_mct_unconstrained(-1.0, 2.0, 1.0, 1.0).is_err());
        assert!(bm_mct_unconstrained(1.0, 2.0, 0.0, 1.0).is_err());
        assert!(bm_mct_constrained(1.0, 2.0, 1.0, -3.0).is_err());
    }
}
