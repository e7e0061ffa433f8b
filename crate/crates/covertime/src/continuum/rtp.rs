//! Mean cover time of the symmetric interval `[-a, a]` by a 1D
//! run-and-tumble particle (speed `v`, tumble rate `γ`) resetting to the
//! origin at exponential rate `r`.
//!
//! Everything is a function of `c_r = sqrt(r (r + 2γ)) / v`. The quantity
//! `r + 2γ - v c_r` that appears as a denominator is evaluated through its
//! algebraic equivalent `2γ(r + 2γ) / (r + 2γ + v c_r)`, which is manifestly
//! positive (the nominal pole is unreachable for `γ > 0`) and free of the
//! cancellation the raw difference suffers at large `r`.
//!
//! The unconstrained closed form is the sum of the interval first-exit mean
//! and a half-line search restarted from the resetting configuration
//! (position at distance `a` from the remaining endpoint, fresh symmetric
//! velocity). That restart is the model behind the formula; the sampler
//! distinction it induces is covered in [`crate::mc::rtp`].

use crate::numeric::validate_positive;
use crate::Result;

/// Pieces of the RTP cover-time composition.
#[derive(Debug, Clone, Copy)]
pub struct RtpComponents {
    /// Mean first exit time of `(-a, a)` started (and resetting) at 0.
    pub interval_exit_mean: f64,
    /// Mean half-line search time from the resetting configuration.
    pub halfline_exit_mean: f64,
    /// Remaining mean time to reach `-a` after first exiting at `a`
    /// (reflecting wall, resetting to 0).
    pub constrained_leg: f64,
    /// `sqrt(r (r + 2γ)) / v`.
    pub c_r: f64,
}

struct Scaled {
    c: f64,
    ac: f64,
    /// sqrt(r / (r + 2γ))
    s: f64,
    /// e^{-a c_r}
    e1: f64,
    /// e^{-2 a c_r}
    e2: f64,
    /// r + 2γ - v c_r, cancellation-free
    gap: f64,
}

fn scaled(a: f64, v: f64, gamma: f64, r: f64) -> Result<Scaled> {
    validate_positive(a, "a")?;
    validate_positive(v, "speed")?;
    validate_positive(gamma, "switch rate")?;
    validate_positive(r, "resetting rate")?;
    let vc = (r * (r + 2.0 * gamma)).sqrt();
    let c = vc / v;
    debug_assert!(vc < r + 2.0 * gamma, "pole r + 2γ = v c_r is unreachable");
    let gap = 2.0 * gamma * (r + 2.0 * gamma) / (r + 2.0 * gamma + vc);
    let ac = a * c;
    Ok(Scaled {
        c,
        ac,
        s: (r / (r + 2.0 * gamma)).sqrt(),
        e1: (-ac).exp(),
        e2: (-2.0 * ac).exp(),
        gap,
    })
}

/// Interval exit, half-line and reflected-leg means plus `c_r`.
pub fn rtp_components(a: f64, v: f64, gamma: f64, r: f64) -> Result<RtpComponents> {
    let p = scaled(a, v, gamma, r)?;
    let eac = p.ac.exp();
    // (cosh + s sinh - 1)/r, scaled
    let interval_exit_mean = eac * ((1.0 + p.s) / 2.0 + (1.0 - p.s) * p.e2 / 2.0 - p.e1) / r;
    // (2γ e^{a c}/gap - 1)/r
    let halfline_exit_mean = eac * (2.0 * gamma / p.gap - p.e1) / r;
    // 2 (v c sinh + r cosh) tanh / (r v c)
    let vc = v * p.c;
    let constrained_leg =
        eac * (vc * (1.0 - p.e2) + r * (1.0 + p.e2)) * p.ac.tanh() / (r * vc);
    Ok(RtpComponents {
        interval_exit_mean,
        halfline_exit_mean,
        constrained_leg,
        c_r: p.c,
    })
}

fn unconstrained_bracket(gamma: f64, p: &Scaled) -> f64 {
    (1.0 + p.s) / 2.0 + (1.0 - p.s) * p.e2 / 2.0 + 2.0 * gamma / p.gap - 2.0 * p.e1
}

/// Unconstrained mean cover time of `[-a, a]`:
/// `(cosh(a c_r) + sqrt(r/(r+2γ)) sinh(a c_r) + 2γ e^{a c_r}/(r+2γ-v c_r) - 2)/r`.
pub fn rtp_mct_unconstrained(a: f64, v: f64, gamma: f64, r: f64) -> Result<f64> {
    let p = scaled(a, v, gamma, r)?;
    Ok(p.ac.exp() * unconstrained_bracket(gamma, &p) / r)
}

/// `ln` of [`rtp_mct_unconstrained`].
pub fn ln_rtp_mct_unconstrained(a: f64, v: f64, gamma: f64, r: f64) -> Result<f64> {
    let p = scaled(a, v, gamma, r)?;
    Ok(p.ac + unconstrained_bracket(gamma, &p).ln() - r.ln())
}

fn constrained_bracket(v: f64, r: f64, p: &Scaled) -> f64 {
    // v c cosh + sinh (2 v c tanh + 3 r) - v c, scaled by e^{-a c}
    let vc = v * p.c;
    vc * (1.0 + p.e2) / 2.0 + (1.0 - p.e2) * (2.0 * vc * p.ac.tanh() + 3.0 * r) / 2.0
        - vc * p.e1
}

/// Mean cover time of `[-a, a]` between reflecting walls at `±a`.
pub fn rtp_mct_constrained(a: f64, v: f64, gamma: f64, r: f64) -> Result<f64> {
    let p = scaled(a, v, gamma, r)?;
    Ok(p.ac.exp() * constrained_bracket(v, r, &p) / (r * v * p.c))
}

/// `ln` of [`rtp_mct_constrained`].
pub fn ln_rtp_mct_constrained(a: f64, v: f64, gamma: f64, r: f64) -> Result<f64> {
    let p = scaled(a, v, gamma, r)?;
    Ok(p.ac + constrained_bracket(v, r, &p).ln() - (r * v * p.c).ln())
}

/// The frequent-resetting product `r · p · E[T_r]` with
/// `p = e^{-a(γ+r)/v} / 2`, formed without any large exponential: the
/// exponent collapses to `a(c_r - (r+γ)/v) = -aγ² / (v(v c_r + r + γ))`.
///
/// Tends to 3/2 for both the unconstrained and the constrained cover.
pub fn rtp_frequent_reset_ratio(
    a: f64,
    v: f64,
    gamma: f64,
    r: f64,
    constrained: bool,
) -> Result<f64> {
    let p = scaled(a, v, gamma, r)?;
    let vc = v * p.c;
    let delta = -a * gamma * gamma / (v * (vc + r + gamma));
    let bracket = if constrained {
        constrained_bracket(v, r, &p) / vc
    } else {
        unconstrained_bracket(gamma, &p)
    };
    Ok(0.5 * delta.exp() * bracket)
}
