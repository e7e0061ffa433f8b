//! Closed-form mean cover times for 1D searchers under exponential resetting,
//! frequent-resetting asymptotics, and optimal-rate estimators.
//!
//! All expressions are evaluated in scaled form: the dominant exponential is
//! factored out so that resetting rates up to `1e6` (and far beyond in the
//! `ln_*` variants) neither overflow nor cancel. Every mean cover time comes
//! in two algebraic routes — the single closed expression and its
//! first-exit/second-leg composition — which the test suite holds to 1e-12
//! relative agreement.

pub mod asymptotic;
pub mod bm;
pub mod minimize;
pub mod rtp;

pub use asymptotic::{
    log_success_prob_asymptotic, mct_frequent_reset_approx, optimal_rate_estimate,
    AsymptoticSetting,
};
pub use bm::{
    bm_components, bm_frequent_reset_ratio, bm_mct_constrained, bm_mct_unconstrained,
    ln_bm_mct_constrained, ln_bm_mct_unconstrained, BmComponents,
};
pub use minimize::minimize_rate;
pub use rtp::{
    ln_rtp_mct_constrained, ln_rtp_mct_unconstrained, rtp_components, rtp_frequent_reset_ratio,
    rtp_mct_constrained, rtp_mct_unconstrained, RtpComponents,
};

use crate::clock::ResetClock;
use crate::{Error, Result};

/// The closed forms in this module hold for Poissonian resetting only;
/// anything else is delegated to Monte Carlo.
pub fn require_exponential(clock: &ResetClock) -> Result<()> {
    if clock.is_exponential() {
        Ok(())
    } else {
        Err(Error::NonExponentialClock(clock.family_name()))
    }
}
