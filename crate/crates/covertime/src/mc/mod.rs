//! Monte Carlo cover-time samplers with reproducible parallel replication.
//!
//! Replicates are embarrassingly parallel: replicate `i` owns the ChaCha
//! stream `(seed, i)` and the reduction runs in replicate-index order, so a
//! run is bit-identical regardless of thread count. Samples that exhaust the
//! event budget are excluded and counted; more than 1% of them fails the
//! whole estimate rather than silently biasing it downward.

pub mod bm;
pub mod network;
pub mod rtp;

use rayon::prelude::*;

use crate::rng::replicate_rng;
use crate::stats::{accumulate_estimate, MomentEstimate};
use crate::{Error, Result};

pub use bm::simulate_bm_cover;
pub use network::{simulate_network_cover, NetworkSampler};
pub use rtp::{simulate_rtp_cover, simulate_rtp_cover_staged};

/// Which interval boundary the searcher contacted first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryHit {
    /// the left boundary (at `-a`)
    A,
    /// the right boundary (at `b`)
    B,
    /// not meaningful for this sampler (networks)
    NotApplicable,
}

/// One simulated cover time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoverSample {
    pub cover_time: f64,
    pub n_resets: u64,
    pub first_boundary_hit: BoundaryHit,
}

/// Replication settings for a Monte Carlo run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimConfig {
    pub n_replicates: usize,
    pub seed: u64,
    /// Euler–Maruyama step (Brownian sampler only).
    pub dt: f64,
    /// Per-replicate event budget (steps, tumbles, jumps, resets).
    pub max_events: u64,
}

impl Default for SimConfig {
    fn default() -> Self {
        Self {
            n_replicates: 10_000,
            seed: 0,
            dt: 1e-4,
            max_events: 100_000_000,
        }
    }
}

impl SimConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_replicates < 2 {
            return Err(Error::InvalidParameter(format!(
                "need at least 2 replicates, got {}",
                self.n_replicates
            )));
        }
        if !(self.dt > 0.0) || !self.dt.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "dt must be positive and finite, got {}",
                self.dt
            )));
        }
        if self.max_events == 0 {
            return Err(Error::InvalidParameter("max_events must be positive".into()));
        }
        Ok(())
    }
}

/// Outcome of a replicated run: per-order moment estimates plus the
/// incomplete-sample count.
#[derive(Debug, Clone)]
pub struct McRun {
    pub estimates: Vec<MomentEstimate>,
    pub n_incomplete: usize,
}

impl McRun {
    pub fn mean(&self) -> &MomentEstimate {
        &self.estimates[0]
    }
}

/// Run `cfg.n_replicates` independent samples of `sample_fn` on split
/// streams and estimate the requested moments of the cover time.
///
/// Deterministic for a fixed `(seed, n_replicates)`. `sample_fn` returns
/// `None` when a replicate exceeds its event budget; more than 1% incomplete
/// is a hard failure.
pub fn estimate_mct<F>(cfg: &SimConfig, orders: &[u32], sample_fn: F) -> Result<McRun>
where
    F: Fn(&mut rand_chacha::ChaCha8Rng) -> Option<CoverSample> + Sync,
{
    cfg.validate()?;
    if orders.is_empty() {
        return Err(Error::InvalidParameter("no moment orders requested".into()));
    }
    let samples: Vec<Option<CoverSample>> = (0..cfg.n_replicates as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = replicate_rng(cfg.seed, i);
            sample_fn(&mut rng)
        })
        .collect();
    let n_incomplete = samples.iter().filter(|s| s.is_none()).count();
    if n_incomplete * 100 > cfg.n_replicates {
        return Err(Error::TooManyIncomplete {
            failed: n_incomplete,
            total: cfg.n_replicates,
        });
    }
    let times: Vec<f64> = samples
        .iter()
        .flatten()
        .map(|s| s.cover_time)
        .collect();
    let estimates = orders
        .iter()
        .map(|&m| accumulate_estimate(&times, m, cfg.seed))
        .collect::<Result<Vec<_>>>()?;
    Ok(McRun {
        estimates,
        n_incomplete,
    })
}
