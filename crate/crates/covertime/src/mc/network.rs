//! Exact Gillespie sampler of network cover times with resetting.
//!
//! The next chain jump (exponential in the state's exit rate) races the
//! pending reset time drawn from the clock; whichever fires first happens.
//! For an exponential clock this is distributionally identical to adding a
//! rate-`r` edge to the start node, and the race handles the deterministic
//! and gamma clocks exactly as well. The visited-target mask updates on
//! entry; the cover time is the moment it fills.

use rand::Rng;
use rand_distr::{Distribution, Exp1};

use super::{BoundaryHit, CoverSample, SimConfig};
use crate::clock::ResetClock;
use crate::network::{validate_network, NetworkSpec};
use crate::{Error, Result};

/// Preprocessed jump tables for repeated sampling of one network.
#[derive(Debug, Clone)]
pub struct NetworkSampler {
    neighbors: Vec<Vec<(usize, f64)>>,
    exit_rate: Vec<f64>,
    start: usize,
    target_bit: Vec<Option<u32>>,
    full_mask: u64,
    start_mask: u64,
}

impl NetworkSampler {
    /// Validates the network and rejects trivially-covered target sets
    /// (targets contained in the start node).
    pub fn new(spec: &NetworkSpec) -> Result<Self> {
        validate_network(spec)?;
        let targets: Vec<usize> = spec.targets().iter().copied().collect();
        if targets.len() > 64 {
            return Err(Error::InvalidParameter(format!(
                "Gillespie sampler tracks at most 64 targets, got {}",
                targets.len()
            )));
        }
        let mut target_bit = vec![None; spec.n_states()];
        for (b, &t) in targets.iter().enumerate() {
            target_bit[t] = Some(b as u32);
        }
        let full_mask = if targets.len() == 64 {
            u64::MAX
        } else {
            (1u64 << targets.len()) - 1
        };
        let start_mask = match target_bit[spec.start()] {
            Some(b) => 1u64 << b,
            None => 0,
        };
        if start_mask == full_mask {
            return Err(Error::InvalidParameter(
                "target set is covered by the start node at time zero".into(),
            ));
        }
        let neighbors: Vec<Vec<(usize, f64)>> = (0..spec.n_states())
            .map(|i| spec.neighbors(i).collect())
            .collect();
        let exit_rate: Vec<f64> = (0..spec.n_states()).map(|i| spec.exit_rate(i)).collect();
        Ok(Self {
            neighbors,
            exit_rate,
            start: spec.start(),
            target_bit,
            full_mask,
            start_mask,
        })
    }

    /// One exact cover-time sample; `None` when the event budget runs out.
    pub fn sample<R: Rng + ?Sized>(
        &self,
        clock: &ResetClock,
        cfg: &SimConfig,
        rng: &mut R,
    ) -> Option<CoverSample> {
        let mut pos = self.start;
        let mut mask = self.start_mask;
        let mut t = 0.0f64;
        let mut n_resets = 0u64;
        let mut until_reset = clock.sample(rng);
        let mut events = 0u64;

        loop {
            if events >= cfg.max_events {
                return None;
            }
            events += 1;
            let q = self.exit_rate[pos];
            let jump_in = if q > 0.0 {
                let e: f64 = Exp1.sample(rng);
                e / q
            } else {
                f64::INFINITY
            };
            if jump_in < until_reset {
                t += jump_in;
                until_reset -= jump_in;
                // pick the destination proportionally to its rate
                let mut u: f64 = rng.random::<f64>() * q;
                let row = &self.neighbors[pos];
                let mut dest = row[row.len() - 1].0;
                for &(j, rate) in row {
                    if u < rate {
                        dest = j;
                        break;
                    }
                    u -= rate;
                }
                pos = dest;
                if let Some(b) = self.target_bit[pos] {
                    mask |= 1u64 << b;
                    if mask == self.full_mask {
                        return Some(CoverSample {
                            cover_time: t,
                            n_resets,
                            first_boundary_hit: BoundaryHit::NotApplicable,
                        });
                    }
                }
            } else {
                t += until_reset;
                pos = self.start;
                n_resets += 1;
                until_reset = clock.sample(rng);
            }
        }
    }
}

/// Convenience one-shot wrapper around [`NetworkSampler`].
pub fn simulate_network_cover<R: Rng + ?Sized>(
    spec: &NetworkSpec,
    clock: &ResetClock,
    cfg: &SimConfig,
    rng: &mut R,
) -> Result<Option<CoverSample>> {
    Ok(NetworkSampler::new(spec)?.sample(clock, cfg, rng))
}
