//! Euler–Maruyama sampler of the Brownian interval cover time.
//!
//! Diffusion advances in fixed steps of `dt`; the reset clock truncates the
//! final partial step of each excursion, so reset times are exact and only
//! the diffusion is discretized. Boundary detection happens at step
//! resolution — no bridge correction — which biases the cover time upward by
//! `O(sqrt(dt))`; comparisons against the closed forms carry an explicit
//! discretization allowance on top of the statistical tolerance.

use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use super::{BoundaryHit, CoverSample, SimConfig};
use crate::clock::ResetClock;
use crate::process::{BrownianSpec, IntervalTarget};

/// One cover-time sample of `[-a, b]` for a resetting Brownian searcher.
///
/// Unconstrained mode tracks the running min/max of the path; constrained
/// mode folds the path at the reflecting walls `-a` and `b`, and a wall
/// contact during a step is detected from the pre-fold position. A positive
/// detection radius shrinks the thresholds to `R - a` and `b - R`.
///
/// Returns `None` if the event budget is exhausted.
pub fn simulate_bm_cover<R: Rng + ?Sized>(
    spec: &BrownianSpec,
    target: &IntervalTarget,
    clock: &ResetClock,
    cfg: &SimConfig,
    rng: &mut R,
) -> Option<CoverSample> {
    let lo = -target.effective_a();
    let hi = target.effective_b();
    let (wall_lo, wall_hi) = (-target.a, target.b);
    let dt = cfg.dt;
    let step_sigma = (2.0 * spec.diffusivity * dt).sqrt();

    let mut x = spec.start;
    let mut t = 0.0f64;
    let mut mn = x;
    let mut mx = x;
    let mut n_resets = 0u64;
    let mut first_hit = BoundaryHit::NotApplicable;
    let mut events = 0u64;
    let mut until_reset = clock.sample(rng);

    let mut done_lo = mn <= lo;
    let mut done_hi = mx >= hi;

    loop {
        if done_lo && done_hi {
            return Some(CoverSample {
                cover_time: t,
                n_resets,
                first_boundary_hit: first_hit,
            });
        }
        if events >= cfg.max_events {
            return None;
        }
        events += 1;

        let (step_dt, step_sd, resets_now) = if until_reset < dt {
            (until_reset, (2.0 * spec.diffusivity * until_reset).sqrt(), true)
        } else {
            (dt, step_sigma, false)
        };
        let z: f64 = StandardNormal.sample(rng);
        x += step_sd * z;
        t += step_dt;

        if target.constrained {
            // fold at the walls; the pre-fold excursion proves wall contact
            while x < wall_lo || x > wall_hi {
                if x < wall_lo {
                    mn = wall_lo;
                    x = 2.0 * wall_lo - x;
                } else {
                    mx = wall_hi;
                    x = 2.0 * wall_hi - x;
                }
            }
        }
        if x < mn {
            mn = x;
        }
        if x > mx {
            mx = x;
        }
        if !done_lo && mn <= lo {
            done_lo = true;
            if first_hit == BoundaryHit::NotApplicable {
                first_hit = BoundaryHit::A;
            }
        }
        if !done_hi && mx >= hi {
            done_hi = true;
            if first_hit == BoundaryHit::NotApplicable {
                first_hit = BoundaryHit::B;
            }
        }

        if resets_now {
            x = spec.start;
            n_resets += 1;
            until_reset = clock.sample(rng);
        } else {
            until_reset -= dt;
        }
    }
}
