//! Event-driven run-and-tumble cover-time samplers. Exact in distribution:
//! between events the position is linear, so threshold crossings and wall
//! contacts are resolved analytically inside each segment — there is no
//! time-step bias.
//!
//! Two samplers ship because the unconstrained interval admits two distinct
//! cover-time models that agree only asymptotically:
//!
//! - [`simulate_rtp_cover`] tracks the physical path: running min/max of one
//!   continuous trajectory, whose velocity points outward at the moment the
//!   first boundary is reached.
//! - [`simulate_rtp_cover_staged`] samples the staged composition behind the
//!   unconstrained closed form: the first exit of the interval, then a fresh
//!   single-boundary search started from the resetting configuration
//!   (position at the origin, fresh velocity). The velocity memory at the
//!   exit is deliberately dropped.
//!
//! For the constrained interval the two models coincide (the reflecting wall
//! erases the outward velocity), and the path sampler reproduces the
//! constrained closed form directly.

use rand::Rng;
use rand_distr::{Distribution, Exp1};

use super::{BoundaryHit, CoverSample, SimConfig};
use crate::clock::ResetClock;
use crate::process::{IntervalTarget, RtpSpec, VelocitySign};

fn fresh_dir<R: Rng + ?Sized>(spec: &RtpSpec, rng: &mut R) -> f64 {
    match spec.initial_velocity {
        VelocitySign::Plus => 1.0,
        VelocitySign::Minus => -1.0,
        VelocitySign::SymmetricRandom => {
            if rng.random::<bool>() {
                1.0
            } else {
                -1.0
            }
        }
    }
}

/// Physical path-tracked cover time of `[-a, b]`.
pub fn simulate_rtp_cover<R: Rng + ?Sized>(
    spec: &RtpSpec,
    target: &IntervalTarget,
    clock: &ResetClock,
    cfg: &SimConfig,
    rng: &mut R,
) -> Option<CoverSample> {
    if target.constrained {
        simulate_constrained(spec, target, clock, cfg, rng)
    } else {
        simulate_unconstrained_path(spec, target, clock, cfg, rng)
    }
}

fn simulate_unconstrained_path<R: Rng + ?Sized>(
    spec: &RtpSpec,
    target: &IntervalTarget,
    clock: &ResetClock,
    cfg: &SimConfig,
    rng: &mut R,
) -> Option<CoverSample> {
    let lo = -target.effective_a();
    let hi = target.effective_b();
    let v = spec.speed;
    let mut x = 0.0f64;
    let mut dir = fresh_dir(spec, rng);
    let mut t = 0.0f64;
    let (mut mn, mut mx) = (0.0f64, 0.0f64);
    let (mut done_lo, mut done_hi) = (false, false);
    let mut first_hit = BoundaryHit::NotApplicable;
    let mut n_resets = 0u64;
    let mut until_reset = clock.sample(rng);
    let mut events = 0u64;

    loop {
        if events >= cfg.max_events {
            return None;
        }
        events += 1;
        let tumble_in: f64 = {
            let e: f64 = Exp1.sample(rng);
            e / spec.switch_rate
        };
        let seg = tumble_in.min(until_reset);
        let x_end = x + dir * v * seg;

        if dir > 0.0 {
            if !done_hi && x_end >= hi {
                let t_hit = (hi - x) / v;
                if done_lo {
                    return Some(CoverSample {
                        cover_time: t + t_hit,
                        n_resets,
                        first_boundary_hit: first_hit,
                    });
                }
                done_hi = true;
                if first_hit == BoundaryHit::NotApplicable {
                    first_hit = BoundaryHit::B;
                }
            }
            mx = mx.max(x_end);
        } else {
            if !done_lo && x_end <= lo {
                let t_hit = (x - lo) / v;
                if done_hi {
                    return Some(CoverSample {
                        cover_time: t + t_hit,
                        n_resets,
                        first_boundary_hit: first_hit,
                    });
                }
                done_lo = true;
                if first_hit == BoundaryHit::NotApplicable {
                    first_hit = BoundaryHit::A;
                }
            }
            mn = mn.min(x_end);
        }

        t += seg;
        x = x_end;
        if tumble_in < until_reset {
            until_reset -= seg;
            dir = -dir;
        } else {
            x = 0.0;
            dir = fresh_dir(spec, rng);
            n_resets += 1;
            until_reset = clock.sample(rng);
        }
    }
}

fn simulate_constrained<R: Rng + ?Sized>(
    spec: &RtpSpec,
    target: &IntervalTarget,
    clock: &ResetClock,
    cfg: &SimConfig,
    rng: &mut R,
) -> Option<CoverSample> {
    let lo = -target.effective_a();
    let hi = target.effective_b();
    let (wall_lo, wall_hi) = (-target.a, target.b);
    let v = spec.speed;
    let mut x = 0.0f64;
    let mut dir = fresh_dir(spec, rng);
    let mut t = 0.0f64;
    let (mut done_lo, mut done_hi) = (false, false);
    let mut first_hit = BoundaryHit::NotApplicable;
    let mut n_resets = 0u64;
    let mut until_reset = clock.sample(rng);
    let mut events = 0u64;

    loop {
        if events >= cfg.max_events {
            return None;
        }
        events += 1;
        let tumble_in: f64 = {
            let e: f64 = Exp1.sample(rng);
            e / spec.switch_rate
        };
        let seg = tumble_in.min(until_reset);

        // zigzag between the walls with instant velocity reversal
        let mut rem = seg;
        while rem > 0.0 {
            let t_wall = if dir > 0.0 {
                (wall_hi - x) / v
            } else {
                (x - wall_lo) / v
            };
            let bounced = t_wall <= rem;
            let fly = if bounced { t_wall } else { rem };
            // land exactly on the wall when bouncing: a rounded x_end one
            // ulp short of the wall would silently lose the contact
            let x_end = if bounced {
                if dir > 0.0 {
                    wall_hi
                } else {
                    wall_lo
                }
            } else {
                x + dir * v * fly
            };
            if dir > 0.0 && !done_hi && x_end >= hi {
                let t_hit = (hi - x) / v;
                if done_lo {
                    return Some(CoverSample {
                        cover_time: t + t_hit,
                        n_resets,
                        first_boundary_hit: first_hit,
                    });
                }
                done_hi = true;
                if first_hit == BoundaryHit::NotApplicable {
                    first_hit = BoundaryHit::B;
                }
            }
            if dir < 0.0 && !done_lo && x_end <= lo {
                let t_hit = (x - lo) / v;
                if done_hi {
                    return Some(CoverSample {
                        cover_time: t + t_hit,
                        n_resets,
                        first_boundary_hit: first_hit,
                    });
                }
                done_lo = true;
                if first_hit == BoundaryHit::NotApplicable {
                    first_hit = BoundaryHit::A;
                }
            }
            t += fly;
            rem -= fly;
            x = x_end;
            if bounced {
                dir = -dir;
            }
        }

        if tumble_in < until_reset {
            until_reset -= seg;
            dir = -dir;
        } else {
            x = 0.0;
            dir = fresh_dir(spec, rng);
            n_resets += 1;
            until_reset = clock.sample(rng);
        }
    }
}

/// Staged cover-time model of the unconstrained interval: first exit of
/// `(-a, b)`, then a fresh search for the remaining boundary restarted from
/// the resetting configuration. Matches the unconstrained closed form.
///
/// Constrained targets are delegated to the path sampler, with which the
/// staged model coincides.
pub fn simulate_rtp_cover_staged<R: Rng + ?Sized>(
    spec: &RtpSpec,
    target: &IntervalTarget,
    clock: &ResetClock,
    cfg: &SimConfig,
    rng: &mut R,
) -> Option<CoverSample> {
    if target.constrained {
        return simulate_constrained(spec, target, clock, cfg, rng);
    }
    let lo = -target.effective_a();
    let hi = target.effective_b();
    let v = spec.speed;
    let mut events = 0u64;
    let mut n_resets = 0u64;
    let mut t = 0.0f64;

    // stage 1: first exit of (lo, hi)
    let mut x = 0.0f64;
    let mut dir = fresh_dir(spec, rng);
    let mut until_reset = clock.sample(rng);
    let first_hit;
    loop {
        if events >= cfg.max_events {
            return None;
        }
        events += 1;
        let tumble_in: f64 = {
            let e: f64 = Exp1.sample(rng);
            e / spec.switch_rate
        };
        let seg = tumble_in.min(until_reset);
        let x_end = x + dir * v * seg;
        if dir > 0.0 && x_end >= hi {
            t += (hi - x) / v;
            first_hit = BoundaryHit::B;
            break;
        }
        if dir < 0.0 && x_end <= lo {
            t += (x - lo) / v;
            first_hit = BoundaryHit::A;
            break;
        }
        t += seg;
        x = x_end;
        if tumble_in < until_reset {
            until_reset -= seg;
            dir = -dir;
        } else {
            x = 0.0;
            dir = fresh_dir(spec, rng);
            n_resets += 1;
            until_reset = clock.sample(rng);
        }
    }

    // stage 2: fresh single-boundary search from the resetting configuration
    let dist = match first_hit {
        BoundaryHit::B => -lo, // remaining boundary is the left one
        _ => hi,
    };
    let mut x = 0.0f64;
    let mut dir = fresh_dir(spec, rng);
    let mut until_reset = clock.sample(rng);
    loop {
        if events >= cfg.max_events {
            return None;
        }
        events += 1;
        let tumble_in: f64 = {
            let e: f64 = Exp1.sample(rng);
            e / spec.switch_rate
        };
        let seg = tumble_in.min(until_reset);
        let x_end = x + dir * v * seg;
        if dir > 0.0 && x_end >= dist {
            return Some(CoverSample {
                cover_time: t + (dist - x) / v,
                n_resets,
                first_boundary_hit: first_hit,
            });
        }
        t += seg;
        x = x_end;
        if tumble_in < until_reset {
            until_reset -= seg;
            dir = -dir;
        } else {
            x = 0.0;
            dir = fresh_dir(spec, rng);
            n_resets += 1;
            until_reset = clock.sample(rng);
        }
    }
}
