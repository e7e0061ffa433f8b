//! Cover-time statistics of stochastic searchers under resetting.
//!
//! A *cover time* is the first time a searcher's detected region contains a
//! whole target set; *resetting* returns the searcher to its starting point
//! at random times `σ = Y/r` with unit-mean `Y` and rate `r`. This crate
//! computes and cross-validates cover-time statistics three independent ways:
//!
//! - **Closed forms** for a 1D Brownian searcher and a 1D run-and-tumble
//!   particle on an interval, unconstrained or between reflecting walls,
//!   under exponential resetting ([`continuum`]).
//! - **Exact linear algebra** on finite continuous-time Markov chains:
//!   geodesic/rate-product combinatorics, frequent-resetting moment
//!   asymptotics, inclusion–exclusion mean cover times, a covering-chain
//!   oracle, and a small-`r` benefit criterion ([`network`]).
//! - **Monte Carlo samplers** for all three process classes with
//!   reproducible, seed-split parallel replication ([`mc`]).
//!
//! Frequent-resetting approximations, success-probability asymptotics and
//! optimal-rate estimators live in [`continuum::asymptotic`]; configuration
//! driven parameter sweeps with CSV/plot-data output in [`sweep`].
//!
//! Start with the runnable examples (`cargo run --release --example ...`):
//! each major capability has one. The `covertime` binary exposes the same
//! machinery as `analytic`, `sweep` and `network report` subcommands.

pub mod clock;
pub mod continuum;
pub mod error;
pub mod mc;
pub mod network;
pub(crate) mod numeric;
pub mod process;
pub mod rng;
pub mod stats;
pub mod sweep;

pub use clock::{ClockFamily, ResetClock};
pub use error::Error;
pub use process::{BrownianSpec, IntervalTarget, RtpSpec, VelocitySign};
pub use stats::MomentEstimate;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
