//! Exact and asymptotic cover-time analytics on finite continuous-time
//! Markov chains with Poissonian resetting to the start node.
//!
//! The pipeline: validate a generator ([`NetworkSpec`]), layer the support
//! graph by hop distance ([`GeodesicAnalysis`]), accumulate rate products
//! over geodesics ([`lambda_of_set`]), and from those evaluate the
//! frequent-resetting moment asymptote ([`theorem2_moment`]). Exact mean
//! cover times at any rate come from inclusion–exclusion over first-passage
//! moments ([`mct_exact_moments`]), independently cross-checkable against an
//! expanded covering chain ([`covering_chain_mct`]). The small-rate expansion
//! yields a criterion for when weak resetting helps at all
//! ([`reset_benefit_criterion`]) and a rough optimal rate
//! ([`network_ropt_estimate`]).

pub mod benefit;
pub mod exact;
pub mod file;
pub mod geodesic;
pub mod lattice;
pub mod spec;

pub use benefit::{
    network_ropt_estimate, reset_benefit_criterion, small_r_mct_expansion,
    small_r_mct_expansion_coefficients, tau0_moment_stats, BenefitReport, Tau0Stats,
};
pub use exact::{
    covering_chain_mct, hitting_prob_exact, mct_exact_moments, mfpt_moments_with_reset,
    theorem2_moment,
};
pub use file::{load_network, network_to_toml, parse_network};
pub use geodesic::{enumerate_geodesics, lambda_of_set, validate_network, GeodesicAnalysis};
pub use lattice::{lattice_p_star, Lattice2d, LatticePStar};
pub use spec::NetworkSpec;

/// Hard cap on inclusion–exclusion target sets: `2^20` subsets.
pub const SUBSET_CAP: u64 = 20;

/// Hard cap on dense linear solves.
pub const DENSE_SOLVE_CAP: usize = 2000;
