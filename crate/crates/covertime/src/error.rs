use thiserror::Error;

/// Errors across the crate, split into two exit classes: validation errors
/// (bad input, exit code 1) and numeric refusals (requests the implementation
/// declines rather than answer inaccurately, exit code 2).
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("generator row {row} sums to {sum:e}; rows must sum to zero")]
    RowSumViolation { row: usize, sum: f64 },

    #[error("negative off-diagonal rate q({from},{to}) = {rate}")]
    NegativeRate { from: usize, to: usize, rate: f64 },

    #[error("target state {0} is not reachable from the start state")]
    UnreachableTarget(usize),

    #[error("{context}: {needed} subsets exceed the cap of {cap}; use Monte Carlo instead")]
    SubsetCapExceeded {
        context: &'static str,
        needed: u64,
        cap: u64,
    },

    #[error("dense solve refused: {unknowns} unknowns exceed the cap of {cap}")]
    DenseSolveTooLarge { unknowns: usize, cap: usize },

    #[error("hitting-time moments are infinite: state {0} is reachable but cannot reach the target set")]
    InfiniteMoments(usize),

    #[error("closed forms require an exponential resetting clock, got {0}")]
    NonExponentialClock(&'static str),

    #[error("no interior minimum bracketed on [{lo}, {hi}]; the function may not be unimodal there")]
    NoBracket { lo: f64, hi: f64 },

    #[error("resetting is not beneficial (criterion value {0:e} >= 0); no optimal-rate estimate")]
    NotBeneficial(f64),

    #[error("small-r expansion is not convex at r = 0 (quadratic coefficient {0:e} <= 0)")]
    ExpansionNotConvex(f64),

    #[error("{failed} of {total} replicates exceeded the event budget (more than 1%); raise max_events or check parameters")]
    TooManyIncomplete { failed: usize, total: usize },

    #[error("config error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code: 1 for validation errors, 2 for numeric refusals.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::SubsetCapExceeded { .. }
            | Error::DenseSolveTooLarge { .. }
            | Error::InfiniteMoments(_)
            | Error::NoBracket { .. }
            | Error::NotBeneficial(_)
            | Error::ExpansionNotConvex(_)
            | Error::TooManyIncomplete { .. } => 2,
            _ => 1,
        }
    }

    /// True for errors of the "refusal" class: the request was well formed
    /// but the implementation declines to produce a number for it.
    pub fn is_refusal(&self) -> bool {
        self.exit_code() == 2
    }
}
