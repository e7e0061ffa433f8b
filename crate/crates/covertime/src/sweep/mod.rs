//! Configuration-driven parameter sweeps over the resetting rate with
//! side-by-side exact / asymptotic / Monte Carlo columns, CSV output and
//! plot-data emission.

pub mod config;
pub mod plot;
pub mod run;

pub use config::{parse_config, parse_config_str, Scenario, SweepConfig};
pub use plot::emit_plot_data;
pub use run::{run_sweep, SweepOutput};
