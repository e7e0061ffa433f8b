//! Strict sweep configuration: flat key = value text with sections, unknown
//! keys rejected, every physical parameter validated.
//!
//! ```toml
//! scenario = "bm1d_unconstrained"
//!
//! [bm]
//! a = 1.0
//! b = 2.0
//! diffusivity = 1.0
//!
//! [grid]
//! r_min = 0.1
//! r_max = 1000.0
//! points = 25
//! spacing = "log"
//!
//! [mc]          # optional: presence turns the Monte Carlo columns on
//! n = 10000
//! seed = 0
//!
//! output = "bm_sweep.csv"
//! ```

use serde::Deserialize;
use std::path::{Path, PathBuf};

use crate::mc::SimConfig;
use crate::network::{load_network, NetworkSpec};
use crate::process::{BrownianSpec, IntervalTarget, RtpSpec};
use crate::{Error, Result};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    scenario: String,
    bm: Option<RawBm>,
    rtp: Option<RawRtp>,
    network: Option<RawNetwork>,
    grid: RawGrid,
    mc: Option<RawMc>,
    output: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBm {
    a: f64,
    b: f64,
    diffusivity: f64,
    #[serde(default)]
    detection_radius: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRtp {
    a: f64,
    speed: f64,
    switch_rate: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawNetwork {
    files: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGrid {
    r: Option<Vec<f64>>,
    r_min: Option<f64>,
    r_max: Option<f64>,
    points: Option<usize>,
    spacing: Option<String>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMc {
    n: Option<usize>,
    seed: Option<u64>,
    dt: Option<f64>,
    max_events: Option<u64>,
}

/// What a sweep computes at each grid rate.
#[derive(Debug, Clone)]
pub enum Scenario {
    Bm1dUnconstrained {
        spec: BrownianSpec,
        target: IntervalTarget,
    },
    Bm1dConstrained {
        spec: BrownianSpec,
        target: IntervalTarget,
    },
    Rtp1dUnconstrained {
        spec: RtpSpec,
        target: IntervalTarget,
    },
    Rtp1dConstrained {
        spec: RtpSpec,
        target: IntervalTarget,
    },
    Network {
        networks: Vec<(String, NetworkSpec)>,
    },
}

impl Scenario {
    pub fn name(&self) -> &'static str {
        match self {
            Scenario::Bm1dUnconstrained { .. } => "bm1d_unconstrained",
            Scenario::Bm1dConstrained { .. } => "bm1d_constrained",
            Scenario::Rtp1dUnconstrained { .. } => "rtp1d_unconstrained",
            Scenario::Rtp1dConstrained { .. } => "rtp1d_constrained",
            Scenario::Network { .. } => "network",
        }
    }
}

/// A fully validated sweep.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub scenario: Scenario,
    pub r_grid: Vec<f64>,
    pub mc: Option<SimConfig>,
    pub output: Option<PathBuf>,
}

fn build_grid(raw: &RawGrid) -> Result<Vec<f64>> {
    let grid = match (&raw.r, raw.r_min, raw.r_max, raw.points) {
        (Some(explicit), None, None, None) => {
            if raw.spacing.is_some() {
                return Err(Error::Config(
                    "grid: spacing applies only to the r_min/r_max form".into(),
                ));
            }
            explicit.clone()
        }
        (None, Some(lo), Some(hi), Some(points)) => {
            if points < 2 {
                return Err(Error::Config("grid: need at least 2 points".into()));
            }
            if !(lo > 0.0) || !(hi > lo) {
                return Err(Error::Config(format!(
                    "grid: need 0 < r_min < r_max, got [{lo}, {hi}]"
                )));
            }
            match raw.spacing.as_deref().unwrap_or("log") {
                "log" => (0..points)
                    .map(|i| {
                        (lo.ln() + (hi.ln() - lo.ln()) * i as f64 / (points - 1) as f64).exp()
                    })
                    .collect(),
                "linear" => (0..points)
                    .map(|i| lo + (hi - lo) * i as f64 / (points - 1) as f64)
                    .collect(),
                other => {
                    return Err(Error::Config(format!(
                        "grid: spacing must be \"log\" or \"linear\", got \"{other}\""
                    )))
                }
            }
        }
        _ => {
            return Err(Error::Config(
                "grid: give either r = [..] or all of r_min, r_max, points".into(),
            ))
        }
    };
    if grid.is_empty() {
        return Err(Error::Config("grid: empty rate grid".into()));
    }
    for w in grid.windows(2) {
        if !(w[1] > w[0]) {
            return Err(Error::Config(format!(
                "grid: rates must be strictly increasing, got {} then {}",
                w[0], w[1]
            )));
        }
    }
    if !(grid[0] > 0.0) || grid.iter().any(|r| !r.is_finite()) {
        return Err(Error::Config("grid: rates must be positive and finite".into()));
    }
    Ok(grid)
}

/// Parse a config document. Relative network paths resolve against `base`.
pub fn parse_config_str(text: &str, base: &Path) -> Result<SweepConfig> {
    let raw: RawConfig = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;

    let want = |name: &str, present: bool, used: bool| -> Result<()> {
        if used && !present {
            return Err(Error::Config(format!(
                "scenario \"{}\" needs a [{name}] section",
                raw.scenario
            )));
        }
        if !used && present {
            return Err(Error::Config(format!(
                "scenario \"{}\" does not use a [{name}] section",
                raw.scenario
            )));
        }
        Ok(())
    };
    let is_bm = raw.scenario.starts_with("bm1d");
    let is_rtp = raw.scenario.starts_with("rtp1d");
    let is_net = raw.scenario == "network";
    want("bm", raw.bm.is_some(), is_bm)?;
    want("rtp", raw.rtp.is_some(), is_rtp)?;
    want("network", raw.network.is_some(), is_net)?;

    let scenario = match raw.scenario.as_str() {
        "bm1d_unconstrained" | "bm1d_constrained" => {
            let bm = raw.bm.as_ref().expect("checked");
            let constrained = raw.scenario == "bm1d_constrained";
            if constrained && bm.detection_radius != 0.0 {
                return Err(Error::Config(
                    "the constrained closed form requires detection_radius = 0".into(),
                ));
            }
            let spec = BrownianSpec::new(bm.diffusivity)?;
            let target = IntervalTarget::new(bm.a, bm.b, constrained, bm.detection_radius)?;
            if constrained {
                Scenario::Bm1dConstrained { spec, target }
            } else {
                Scenario::Bm1dUnconstrained { spec, target }
            }
        }
        "rtp1d_unconstrained" | "rtp1d_constrained" => {
            let rtp = raw.rtp.as_ref().expect("checked");
            let constrained = raw.scenario == "rtp1d_constrained";
            let spec = RtpSpec::new(rtp.speed, rtp.switch_rate)?;
            let target = IntervalTarget::new(rtp.a, rtp.a, constrained, 0.0)?;
            if constrained {
                Scenario::Rtp1dConstrained { spec, target }
            } else {
                Scenario::Rtp1dUnconstrained { spec, target }
            }
        }
        "network" => {
            let net = raw.network.as_ref().expect("checked");
            if net.files.is_empty() {
                return Err(Error::Config("network: need at least one file".into()));
            }
            let mut networks = Vec::new();
            for f in &net.files {
                let path = base.join(f);
                let label = Path::new(f)
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| f.clone());
                networks.push((label, load_network(&path)?));
            }
            Scenario::Network { networks }
        }
        other => {
            return Err(Error::Config(format!(
                "unknown scenario \"{other}\"; expected one of bm1d_unconstrained, \
                 bm1d_constrained, rtp1d_unconstrained, rtp1d_constrained, network"
            )))
        }
    };

    let mc = raw.mc.as_ref().map(|m| SimConfig {
        n_replicates: m.n.unwrap_or(10_000),
        seed: m.seed.unwrap_or(0),
        dt: m.dt.unwrap_or(1e-4),
        max_events: m.max_events.unwrap_or(100_000_000),
    });
    if let Some(cfg) = &mc {
        cfg.validate()?;
    }

    Ok(SweepConfig {
        scenario,
        r_grid: build_grid(&raw.grid)?,
        mc,
        output: raw.output.map(PathBuf::from),
    })
}

/// Load and parse a config file; diagnostics carry the failing key or value.
pub fn parse_config(path: &Path) -> Result<SweepConfig> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
    let base = path.parent().unwrap_or_else(|| Path::new("."));
    parse_config_str(&text, base)
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = r#"
scenario = "bm1d_unconstrained"

[bm]
a = 1.0
b = 2.0
diffusivity = 1.0

[grid]
r = [0.5, 1.0, 2.0]

[mc]
"#;

    #[test]
    fn minimal_config_gets_defaults() {
        let cfg = parse_config_str(MINIMAL, Path::new(".")).unwrap();
        let mc = cfg.mc.expect("mc section present");
        assert_eq!(mc.n_replicates, 10_000);
        assert_eq!(mc.seed, 0);
        assert_eq!(mc.dt, 1e-4);
        assert!(matches!(cfg.scenario, Scenario::Bm1dUnconstrained { .. }));
        assert_eq!(cfg.r_grid, vec![0.5, 1.0, 2.0]);
    }

    #[test]
    fn negative_diffusivity_names_the_field() {
        let bad = MINIMAL.replace("diffusivity = 1.0", "diffusivity = -1.0");
        let err = parse_config_str(&bad, Path::new(".")).unwrap_err();
        assert!(err.to_string().contains("diffusivity"), "{err}");
    }

    #[test]
    fn unknown_key_suggests_the_schema() {
        let bad = MINIMAL.replace("diffusivity = 1.0", "diffusion = 1.0");
        let err = parse_config_str(&bad, Path::new(".")).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("diffusion"), "{msg}");
        assert!(msg.contains("diffusivity"), "should list the valid keys: {msg}");
    }

    #[test]
    fn grid_monotonicity_enforced() {
        let bad = MINIMAL.replace("r = [0.5, 1.0, 2.0]", "r = [1.0, 0.5]");
        assert!(parse_config_str(&bad, Path::new(".")).is_err());
    }

    #[test]
    fn log_grid_form() {
        let cfg_text = MINIMAL.replace(
            "r = [0.5, 1.0, 2.0]",
            "r_min = 0.1\nr_max = 10.0\npoints = 3",
        );
        let cfg = parse_config_str(&cfg_text, Path::new(".")).unwrap();
        assert_eq!(cfg.r_grid.len(), 3);
        assert!((cfg.r_grid[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn mismatched_section_rejected() {
        let bad = format!("{MINIMAL}\n[rtp]\na = 1.0\nspeed = 1.0\nswitch_rate = 1.0\n");
        let err = parse_config_str(&bad, Path::new(".")).unwrap_err();
        assert!(err.to_string().contains("does not use"), "{err}");
    }

    #[test]
    fn missing_mc_disables_monte_carlo() {
        let no_mc = MINIMAL.replace("[mc]\n", "");
        let cfg = parse_config_str(&no_mc, Path::new(".")).unwrap();
        assert!(cfg.mc.is_none());
    }
}
