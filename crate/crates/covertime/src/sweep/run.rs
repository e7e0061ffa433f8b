//! Execute a sweep: one CSV row per rate with exact, asymptotic and Monte
//! Carlo columns. Rows are computed concurrently and written in grid order;
//! a fixed seed makes the whole document byte-identical across runs.

use rayon::prelude::*;

use super::config::{Scenario, SweepConfig};
use crate::clock::ResetClock;
use crate::continuum::{
    bm_mct_constrained, bm_mct_unconstrained, mct_frequent_reset_approx, rtp_mct_constrained,
    rtp_mct_unconstrained,
};
use crate::mc::{
    estimate_mct, simulate_bm_cover, simulate_rtp_cover, simulate_rtp_cover_staged, McRun,
    NetworkSampler,
};
use crate::network::{mct_exact_moments, theorem2_moment, validate_network};
use crate::Result;

/// CSV text plus the refusal/diagnostic notes collected along the way.
#[derive(Debug, Clone)]
pub struct SweepOutput {
    pub csv: String,
    pub notes: Vec<String>,
}

/// One column group of a row: a labeled series.
#[derive(Debug, Clone, Default)]
struct SeriesCells {
    exact: Option<f64>,
    asymptotic: Option<f64>,
    mc_mean: Option<f64>,
    mc_se: Option<f64>,
    n_samples: Option<usize>,
}

impl SeriesCells {
    fn rel_err_asym(&self) -> Option<f64> {
        match (self.exact, self.asymptotic) {
            (Some(e), Some(a)) if e != 0.0 => Some((a - e).abs() / e.abs()),
            _ => None,
        }
    }
}

fn fmt(x: f64) -> String {
    // 17 significant digits, stable across runs
    format!("{x:.16e}")
}

fn cell_f(v: Option<f64>) -> String {
    v.map(fmt).unwrap_or_default()
}

fn cell_n(v: Option<usize>) -> String {
    v.map(|n| n.to_string()).unwrap_or_default()
}

fn mc_summary(run: &McRun) -> (Option<f64>, Option<f64>, Option<usize>) {
    let est = run.mean();
    (Some(est.mean), Some(est.std_error), Some(est.n_samples))
}

/// Run every grid point of a sweep and render the CSV document.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepOutput> {
    let labels: Vec<String> = match &config.scenario {
        Scenario::Network { networks } => networks.iter().map(|(l, _)| l.clone()).collect(),
        _ => vec![String::new()],
    };

    // validate once up front so per-row failures can only be refusals
    if let Scenario::Network { networks } = &config.scenario {
        for (_, net) in networks {
            validate_network(net)?;
        }
    }

    let rows: Vec<Result<(Vec<SeriesCells>, Vec<String>)>> = config
        .r_grid
        .par_iter()
        .map(|&r| sweep_row(config, r))
        .collect();

    let mut notes = Vec::new();
    let mut csv = String::new();
    csv.push('r');
    for label in &labels {
        let suffix = if label.is_empty() {
            String::new()
        } else {
            format!(":{label}")
        };
        for col in [
            "exact",
            "asymptotic",
            "mc_mean",
            "mc_se",
            "n_samples",
            "rel_err_asym",
        ] {
            csv.push(',');
            csv.push_str(col);
            csv.push_str(&suffix);
        }
    }
    csv.push('\n');
    for (row, &r) in rows.into_iter().zip(config.r_grid.iter()) {
        let (cells, row_notes) = row?;
        notes.extend(row_notes);
        csv.push_str(&fmt(r));
        for c in &cells {
            csv.push(',');
            csv.push_str(&cell_f(c.exact));
            csv.push(',');
            csv.push_str(&cell_f(c.asymptotic));
            csv.push(',');
            csv.push_str(&cell_f(c.mc_mean));
            csv.push(',');
            csv.push_str(&cell_f(c.mc_se));
            csv.push(',');
            csv.push_str(&cell_n(c.n_samples));
            csv.push(',');
            csv.push_str(&cell_f(c.rel_err_asym()));
        }
        csv.push('\n');
    }
    Ok(SweepOutput { csv, notes })
}

/// Value-or-note: refusals become empty cells plus a diagnostic; anything
/// else propagates as an error.
fn allow_refusal(r: f64, what: &str, v: Result<f64>, notes: &mut Vec<String>) -> Result<Option<f64>> {
    match v {
        Ok(x) => Ok(Some(x)),
        Err(e) if e.is_refusal() => {
            notes.push(format!("r = {r}: {what} refused: {e}"));
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

fn sweep_row(config: &SweepConfig, r: f64) -> Result<(Vec<SeriesCells>, Vec<String>)> {
    let mut notes = Vec::new();
    let clock = ResetClock::exponential(r)?;
    let cells = match &config.scenario {
        Scenario::Bm1dUnconstrained { spec, target }
        | Scenario::Bm1dConstrained { spec, target } => {
            let constrained = target.constrained;
            let (ae, be, d) = (target.effective_a(), target.effective_b(), spec.diffusivity);
            let exact = if constrained {
                bm_mct_constrained(ae, be, d, r)?
            } else {
                bm_mct_unconstrained(ae, be, d, r)?
            };
            let ln_p = -(ae.max(be)) * (r / d).sqrt();
            let prefactor = if ae == be { 1.5 } else { 1.0 };
            let asym = mct_frequent_reset_approx(1, r, ln_p, prefactor)?;
            let mut cells = SeriesCells {
                exact: Some(exact),
                asymptotic: Some(asym),
                ..Default::default()
            };
            if let Some(mc) = &config.mc {
                let run = estimate_mct(mc, &[1], |rng| {
                    simulate_bm_cover(spec, target, &clock, mc, rng)
                })?;
                (cells.mc_mean, cells.mc_se, cells.n_samples) = mc_summary(&run);
            }
            vec![cells]
        }
        Scenario::Rtp1dUnconstrained { spec, target }
        | Scenario::Rtp1dConstrained { spec, target } => {
            let constrained = target.constrained;
            let (a, v, g) = (target.a, spec.speed, spec.switch_rate);
            let exact = if constrained {
                rtp_mct_constrained(a, v, g, r)?
            } else {
                rtp_mct_unconstrained(a, v, g, r)?
            };
            let ln_p = -a * (g + r) / v - std::f64::consts::LN_2;
            let asym = mct_frequent_reset_approx(1, r, ln_p, 1.5)?;
            let mut cells = SeriesCells {
                exact: Some(exact),
                asymptotic: Some(asym),
                ..Default::default()
            };
            if let Some(mc) = &config.mc {
                // the staged sampler realizes the model behind the
                // unconstrained closed form; the path sampler matches the
                // constrained one
                let run = if constrained {
                    estimate_mct(mc, &[1], |rng| {
                        simulate_rtp_cover(spec, target, &clock, mc, rng)
                    })?
                } else {
                    estimate_mct(mc, &[1], |rng| {
                        simulate_rtp_cover_staged(spec, target, &clock, mc, rng)
                    })?
                };
                (cells.mc_mean, cells.mc_se, cells.n_samples) = mc_summary(&run);
            }
            vec![cells]
        }
        Scenario::Network { networks } => {
            let mut all = Vec::with_capacity(networks.len());
            for (label, net) in networks {
                let analysis = validate_network(net)?;
                let exact = allow_refusal(
                    r,
                    &format!("exact MCT ({label})"),
                    mct_exact_moments(net, r, 1).map(|m| m[0]),
                    &mut notes,
                )?;
                let asym = allow_refusal(
                    r,
                    &format!("asymptote ({label})"),
                    theorem2_moment(net, &analysis, 1, r),
                    &mut notes,
                )?;
                let mut cells = SeriesCells {
                    exact,
                    asymptotic: asym,
                    ..Default::default()
                };
                if let Some(mc) = &config.mc {
                    let sampler = NetworkSampler::new(net)?;
                    let run = estimate_mct(mc, &[1], |rng| sampler.sample(&clock, mc, rng))?;
                    (cells.mc_mean, cells.mc_se, cells.n_samples) = mc_summary(&run);
                }
                all.push(cells);
            }
            all
        }
    };
    Ok((cells, notes))
}
