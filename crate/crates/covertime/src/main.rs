//! Command-line front end: closed-form evaluation, configuration-driven
//! sweeps, and network reports. Exit codes: 0 success, 1 validation error,
//! 2 numeric refusal.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

use covertime::continuum::{
    bm_mct_constrained, bm_mct_unconstrained, mct_frequent_reset_approx, optimal_rate_estimate,
    rtp_mct_constrained, rtp_mct_unconstrained, AsymptoticSetting,
};
use covertime::network::{
    hitting_prob_exact, lambda_of_set, load_network, mct_exact_moments, network_ropt_estimate,
    reset_benefit_criterion, theorem2_moment, validate_network,
};
use covertime::sweep::{emit_plot_data, parse_config, run_sweep};
use covertime::Error;

#[derive(Parser)]
#[command(
    name = "covertime",
    about = "Cover-time statistics of stochastic searchers under resetting",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the closed-form mean cover time of one scenario at one rate
    Analytic(AnalyticArgs),
    /// Run a configured sweep over the resetting rate, emitting CSV + plot data
    Sweep(SweepArgs),
    /// Network analytics
    #[command(subcommand)]
    Network(NetworkCommand),
}

#[derive(Clone, Copy, ValueEnum)]
enum ScenarioArg {
    Bm1dUnconstrained,
    Bm1dConstrained,
    Rtp1dUnconstrained,
    Rtp1dConstrained,
}

#[derive(Args)]
struct AnalyticArgs {
    #[arg(value_enum)]
    scenario: ScenarioArg,
    /// Resetting rate
    #[arg(long)]
    r: f64,
    /// Left interval half-width a (target at -a)
    #[arg(long)]
    a: f64,
    /// Right interval half-width b (Brownian scenarios; RTP intervals are symmetric)
    #[arg(long)]
    b: Option<f64>,
    /// Diffusivity D (Brownian scenarios)
    #[arg(long, alias = "D")]
    diffusivity: Option<f64>,
    /// Detection radius (unconstrained Brownian only)
    #[arg(long, default_value_t = 0.0)]
    detection_radius: f64,
    /// Speed v (RTP scenarios)
    #[arg(long)]
    speed: Option<f64>,
    /// Tumble rate γ (RTP scenarios)
    #[arg(long)]
    switch_rate: Option<f64>,
}

#[derive(Args)]
struct SweepArgs {
    /// Sweep configuration file
    #[arg(long)]
    config: PathBuf,
    /// Output CSV path (overrides the config's `output`)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Override the Monte Carlo seed
    #[arg(long)]
    seed: Option<u64>,
    /// Also emit per-curve plot data and a gnuplot script next to the CSV
    #[arg(long, default_value_t = true)]
    plot_data: bool,
}

#[derive(Subcommand)]
enum NetworkCommand {
    /// Geodesic analysis, benefit criterion, optimal-rate estimate and
    /// frequent-resetting values for a network file
    Report {
        /// Network file
        #[arg(long)]
        file: PathBuf,
        /// Resetting rate for the exact and asymptotic values
        #[arg(long)]
        r: f64,
        /// Highest moment order to report
        #[arg(long, default_value_t = 2)]
        moments: u32,
    },
}

fn need(name: &str, v: Option<f64>) -> Result<f64, Error> {
    v.ok_or_else(|| Error::InvalidParameter(format!("--{name} is required for this scenario")))
}

fn run_analytic(args: &AnalyticArgs) -> Result<(), Error> {
    let r = args.r;
    match args.scenario {
        ScenarioArg::Bm1dUnconstrained | ScenarioArg::Bm1dConstrained => {
            let d = need("diffusivity", args.diffusivity)?;
            let b = need("b", args.b)?;
            let constrained = matches!(args.scenario, ScenarioArg::Bm1dConstrained);
            if constrained && args.detection_radius != 0.0 {
                return Err(Error::InvalidParameter(
                    "the constrained closed form requires --detection-radius 0".into(),
                ));
            }
            let target =
                covertime::IntervalTarget::new(args.a, b, constrained, args.detection_radius)?;
            let (ae, be) = (target.effective_a(), target.effective_b());
            let exact = if constrained {
                bm_mct_constrained(ae, be, d, r)?
            } else {
                bm_mct_unconstrained(ae, be, d, r)?
            };
            let ln_p = -(ae.max(be)) * (r / d).sqrt();
            let prefactor = if ae == be { 1.5 } else { 1.0 };
            let asym = mct_frequent_reset_approx(1, r, ln_p, prefactor)?;
            let setting = if ae == be {
                AsymptoticSetting::Bm1dSymmetric { a: ae, diffusivity: d }
            } else {
                AsymptoticSetting::Bm1dAsymmetric {
                    b: ae.max(be),
                    diffusivity: d,
                }
            };
            println!("scenario            : {}", if constrained { "bm1d_constrained" } else { "bm1d_unconstrained" });
            println!("mean cover time     : {exact:.12e}");
            println!("asymptotic estimate : {asym:.12e}");
            println!("relative error      : {:.3e}", (asym - exact).abs() / exact);
            println!("optimal-rate est.   : {:.6e}", optimal_rate_estimate(&setting)?);
        }
        ScenarioArg::Rtp1dUnconstrained | ScenarioArg::Rtp1dConstrained => {
            let v = need("speed", args.speed)?;
            let g = need("switch-rate", args.switch_rate)?;
            let constrained = matches!(args.scenario, ScenarioArg::Rtp1dConstrained);
            let exact = if constrained {
                rtp_mct_constrained(args.a, v, g, r)?
            } else {
                rtp_mct_unconstrained(args.a, v, g, r)?
            };
            let ln_p = -args.a * (g + r) / v - std::f64::consts::LN_2;
            let asym = mct_frequent_reset_approx(1, r, ln_p, 1.5)?;
            let setting = AsymptoticSetting::Rtp1dSymmetric {
                a: args.a,
                speed: v,
                switch_rate: g,
            };
            println!("scenario            : {}", if constrained { "rtp1d_constrained" } else { "rtp1d_unconstrained" });
            println!("mean cover time     : {exact:.12e}");
            println!("asymptotic estimate : {asym:.12e}");
            println!("relative error      : {:.3e}", (asym - exact).abs() / exact);
            println!("optimal-rate est.   : {:.6e}", optimal_rate_estimate(&setting)?);
        }
    }
    Ok(())
}

fn run_sweep_cmd(args: &SweepArgs) -> Result<(), Error> {
    let mut config = parse_config(&args.config)?;
    if let (Some(seed), Some(mc)) = (args.seed, config.mc.as_mut()) {
        mc.seed = seed;
    }
    if let Some(mc) = &config.mc {
        eprintln!(
            "monte carlo: n = {}, seed = {}, dt = {:e}, max_events = {}",
            mc.n_replicates, mc.seed, mc.dt, mc.max_events
        );
    }
    let out_path = args
        .out
        .clone()
        .or_else(|| config.output.clone())
        .unwrap_or_else(|| PathBuf::from(format!("{}_sweep.csv", config.scenario.name())));
    let output = run_sweep(&config)?;
    for note in &output.notes {
        eprintln!("note: {note}");
    }
    std::fs::write(&out_path, &output.csv)?;
    eprintln!("wrote {}", out_path.display());
    if args.plot_data {
        let stem = out_path.with_extension("");
        for p in emit_plot_data(&output.csv, &stem)? {
            eprintln!("wrote {}", p.display());
        }
    }
    Ok(())
}

fn run_network_report(file: &PathBuf, r: f64, moments: u32) -> Result<(), Error> {
    let net = load_network(file)?;
    let analysis = validate_network(&net)?;
    println!("network             : {}", file.display());
    println!("states              : {}", net.n_states());
    println!("start               : {}", net.label(net.start()));
    let target_labels: Vec<String> = net.targets().iter().map(|&t| net.label(t)).collect();
    println!("targets             : {}", target_labels.join(", "));
    println!("h*                  : {}", analysis.h_star);
    let far_labels: Vec<String> = analysis.far_set.iter().map(|&t| net.label(t)).collect();
    println!("far target set      : {}", far_labels.join(", "));
    let (h_far, lambda_far) = lambda_of_set(&net, &analysis.far_set)?;
    println!("Λ(far set)          : {lambda_far:.12e}  (geodesic length {h_far})");
    match hitting_prob_exact(&net, net.targets(), r) {
        Ok(p) => println!("P(hit before reset) : {p:.12e}  at r = {r}"),
        Err(e) => println!("P(hit before reset) : refused ({e})"),
    }

    match reset_benefit_criterion(&net) {
        Ok(report) => {
            println!(
                "benefit criterion   : {:.12e}  -> resetting {}",
                report.value,
                if report.beneficial {
                    "reduces the mean cover time"
                } else {
                    "does not help at small rates"
                }
            );
            match network_ropt_estimate(&net) {
                Ok(est) => println!("optimal-rate est.   : {est:.6e}"),
                Err(e) => println!("optimal-rate est.   : refused ({e})"),
            }
        }
        Err(e) if e.is_refusal() => println!("benefit criterion   : refused ({e})"),
        Err(e) => return Err(e),
    }

    for m in 1..=moments {
        let asym = theorem2_moment(&net, &analysis, m, r)?;
        match mct_exact_moments(&net, r, m) {
            Ok(exact) => {
                let e = exact[m as usize - 1];
                println!(
                    "moment m={m}         : exact {e:.12e}, asymptote {asym:.12e}, ratio {:.6}",
                    e / asym
                );
            }
            Err(err) if err.is_refusal() => {
                println!("moment m={m}         : exact refused ({err}), asymptote {asym:.12e}");
            }
            Err(err) => return Err(err),
        }
    }
    Ok(())
}

fn main() {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Analytic(args) => run_analytic(args),
        Command::Sweep(args) => run_sweep_cmd(args),
        Command::Network(NetworkCommand::Report { file, r, moments }) => {
            run_network_report(file, *r, *moments)
        }
    };
    if let Err(e) = result {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
