//! Optimal-rate estimators against grid-searched optima: the 1D closed
//! forms, the ball/torus/subdiffusion settings, and the small-rate
//! quadratic estimate on a network where resetting helps.
//!
//! ```bash
//! cargo run --release --example optimal_resetting_rate
//! ```

use covertime::continuum::{
    bm_mct_unconstrained, ln_rtp_mct_unconstrained, minimize_rate, optimal_rate_estimate,
    AsymptoticSetting,
};
use covertime::network::{
    mct_exact_moments, network_ropt_estimate, reset_benefit_criterion, tau0_moment_stats,
    NetworkSpec,
};

fn main() {
    println!("1D closed forms:");
    let bm_opt =
        minimize_rate(|r| bm_mct_unconstrained(1.0, 2.0, 1.0, r).unwrap(), 1e-3, 1e3, 1e-9)
            .unwrap();
    let bm_est = optimal_rate_estimate(&AsymptoticSetting::Bm1dAsymmetric {
        b: 2.0,
        diffusivity: 1.0,
    })
    .unwrap();
    println!("  BM [-1,2]  : grid {bm_opt:.5}  estimate {bm_est:.5}  ratio {:.3}", bm_opt / bm_est);

    let rtp_opt = minimize_rate(
        |r| ln_rtp_mct_unconstrained(1.0, 1.0, 1.0, r).unwrap(),
        1e-3,
        1e3,
        1e-9,
    )
    .unwrap();
    let rtp_est = optimal_rate_estimate(&AsymptoticSetting::Rtp1dSymmetric {
        a: 1.0,
        speed: 1.0,
        switch_rate: 1.0,
    })
    .unwrap();
    println!("  RTP [-1,1] : grid {rtp_opt:.5}  estimate {rtp_est:.5}  ratio {:.3}", rtp_opt / rtp_est);

    println!("\nhigher-dimensional estimates (closed forms only):");
    for (name, setting) in [
        (
            "ball a=2, R=1, D=1",
            AsymptoticSetting::BallRd {
                radius: 2.0,
                detection_radius: 1.0,
                diffusivity: 1.0,
            },
        ),
        (
            "torus ℓ=4, R=1, D=1",
            AsymptoticSetting::TorusRd {
                diameter: 4.0,
                detection_radius: 1.0,
                diffusivity: 1.0,
            },
        ),
        (
            "subdiffusion α=0.8, L=2, K=1",
            AsymptoticSetting::Subdiffusion {
                distance: 2.0,
                generalized_diffusivity: 1.0,
                exponent: 0.8,
            },
        ),
    ] {
        println!("  {name:30}: r_opt ≈ {:.5}", optimal_rate_estimate(&setting).unwrap());
    }

    // a network with a slow side trap: hitting times are heavy-tailed
    // (CV > 1), so a small resetting rate reduces the mean cover time
    let net = NetworkSpec::from_edges(
        4,
        &[
            (0, 1, 1.0),
            (1, 2, 1.0),
            (1, 0, 1.0),
            (0, 3, 0.3),
            (3, 0, 0.05),
        ],
        0,
        [2],
    )
    .unwrap();
    let stats = tau0_moment_stats(&net, net.targets()).unwrap();
    let report = reset_benefit_criterion(&net).unwrap();
    println!("\ntrap network (4 states, target 2 hops away):");
    println!("  CV(τ₀)      = {:.4}  (> 1: resetting pays off)", stats.cv());
    println!("  criterion   = {:.4e}  beneficial = {}", report.value, report.beneficial);
    let est = network_ropt_estimate(&net).unwrap();
    let grid = minimize_rate(|r| mct_exact_moments(&net, r, 1).unwrap()[0], 1e-4, 1e2, 1e-8)
        .unwrap();
    let at_zero = mct_exact_moments(&net, 0.0, 1).unwrap()[0];
    let at_best = mct_exact_moments(&net, grid, 1).unwrap()[0];
    println!("  r_opt: quadratic estimate {est:.4}, grid search {grid:.4}, ratio {:.3}", est / grid);
    println!("  MCT: {at_zero:.4} at r = 0  →  {at_best:.4} at r = {grid:.4}");
}
