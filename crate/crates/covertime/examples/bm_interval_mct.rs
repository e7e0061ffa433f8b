//! Closed-form mean cover times of the interval `[-1, 2]` for a resetting
//! Brownian searcher: unconstrained vs reflecting walls, against the
//! frequent-resetting asymptote.
//!
//! ```bash
//! cargo run --release --example bm_interval_mct
//! ```

use covertime::continuum::{
    bm_components, bm_mct_constrained, bm_mct_unconstrained, mct_frequent_reset_approx,
    minimize_rate, optimal_rate_estimate, AsymptoticSetting,
};

fn main() {
    let (a, b, d) = (1.0, 2.0, 1.0);
    println!("Brownian searcher, D = {d}, target interval [-{a}, {b}], reset to 0\n");
    println!(
        "{:>10} {:>16} {:>16} {:>16} {:>12}",
        "r", "unconstrained", "constrained", "asymptote", "rel.err(unc)"
    );
    for k in -4..=12 {
        let r = 10f64.powf(k as f64 / 4.0);
        let unc = bm_mct_unconstrained(a, b, d, r).unwrap();
        let con = bm_mct_constrained(a, b, d, r).unwrap();
        let ln_p = -b * (r / d).sqrt();
        let asym = mct_frequent_reset_approx(1, r, ln_p, 1.0).unwrap();
        println!(
            "{r:>10.4} {unc:>16.6e} {con:>16.6e} {asym:>16.6e} {:>12.3e}",
            (asym - unc).abs() / unc
        );
    }

    // the closed form is its own first-exit/second-leg composition
    let r = 5.0;
    let c = bm_components(a, b, d, r).unwrap();
    let composed = c.interval_exit_mean
        + c.xi_a * c.halfline_exit_mean(a + b, b)
        + c.xi_b * c.halfline_exit_mean(a + b, a);
    let closed = bm_mct_unconstrained(a, b, d, r).unwrap();
    println!("\ncomposition check at r = {r}:");
    println!("  interval exit  {:.12e}", c.interval_exit_mean);
    println!("  exit-side prob ξ_a = {:.6}, ξ_b = {:.6}", c.xi_a, c.xi_b);
    println!("  composed       {composed:.12e}");
    println!("  closed form    {closed:.12e}");
    println!("  rel. gap       {:.2e}", ((composed - closed) / closed).abs());

    // optimal resetting rate: golden section vs the closed-form estimate
    let opt = minimize_rate(|r| bm_mct_unconstrained(a, b, d, r).unwrap(), 1e-3, 1e3, 1e-9)
        .unwrap();
    let est = optimal_rate_estimate(&AsymptoticSetting::Bm1dAsymmetric { b, diffusivity: d })
        .unwrap();
    println!("\noptimal rate: grid search {opt:.5}, estimate 4D/b² = {est:.5}, ratio {:.3}", opt / est);
}
