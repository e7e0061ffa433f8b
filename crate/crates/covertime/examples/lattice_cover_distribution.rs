//! Cover times on the 6x6 periodic lattice: the geodesic-count success
//! probability, convergence of nested-target cover times, and the
//! exponential limit law of the rescaled cover time `r p* T_r`.
//!
//! ```bash
//! cargo run --release --example lattice_cover_distribution
//! ```

use covertime::clock::ResetClock;
use covertime::mc::{NetworkSampler, SimConfig};
use covertime::network::{lattice_p_star, mct_exact_moments, Lattice2d};
use covertime::rng::replicate_rng;

fn main() {
    let lat = Lattice2d::new(6, 1.0).unwrap();
    let antipode = (3, 3);

    // geodesic combinatorics: 2^g (gℓ)!/(ℓ!)^g = 80 paths for g=2, ℓ=3
    let p = lattice_p_star(2, 3, 1.0, 10.0).unwrap();
    println!("success probability toward the antipode at r = 10:");
    println!("  exact     {:.6e}   (prefactor 80 = 4·6!/36)", p.exact);
    println!("  stirling  {:.6e}", p.stirling);

    // nested targets around the antipode: cover times converge in r
    println!("\nnested-target mean cover times (exact linear algebra):");
    println!(
        "{:>8} {:>14} {:>14} {:>14} {:>9} {:>9}",
        "r", "ball(0)", "ball(1)", "ball(2)", "gap10", "gap21"
    );
    for r in [2.0, 4.0, 8.0, 16.0, 32.0] {
        let m: Vec<f64> = (0..3)
            .map(|radius| {
                let net = lat.network((0, 0), &lat.ball(antipode, radius)).unwrap();
                mct_exact_moments(&net, r, 1).unwrap()[0]
            })
            .collect();
        println!(
            "{r:>8.0} {:>14.5e} {:>14.5e} {:>14.5e} {:>8.3}% {:>8.3}%",
            m[0],
            m[1],
            m[2],
            100.0 * (m[1] - m[0]) / m[0],
            100.0 * (m[2] - m[1]) / m[1]
        );
    }

    // limit law: r p* T_r is asymptotically Exp(1) when one node is farthest.
    // A hop-1 target keeps Gillespie affordable at r = 1000.
    let target = lat.node(0, 1);
    let net = lat.network((0, 0), &[target]).unwrap();
    let sampler = NetworkSampler::new(&net).unwrap();
    let r = 1000.0;
    let clock = ResetClock::exponential(r).unwrap();
    let cfg = SimConfig {
        n_replicates: 40_000,
        seed: 7,
        ..Default::default()
    };
    let rp_star = 1.0; // Λ = k = 1 at hop distance 1: r p* = k
    let mut scaled: Vec<f64> = (0..cfg.n_replicates as u64)
        .map(|i| {
            let mut rng = replicate_rng(cfg.seed, i);
            let s = sampler.sample(&clock, &cfg, &mut rng).expect("budget");
            rp_star * s.cover_time
        })
        .collect();
    scaled.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = scaled.len() as f64;
    let mut ks: f64 = 0.0;
    for (i, &x) in scaled.iter().enumerate() {
        let f = 1.0 - (-x).exp();
        ks = ks.max((f - i as f64 / n).abs()).max((f - (i as f64 + 1.0) / n).abs());
    }
    println!("\nlimit law at r = {r}: KS distance of r·p*·T_r from Exp(1) = {ks:.4}");
    println!("({} Gillespie samples; the law is exponential to visual accuracy)", scaled.len());
}
