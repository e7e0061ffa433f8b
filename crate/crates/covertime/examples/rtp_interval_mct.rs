//! Closed-form mean cover times of `[-1, 1]` for a resetting run-and-tumble
//! searcher, and the 3/2-prefactor frequent-resetting law shared by the
//! unconstrained and constrained cases.
//!
//! ```bash
//! cargo run --release --example rtp_interval_mct
//! ```

use covertime::continuum::{
    minimize_rate, rtp_components, rtp_frequent_reset_ratio, rtp_mct_constrained,
    rtp_mct_unconstrained,
};

fn main() {
    let (a, v, g) = (1.0, 1.0, 1.0);
    println!("run-and-tumble searcher: v = {v}, tumble rate γ = {g}, target [-{a}, {a}]\n");
    println!(
        "{:>10} {:>16} {:>16} {:>14} {:>14}",
        "r", "unconstrained", "constrained", "r·p·E[T](unc)", "r·p·E[T](con)"
    );
    for k in -4..=12 {
        let r = 10f64.powf(k as f64 / 4.0);
        let unc = rtp_mct_unconstrained(a, v, g, r).unwrap();
        let con = rtp_mct_constrained(a, v, g, r).unwrap();
        let ru = rtp_frequent_reset_ratio(a, v, g, r, false).unwrap();
        let rc = rtp_frequent_reset_ratio(a, v, g, r, true).unwrap();
        println!("{r:>10.4} {unc:>16.6e} {con:>16.6e} {ru:>14.8} {rc:>14.8}");
    }
    println!("\nboth products tend to 3/2 with p = e^{{-a(γ+r)/v}}/2\n");

    let r = 2.0;
    let c = rtp_components(a, v, g, r).unwrap();
    println!("composition at r = {r}:  (c_r = {:.6})", c.c_r);
    println!("  interval exit        {:.12e}", c.interval_exit_mean);
    println!("  half-line restart    {:.12e}", c.halfline_exit_mean);
    println!("  reflected second leg {:.12e}", c.constrained_leg);
    println!(
        "  exit + restart       {:.12e}  (closed form {:.12e})",
        c.interval_exit_mean + c.halfline_exit_mean,
        rtp_mct_unconstrained(a, v, g, r).unwrap()
    );
    println!(
        "  exit + reflected leg {:.12e}  (closed form {:.12e})",
        c.interval_exit_mean + c.constrained_leg,
        rtp_mct_constrained(a, v, g, r).unwrap()
    );

    let opt = minimize_rate(
        |r| covertime::continuum::ln_rtp_mct_unconstrained(a, v, g, r).unwrap(),
        1e-3,
        1e3,
        1e-9,
    )
    .unwrap();
    println!("\noptimal rate: grid search {opt:.5} vs estimate v/a = {:.5}", v / a);
}
