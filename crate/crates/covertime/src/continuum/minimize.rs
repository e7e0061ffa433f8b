//! Deterministic one-dimensional minimization over the resetting rate.

use crate::{Error, Result};

const SCAN_POINTS: usize = 32;
const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Minimize `f` over `[r_lo, r_hi]` to relative tolerance `tol` on the rate.
///
/// A 32-point log-spaced scan brackets the minimum first; golden-section
/// search refines it. If the scan minimum sits on an endpoint there is no
/// interior bracket and the search refuses rather than guess.
pub fn minimize_rate<F: Fn(f64) -> f64>(f: F, r_lo: f64, r_hi: f64, tol: f64) -> Result<f64> {
    if !(r_lo > 0.0) || !(r_hi > r_lo) || !r_hi.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "need 0 < r_lo < r_hi, got [{r_lo}, {r_hi}]"
        )));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "tolerance must be positive, got {tol}"
        )));
    }

    let ln_lo = r_lo.ln();
    let ln_hi = r_hi.ln();
    let grid: Vec<f64> = (0..SCAN_POINTS)
        .map(|i| (ln_lo + (ln_hi - ln_lo) * i as f64 / (SCAN_POINTS - 1) as f64).exp())
        .collect();
    let values: Vec<f64> = grid.iter().map(|&r| f(r)).collect();
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidParameter(
            "objective is not finite on the scan grid".into(),
        ));
    }
    let best = values
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.partial_cmp(b.1).expect("finite values"))
        .map(|(i, _)| i)
        .expect("non-empty grid");
    if best == 0 || best == SCAN_POINTS - 1 {
        return Err(Error::NoBracket { lo: r_lo, hi: r_hi });
    }

    let mut a = grid[best - 1];
    let mut b = grid[best + 1];
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while (b - a) > tol * 0.5 * (a + b) {
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
    }
    Ok(0.5 * (a + b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::continuum::bm_mct_unconstrained;

    #[test]
    fn quadratic_vertex() {
        let r = minimize_rate(|r| (r - 3.0) * (r - 3.0) + 1.0, 1.0, 10.0, 1e-10).unwrap();
        assert!((r - 3.0).abs() < 1e-7, "got {r}");
    }

    #[test]
    fn bm_optimum_near_estimate() {
        // 4D/b² = 1 for a=1, b=2, D=1; the true optimum is within a factor 3
        let r = minimize_rate(
            |r| bm_mct_unconstrained(1.0, 2.0, 1.0, r).unwrap(),
            1e-3,
            1e3,
            1e-8,
        )
        .unwrap();
        let ratio = r / 1.0;
        assert!(
            ratio > 1.0 / 3.0 && ratio < 3.0,
            "optimum {r} too far from estimate 1"
        );
    }

    #[test]
    fn rtp_optimum_near_estimate() {
        // v/a = 1 for a=v=γ=1; minimize the log form — same argmin, and it
        // stays finite where the linear value overflows
        let r = minimize_rate(
            |r| crate::continuum::ln_rtp_mct_unconstrained(1.0, 1.0, 1.0, r).unwrap(),
            1e-3,
            1e3,
            1e-8,
        )
        .unwrap();
        let ratio = r / 1.0;
        assert!(
            ratio > 0.2 && ratio < 5.0,
            "optimum {r} vs estimate 1, ratio {ratio}"
        );
    }

    #[test]
    fn monotone_objective_refuses() {
        let err = minimize_rate(|r| r, 1.0, 10.0, 1e-8).unwrap_err();
        assert!(matches!(err, Error::NoBracket { .. }));
        let err = minimize_rate(|r| -r, 1.0, 10.0, 1e-8).unwrap_err();
        assert!(matches!(err, Error::NoBracket { .. }));
    }

    #[test]
    fn deterministic_result() {
        let f = |r: f64| (r.ln() - 1.0).powi(2);
        let r1 = minimize_rate(f, 0.1, 100.0, 1e-9).unwrap();
        let r2 = minimize_rate(f, 0.1, 100.0, 1e-9).unwrap();
        assert_eq!(r1, r2);
        assert!((r1 - std::f64::consts::E).abs() < 1e-6);
    }
}
