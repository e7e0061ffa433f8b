//! Periodic square lattices and the geodesic-count success probability.

use super::spec::NetworkSpec;
use crate::numeric::ln_factorial;
use crate::{Error, Result};

/// A 2D square lattice with periodic boundary conditions and one jump rate.
#[derive(Debug, Clone, Copy)]
pub struct Lattice2d {
    side: usize,
    rate: f64,
}

impl Lattice2d {
    pub fn new(side: usize, rate: f64) -> Result<Self> {
        if side < 2 {
            return Err(Error::InvalidParameter(format!(
                "lattice side must be at least 2, got {side}"
            )));
        }
        if !(rate > 0.0) || !rate.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "jump rate must be positive and finite, got {rate}"
            )));
        }
        Ok(Self { side, rate })
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn n_states(&self) -> usize {
        self.side * self.side
    }

    /// State index of wrapped coordinates.
    pub fn node(&self, x: i64, y: i64) -> usize {
        let s = self.side as i64;
        (x.rem_euclid(s) * s + y.rem_euclid(s)) as usize
    }

    /// Wrapped hop distance between two coordinate pairs.
    pub fn hop_distance(&self, a: (i64, i64), b: (i64, i64)) -> usize {
        let s = self.side as i64;
        let wrap = |d: i64| {
            let m = d.rem_euclid(s);
            m.min(s - m)
        };
        (wrap(a.0 - b.0) + wrap(a.1 - b.1)) as usize
    }

    /// All nodes within wrapped hop distance `radius` of `center`.
    pub fn ball(&self, center: (i64, i64), radius: usize) -> Vec<usize> {
        let s = self.side as i64;
        let mut out = Vec::new();
        for x in 0..s {
            for y in 0..s {
                if self.hop_distance((x, y), center) <= radius {
                    out.push(self.node(x, y));
                }
            }
        }
        out
    }

    /// The chain with start and target nodes given as coordinates.
    pub fn network(&self, start: (i64, i64), targets: &[usize]) -> Result<NetworkSpec> {
        let s = self.side as i64;
        let mut edges = Vec::with_capacity(self.n_states() * 4);
        for x in 0..s {
            for y in 0..s {
                let from = self.node(x, y);
                for (dx, dy) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
                    edges.push((from, self.node(x + dx, y + dy), self.rate));
                }
            }
        }
        NetworkSpec::from_edges(
            self.n_states(),
            &edges,
            self.node(start.0, start.1),
            targets.iter().copied(),
        )
    }
}

/// Success probability of reaching the unique farthest node of a
/// `g`-dimensional periodic lattice (side `2ℓ`, jump rate `k`) before a
/// reset at rate `r`, to leading order: the exact geodesic-count form and
/// its Stirling approximation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LatticePStar {
    /// `2^g (gℓ)!/(ℓ!)^g (k/r)^{gℓ}`
    pub exact: f64,
    /// `sqrt(2π gℓ) (2/(πℓ))^{g/2} (gk/r)^{gℓ}`
    pub stirling: f64,
    /// For `g = 2` only: `4^{1+ℓ}/sqrt(πℓ) (k/r)^{2ℓ}`
    pub simplified_2d: Option<f64>,
    /// Log-space values; the linear ones underflow for deep targets.
    pub ln_exact: f64,
    pub ln_stirling: f64,
}

/// Evaluate the lattice success probability via log-gamma, overflow-free.
pub fn lattice_p_star(g: u32, ell: u32, k: f64, r: f64) -> Result<LatticePStar> {
    if g < 1 || ell < 1 {
        return Err(Error::InvalidParameter(format!(
            "need g >= 1 and ell >= 1, got g={g}, ell={ell}"
        )));
    }
    if !(k > 0.0) || !(r > 0.0) || !k.is_finite() || !r.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "rates must be positive and finite, got k={k}, r={r}"
        )));
    }
    let (gf, lf) = (g as f64, ell as f64);
    let gl = (g * ell) as u64;
    let ln_exact = gf * std::f64::consts::LN_2 + ln_factorial(gl) - gf * ln_factorial(ell as u64)
        + gl as f64 * (k.ln() - r.ln());
    let ln_stirling = 0.5 * (2.0 * std::f64::consts::PI * gf * lf).ln()
        + gf / 2.0 * (2.0 / (std::f64::consts::PI * lf)).ln()
        + gl as f64 * ((gf * k).ln() - r.ln());
    let simplified_2d = (g == 2).then(|| {
        ((1.0 + lf) * 4f64.ln() - 0.5 * (std::f64::consts::PI * lf).ln()
            + 2.0 * lf * (k.ln() - r.ln()))
        .exp()
    });
    Ok(LatticePStar {
        exact: ln_exact.exp(),
        stirling: ln_stirling.exp(),
        simplified_2d,
        ln_exact,
        ln_stirling,
    })
}
