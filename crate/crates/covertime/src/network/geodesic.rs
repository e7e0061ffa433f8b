//! Hop-distance layering and geodesic rate-product sums.

use std::collections::BTreeSet;
use std::collections::VecDeque;

use super::spec::NetworkSpec;
use crate::{Error, Result};

/// Breadth-first layering of the support graph from the start node.
#[derive(Debug, Clone, PartialEq)]
pub struct GeodesicAnalysis {
    /// Hop distance from the start; `None` for unreachable states.
    pub h: Vec<Option<usize>>,
    /// Largest hop distance over the target set.
    pub h_star: usize,
    /// Targets at distance `h_star` — the far target set.
    pub far_set: BTreeSet<usize>,
}

/// Check every spec invariant and layer the support graph.
///
/// Distinct failures are distinct errors: row-sum violations and negative
/// rates are caught at [`NetworkSpec`] construction; unreachable targets are
/// caught here.
pub fn validate_network(spec: &NetworkSpec) -> Result<GeodesicAnalysis> {
    let n = spec.n_states();
    let mut h: Vec<Option<usize>> = vec![None; n];
    let mut queue = VecDeque::new();
    h[spec.start()] = Some(0);
    queue.push_back(spec.start());
    while let Some(i) = queue.pop_front() {
        let d = h[i].expect("queued states are labeled");
        for (j, _) in spec.neighbors(i) {
            if h[j].is_none() {
                h[j] = Some(d + 1);
                queue.push_back(j);
            }
        }
    }
    for &t in spec.targets() {
        if h[t].is_none() {
            return Err(Error::UnreachableTarget(t));
        }
    }
    let h_star = spec
        .targets()
        .iter()
        .map(|&t| h[t].expect("checked above"))
        .max()
        .expect("targets non-empty");
    let far_set = spec
        .targets()
        .iter()
        .copied()
        .filter(|&t| h[t] == Some(h_star))
        .collect();
    Ok(GeodesicAnalysis { h, h_star, far_set })
}

/// Hop distance from the start to the set `J` and the sum over all
/// minimum-length paths from the start into `J` of the product of jump rates
/// along the path.
///
/// Computed by forward dynamic programming over BFS layers: `w_0 = δ_start`,
/// `w_{t+1}(j) = Σ_i w_t(i) q(i, j)`, then `Λ(J) = Σ_{j∈J} w_h(j)`. A
/// minimum-length walk cannot revisit a state or enter `J` early, so the walk
/// sum equals the geodesic path sum without any path enumeration.
pub fn lambda_of_set(spec: &NetworkSpec, j_set: &BTreeSet<usize>) -> Result<(usize, f64)> {
    if j_set.is_empty() {
        return Err(Error::InvalidParameter(
            "lambda of the empty set is undefined".into(),
        ));
    }
    if let Some(&bad) = j_set.iter().find(|&&j| j >= spec.n_states()) {
        return Err(Error::InvalidParameter(format!(
            "state {bad} out of range"
        )));
    }
    if j_set.contains(&spec.start()) {
        // zero-length geodesic: the empty product with unit initial weight
        return Ok((0, 1.0));
    }
    let n = spec.n_states();
    // BFS distances from start
    let mut dist: Vec<Option<usize>> = vec![None; n];
    let mut queue = VecDeque::new();
    dist[spec.start()] = Some(0);
    queue.push_back(spec.start());
    while let Some(i) = queue.pop_front() {
        let d = dist[i].expect("queued");
        for (j, _) in spec.neighbors(i) {
            if dist[j].is_none() {
                dist[j] = Some(d + 1);
                queue.push_back(j);
            }
        }
    }
    let h = j_set
        .iter()
        .filter_map(|&j| dist[j])
        .min()
        .ok_or_else(|| Error::UnreachableTarget(*j_set.iter().next().expect("non-empty")))?;

    let mut w = vec![0.0f64; n];
    w[spec.start()] = 1.0;
    for _ in 0..h {
        let mut next = vec![0.0f64; n];
        for i in 0..n {
            if w[i] != 0.0 {
                for (j, rate) in spec.neighbors(i) {
                    next[j] += w[i] * rate;
                }
            }
        }
        w = next;
    }
    Ok((h, j_set.iter().map(|&j| w[j]).sum()))
}

/// Exhaustive reference for [`lambda_of_set`]: enumerate every geodesic path
/// explicitly and accumulate rate products. Exponential cost — intended for
/// validation on small networks only.
pub fn enumerate_geodesics(spec: &NetworkSpec, j_set: &BTreeSet<usize>) -> Result<(usize, f64)> {
    if j_set.is_empty() {
        return Err(Error::InvalidParameter(
            "lambda of the empty set is undefined".into(),
        ));
    }
    if j_set.contains(&spec.start()) {
        return Ok((1, 1.0));
    }
    let (h, _) = lambda_of_set(spec, j_set)?;
    // depth-first over walks of length exactly h
    fn recurse(
        spec: &NetworkSpec,
        j_set: &BTreeSet<usize>,
        h: usize,
        state: usize,
        depth: usize,
        product: f64,
        count: &mut usize,
        lambda: &mut f64,
    ) {
        if depth == h {
            if j_set.contains(&state) {
                *count += 1;
                *lambda += product;
            }
            return;
        }
        for (j, rate) in spec.neighbors(state) {
            recurse(spec, j_set, h, j, depth + 1, product * rate, count, lambda);
        }
    }
    let mut count = 0usize;
    let mut lambda = 0.0f64;
    recurse(spec, j_set, h, spec.start(), 0, 1.0, &mut count, &mut lambda);
    Ok((count, lambda))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_graph(k: f64) -> NetworkSpec {
        NetworkSpec::from_edges(3, &[(0, 1, k), (1, 0, k), (1, 2, k), (2, 1, k)], 0, [2]).unwrap()
    }

    #[test]
    fn path_graph_layers() {
        let net = path_graph(1.5);
        let g = validate_network(&net).unwrap();
        assert_eq!(g.h, vec![Some(0), Some(1), Some(2)]);
        assert_eq!(g.h_star, 2);
        assert_eq!(g.far_set, [2].into_iter().collect());
    }

    #[test]
    fn unreachable_target_detected() {
        let net = NetworkSpec::from_edges(3, &[(0, 1, 1.0)], 0, [2]).unwrap();
        let err = validate_network(&net).unwrap_err();
        assert!(matches!(err, Error::UnreachableTarget(2)));
    }

    #[test]
    fn single_path_lambda_is_rate_product() {
        let net = path_graph(3.0);
        let (h, lam) = lambda_of_set(&net, &[2].into_iter().collect()).unwrap();
        assert_eq!(h, 2);
        assert!((lam - 9.0).abs() < 1e-14);
    }

    #[test]
    fn lambda_of_mixed_distances_takes_nearest() {
        let net = path_graph(1.0);
        let (h, lam) = lambda_of_set(&net, &[1, 2].into_iter().collect()).unwrap();
        assert_eq!(h, 1);
        assert!((lam - 1.0).abs() < 1e-14);
    }

    #[test]
    fn lambda_additive_over_disjoint_geodesics() {
        // two symmetric length-2 branches from 0: 0->1->2 and 0->3->4
        let net = NetworkSpec::from_edges(
            5,
            &[(0, 1, 2.0), (1, 2, 3.0), (0, 3, 2.0), (3, 4, 3.0)],
            0,
            [2, 4],
        )
        .unwrap();
        let (h, lam) = lambda_of_set(&net, &[2, 4].into_iter().collect()).unwrap();
        assert_eq!(h, 2);
        assert!((lam - 12.0).abs() < 1e-14, "2λ with λ = 6");
    }

    #[test]
    fn dp_matches_enumeration() {
        let net = NetworkSpec::from_edges(
            5,
            &[
                (0, 1, 1.0),
                (0, 2, 2.0),
                (1, 3, 0.5),
                (2, 3, 1.5),
                (3, 4, 1.0),
                (1, 0, 1.0),
                (4, 0, 2.0),
            ],
            0,
            [4],
        )
        .unwrap();
        for target in [vec![3], vec![4], vec![3, 4]] {
            let set: BTreeSet<usize> = target.into_iter().collect();
            let (h_dp, lam_dp) = lambda_of_set(&net, &set).unwrap();
            let (_, lam_enum) = enumerate_geodesics(&net, &set).unwrap();
            assert!(
                (lam_dp - lam_enum).abs() < 1e-12 * lam_enum.max(1.0),
                "set {set:?}: dp {lam_dp} enum {lam_enum} (h={h_dp})"
            );
        }
    }

    #[test]
    fn start_in_set_gives_zero_length() {
        let net = path_graph(1.0);
        let (h, lam) = lambda_of_set(&net, &[0, 2].into_iter().collect()).unwrap();
        assert_eq!(h, 0);
        assert_eq!(lam, 1.0);
    }
}
