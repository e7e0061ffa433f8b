//! Finite continuous-time Markov chain with a start node and target set.

use nalgebra::DMatrix;
use std::collections::BTreeSet;

use crate::{Error, Result};

/// A finite CTMC searcher problem: generator `Q` (zero row sums,
/// non-negative off-diagonals), start node, and non-empty target set.
///
/// The searcher detects only the node it occupies; resetting (when a rate is
/// supplied to the operations) sends it back to `start`.
#[derive(Debug, Clone, PartialEq)]
pub struct NetworkSpec {
    q: DMatrix<f64>,
    start: usize,
    targets: BTreeSet<usize>,
    labels: Option<Vec<String>>,
}

impl NetworkSpec {
    /// Build from an edge list; the diagonal is derived, never supplied.
    pub fn from_edges(
        n_states: usize,
        edges: &[(usize, usize, f64)],
        start: usize,
        targets: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        if n_states == 0 {
            return Err(Error::InvalidParameter("network needs at least one state".into()));
        }
        let mut q = DMatrix::zeros(n_states, n_states);
        for &(from, to, rate) in edges {
            if from >= n_states || to >= n_states {
                return Err(Error::InvalidParameter(format!(
                    "edge ({from}, {to}) out of range for {n_states} states"
                )));
            }
            if !(rate >= 0.0) || !rate.is_finite() {
                return Err(Error::NegativeRate { from, to, rate });
            }
            if from != to {
                q[(from, to)] += rate;
            }
        }
        for i in 0..n_states {
            let row_sum: f64 = (0..n_states).filter(|&j| j != i).map(|j| q[(i, j)]).sum();
            q[(i, i)] = -row_sum;
        }
        Self::from_generator(q, start, targets)
    }

    /// Build from a full generator matrix, validating its invariants:
    /// non-negative off-diagonals and zero row sums (to a relative tolerance
    /// of `1e-12 · max|q|`); violations are errors, never silently repaired.
    pub fn from_generator(
        q: DMatrix<f64>,
        start: usize,
        targets: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        let n = q.nrows();
        if n == 0 || q.ncols() != n {
            return Err(Error::InvalidParameter(format!(
                "generator must be square and non-empty, got {}x{}",
                q.nrows(),
                q.ncols()
            )));
        }
        let max_q = q.iter().fold(0.0f64, |m, &v| m.max(v.abs()));
        for i in 0..n {
            let mut row_sum = 0.0;
            for j in 0..n {
                let v = q[(i, j)];
                if !v.is_finite() {
                    return Err(Error::InvalidParameter(format!(
                        "generator entry ({i}, {j}) is not finite"
                    )));
                }
                if i != j && v < 0.0 {
                    return Err(Error::NegativeRate {
                        from: i,
                        to: j,
                        rate: v,
                    });
                }
                row_sum += v;
            }
            if row_sum.abs() > 1e-12 * max_q.max(1.0) {
                return Err(Error::RowSumViolation { row: i, sum: row_sum });
            }
        }
        if start >= n {
            return Err(Error::InvalidParameter(format!(
                "start state {start} out of range for {n} states"
            )));
        }
        let targets: BTreeSet<usize> = targets.into_iter().collect();
        if targets.is_empty() {
            return Err(Error::InvalidParameter("target set must be non-empty".into()));
        }
        if let Some(&bad) = targets.iter().find(|&&t| t >= n) {
            return Err(Error::InvalidParameter(format!(
                "target state {bad} out of range for {n} states"
            )));
        }
        Ok(Self {
            q,
            start,
            targets,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n_states() {
            return Err(Error::InvalidParameter(format!(
                "{} labels for {} states",
                labels.len(),
                self.n_states()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n_states(&self) -> usize {
        self.q.nrows()
    }

    pub fn generator(&self) -> &DMatrix<f64> {
        &self.q
    }

    pub fn rate(&self, from: usize, to: usize) -> f64 {
        self.q[(from, to)]
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn targets(&self) -> &BTreeSet<usize> {
        &self.targets
    }

    /// Same chain, different target set.
    pub fn with_targets(&self, targets: impl IntoIterator<Item = usize>) -> Result<Self> {
        Self::from_generator(self.q.clone(), self.start, targets)
            .map(|s| match &self.labels {
                Some(l) => s.with_labels(l.clone()).expect("same length"),
                None => s,
            })
    }

    pub fn label(&self, state: usize) -> String {
        match &self.labels {
            Some(l) => l[state].clone(),
            None => state.to_string(),
        }
    }

    /// Out-neighbors with positive rate.
    pub fn neighbors(&self, state: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        (0..self.n_states())
            .filter(move |&j| j != state)
            .map(move |j| (j, self.q[(state, j)]))
            .filter(|&(_, rate)| rate > 0.0)
    }

    /// Total exit rate of a state.
    pub fn exit_rate(&self, state: usize) -> f64 {
        -self.q[(state, state)]
    }

    /// States reachable from `from` along positive-rate edges (including
    /// `from` itself).
    pub fn reachable_from(&self, from: usize) -> Vec<bool> {
        let n = self.n_states();
        let mut seen = vec![false; n];
        let mut stack = vec![from];
        seen[from] = true;
        while let Some(i) = stack.pop() {
            for (j, _) in self.neighbors(i) {
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen
    }

    /// States from which some member of `set` is reachable.
    pub fn can_reach(&self, set: &BTreeSet<usize>) -> Vec<bool> {
        let n = self.n_states();
        let mut seen = vec![false; n];
        let mut stack: Vec<usize> = set.iter().copied().collect();
        for &s in set {
            seen[s] = true;
        }
        while let Some(j) = stack.pop() {
            for i in 0..n {
                if i != j && !seen[i] && self.q[(i, j)] > 0.0 {
                    seen[i] = true;
                    stack.push(i);
                }
            }
        }
        seen
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn path_graph(k: f64) -> NetworkSpec {
        NetworkSpec::from_edges(3, &[(0, 1, k), (1, 0, k), (1, 2, k), (2, 1, k)], 0, [2]).unwrap()
    }

    #[test]
    fn edge_builder_derives_diagonal() {
        let net = path_graph(2.0);
        assert_eq!(net.rate(0, 0), -2.0);
        assert_eq!(net.rate(1, 1), -4.0);
        assert_eq!(net.exit_rate(1), 4.0);
    }

    #[test]
    fn row_sum_violation_is_an_error() {
        let mut q = DMatrix::zeros(2, 2);
        q[(0, 1)] = 1.0;
        q[(0, 0)] = -0.9; // broken row
        q[(1, 1)] = 0.0;
        let err = NetworkSpec::from_generator(q, 0, [1]).unwrap_err();
        assert!(matches!(err, Error::RowSumViolation { row: 0, .. }));
    }

    #[test]
    fn negative_off_diagonal_is_an_error() {
        let mut q = DMatrix::zeros(2, 2);
        q[(0, 1)] = -1.0;
        q[(0, 0)] = 1.0;
        let err = NetworkSpec::from_generator(q, 0, [1]).unwrap_err();
        assert!(matches!(err, Error::NegativeRate { .. }));
    }

    #[test]
    fn reachability_helpers() {
        // 0 -> 1 -> 2, plus isolated 3
        let net = NetworkSpec::from_edges(4, &[(0, 1, 1.0), (1, 2, 1.0)], 0, [2]).unwrap();
        let fwd = net.reachable_from(0);
        assert_eq!(fwd, vec![true, true, true, false]);
        let back = net.can_reach(&[2].into_iter().collect());
        assert_eq!(back, vec![true, true, true, false]);
    }
}
