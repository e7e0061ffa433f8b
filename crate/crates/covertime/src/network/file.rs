//! Network file format: structured text with state labels, an edge list,
//! a start label, and target labels. The generator diagonal is derived,
//! never read.
//!
//! ```toml
//! states = ["left", "mid", "right"]
//! start = "left"
//! targets = ["right"]
//!
//! [[edges]]
//! from = "left"
//! to = "mid"
//! rate = 1.0
//! ```

use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::path::Path;

use super::spec::NetworkSpec;
use crate::{Error, Result};

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct NetworkFile {
    states: Vec<String>,
    start: String,
    targets: Vec<String>,
    #[serde(default)]
    edges: Vec<EdgeEntry>,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct EdgeEntry {
    from: String,
    to: String,
    rate: f64,
}

/// Parse a network document; every label must resolve, duplicates are
/// rejected, self-edges are rejected.
pub fn parse_network(text: &str) -> Result<NetworkSpec> {
    let file: NetworkFile =
        toml::from_str(text).map_err(|e| Error::Config(format!("network file: {e}")))?;
    let mut index: HashMap<&str, usize> = HashMap::new();
    for (i, label) in file.states.iter().enumerate() {
        if index.insert(label.as_str(), i).is_some() {
            return Err(Error::Config(format!("duplicate state label \"{label}\"")));
        }
    }
    let resolve = |label: &str, what: &str| -> Result<usize> {
        index.get(label).copied().ok_or_else(|| {
            Error::Config(format!("{what} \"{label}\" is not a declared state"))
        })
    };
    let start = resolve(&file.start, "start")?;
    let mut targets = Vec::new();
    for t in &file.targets {
        let idx = resolve(t, "target")?;
        if targets.contains(&idx) {
            return Err(Error::Config(format!("duplicate target label \"{t}\"")));
        }
        targets.push(idx);
    }
    let mut edges = Vec::with_capacity(file.edges.len());
    for e in &file.edges {
        let from = resolve(&e.from, "edge source")?;
        let to = resolve(&e.to, "edge destination")?;
        if from == to {
            return Err(Error::Config(format!(
                "self-edge on \"{}\" is not allowed; diagonals are derived",
                e.from
            )));
        }
        if !(e.rate >= 0.0) || !e.rate.is_finite() {
            return Err(Error::Config(format!(
                "edge {} -> {} has invalid rate {}",
                e.from, e.to, e.rate
            )));
        }
        edges.push((from, to, e.rate));
    }
    NetworkSpec::from_edges(file.states.len(), &edges, start, targets)?
        .with_labels(file.states.clone())
}

/// Load a network document from disk.
pub fn load_network(path: &Path) -> Result<NetworkSpec> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
    parse_network(&text)
}

/// Serialize a spec back to the document format (used to ship generated
/// lattice instances).
pub fn network_to_toml(spec: &NetworkSpec) -> String {
    let labels: Vec<String> = (0..spec.n_states()).map(|i| spec.label(i)).collect();
    let mut edges = Vec::new();
    for i in 0..spec.n_states() {
        for (j, rate) in spec.neighbors(i) {
            edges.push(EdgeEntry {
                from: labels[i].clone(),
                to: labels[j].clone(),
                rate,
            });
        }
    }
    let file = NetworkFile {
        states: labels.clone(),
        start: labels[spec.start()].clone(),
        targets: spec.targets().iter().map(|&t| labels[t].clone()).collect(),
        edges,
    };
    toml::to_string(&file).expect("network files serialize cleanly")
}

#[cfg(test)]
mod tests {
    use super::*;

    const GOOD: &str = r#"
states = ["a", "b", "c"]
start = "a"
targets = ["c"]

[[edges]]
from = "a"
to = "b"
rate = 1.0

[[edges]]
from = "b"
to = "c"
rate = 2.0
"#;

    #[test]
    fn parses_and_roundtrips() {
        let net = parse_network(GOOD).unwrap();
        assert_eq!(net.n_states(), 3);
        assert_eq!(net.start(), 0);
        assert_eq!(net.rate(1, 2), 2.0);
        assert_eq!(net.label(2), "c");

        let text = network_to_toml(&net);
        let again = parse_network(&text).unwrap();
        assert_eq!(net, again);
    }

    #[test]
    fn distinct_diagnostics() {
        let unknown_target = GOOD.replace("targets = [\"c\"]", "targets = [\"z\"]");
        assert!(parse_network(&unknown_target)
            .unwrap_err()
            .to_string()
            .contains("\"z\""));

        let dup_state = GOOD.replace("[\"a\", \"b\", \"c\"]", "[\"a\", \"a\", \"c\"]");
        assert!(parse_network(&dup_state)
            .unwrap_err()
            .to_string()
            .contains("duplicate state"));

        let dup_target = GOOD.replace("targets = [\"c\"]", "targets = [\"c\", \"c\"]");
        assert!(parse_network(&dup_target)
            .unwrap_err()
            .to_string()
            .contains("duplicate target"));

        let unknown_key = format!("{GOOD}\nextra = 1\n");
        assert!(parse_network(&unknown_key).is_err());

        let self_edge = format!("{GOOD}\n[[edges]]\nfrom = \"a\"\nto = \"a\"\nrate = 1.0\n");
        assert!(parse_network(&self_edge)
            .unwrap_err()
            .to_string()
            .contains("self-edge"));
    }
}
