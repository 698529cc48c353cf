//! Registry of the benchmark networks the experiments target.
//!
//! Datasets are not bundled; see `docs/datasets.md` in the repository root
//! for where to get them and where to put the files. Node/edge counts here
//! are the published figures for each network. Public copies drift (directed
//! vs symmetrized, multi-edges collapsed or not), so loaders warn on a
//! mismatch instead of failing.

use crate::graph::{Graph, ParseSummary};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct DatasetInfo {
    pub name: &'static str,
    pub nodes: usize,
    pub edges: usize,
    pub source: &'static str,
}

pub const REGISTRY: &[DatasetInfo] = &[
    DatasetInfo {
        name: "jazz",
        nodes: 198,
        edges: 2742,
        source: "http://konect.cc/networks/arenas-jazz/",
    },
    DatasetInfo {
        name: "ns",
        nodes: 379,
        edges: 914,
        source: "http://www-personal.umich.edu/~mejn/netdata/ (netscience, largest component)",
    },
    DatasetInfo {
        name: "pb",
        nodes: 1222,
        edges: 16714,
        source: "http://konect.cc/networks/moreno_blogs/ (largest component)",
    },
    DatasetInfo {
        name: "celegans",
        nodes: 297,
        edges: 2359,
        source: "http://www-personal.umich.edu/~mejn/netdata/ (celegansneural, symmetrized)",
    },
    DatasetInfo {
        name: "infectious",
        nodes: 410,
        edges: 17298,
        source: "http://konect.cc/networks/sociopatterns-infectious/",
    },
    DatasetInfo {
        name: "pdzbase",
        nodes: 212,
        edges: 2672,
        source: "http://konect.cc/networks/maayan-pdzbase/",
    },
];

/// Case-insensitive lookup by dataset name (usually the file stem).
pub fn lookup(name: &str) -> Option<&'static DatasetInfo> {
    let lower = name.to_ascii_lowercase();
    REGISTRY.iter().find(|info| info.name == lower)
}

/// Compares a loaded graph against the registry entry matching `stem`, if
/// any. Returns a human-readable warning when counts differ.
pub fn verify_counts(stem: &str, g: &Graph, summary: &ParseSummary) -> Option<String> {
    let info = lookup(stem)?;
    if g.node_count() == info.nodes && g.edge_count() == info.edges {
        return None;
    }
    Some(format!(
        "dataset {:?}: expected {} nodes / {} edges, parsed {} nodes / {} edges \
         ({} duplicate edges collapsed, {} self-loops dropped); public versions drift, continuing",
        info.name,
        info.nodes,
        info.edges,
        g.node_count(),
        g.edge_count(),
        summary.duplicates_collapsed,
        summary.self_loops_dropped,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{parse_edge_list, ParseOptions};

    #[test]
    fn lookup_is_case_insensitive() {
        assert_eq!(lookup("Jazz").unwrap().nodes, 198);
        assert_eq!(lookup("CELEGANS").unwrap().edges, 2359);
        assert!(lookup("unknown").is_none());
    }

    #[test]
    fn verify_warns_on_mismatch_only() {
        let (g, summary) =
            parse_edge_list("a b\nb c".as_bytes(), &ParseOptions::default()).unwrap();
        let warning = verify_counts("jazz", &g, &summary).unwrap();
        assert!(warning.contains("expected 198 nodes"));
        assert!(verify_counts("not-registered", &g, &summary).is_none());
    }
}
