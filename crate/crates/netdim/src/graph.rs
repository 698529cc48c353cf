//! Undirected simple graphs: edge-list parsing, BFS distances, eccentricity,
//! connected components.
//!
//! Invariants maintained by construction:
//! - adjacency is symmetric and sorted, with no self-loops or duplicates
//! - node ids are exactly `0..node_count`
//! - `degrees[i] == adjacency[i].len()` and `sum(degrees) == 2 * edge_count`
//!
//! A [`Graph`] is immutable after construction; every query here is read-only
//! and safe to run concurrently from many threads.

use std::collections::HashMap;
use std::collections::VecDeque;
use std::io::{BufRead, Write};

use crate::error::{NetdimError, Result};

/// Node identifier, always in `0..node_count`.
pub type NodeId = u32;

/// Immutable undirected simple graph with contiguous node ids.
#[derive(Debug, Clone)]
pub struct Graph {
    adjacency: Vec<Vec<NodeId>>,
    degrees: Vec<u32>,
    edge_count: usize,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph on `node_count` nodes from an edge iterator.
    ///
    /// Self-loops and duplicate edges are discarded silently; use
    /// [`parse_edge_list`] when counts of discarded lines matter.
    pub fn from_edges<I>(node_count: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (NodeId, NodeId)>,
    {
        let mut normalized: Vec<(NodeId, NodeId)> = Vec::new();
        for (u, v) in edges {
            if u as usize >= node_count {
                return Err(NetdimError::NodeOutOfRange {
                    node: u,
                    count: node_count,
                });
            }
            if v as usize >= node_count {
                return Err(NetdimError::NodeOutOfRange {
                    node: v,
                    count: node_count,
                });
            }
            if u == v {
                continue;
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        normalized.dedup();
        Ok(Self::from_clean_edges(node_count, &normalized, None))
    }

    /// `edges` must be normalized (u < v), sorted, deduplicated, in range.
    fn from_clean_edges(
        node_count: usize,
        edges: &[(NodeId, NodeId)],
        labels: Option<Vec<String>>,
    ) -> Graph {
        let mut adjacency = vec![Vec::new(); node_count];
        for &(u, v) in edges {
            adjacency[u as usize].push(v);
            adjacency[v as usize].push(u);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        let degrees = adjacency.iter().map(|n| n.len() as u32).collect();
        Graph {
            adjacency,
            degrees,
            edge_count: edges.len(),
            labels,
        }
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, node: NodeId) -> u32 {
        self.degrees[node as usize]
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// Sum of all degrees, i.e. `2 * edge_count`.
    pub fn total_degree(&self) -> u64 {
        2 * self.edge_count as u64
    }

    pub fn neighbors(&self, node: NodeId) -> &[NodeId] {
        &self.adjacency[node as usize]
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        0..self.node_count() as NodeId
    }

    /// Each edge once, as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, nbrs)| {
            let u = u as NodeId;
            nbrs.iter().filter(move |&&v| u < v).map(move |&v| (u, v))
        })
    }

    /// Original label for a node, when the source file carried labels.
    pub fn label(&self, node: NodeId) -> Option<&str> {
        self.labels.as_ref().map(|l| l[node as usize].as_str())
    }

    pub fn has_labels(&self) -> bool {
        self.labels.is_some()
    }

    fn check_node(&self, node: NodeId) -> Result<()> {
        if (node as usize) < self.node_count() {
            Ok(())
        } else {
            Err(NetdimError::NodeOutOfRange {
                node,
                count: self.node_count(),
            })
        }
    }
}

/// Per-source BFS distances. Unreachable nodes are `None`, never a large
/// finite value, so maxima stay exact.
#[derive(Debug, Clone)]
pub struct DistanceField {
    source: NodeId,
    dist: Vec<Option<u32>>,
}

impl DistanceField {
    pub fn source(&self) -> NodeId {
        self.source
    }

    /// Shortest-path distance from the source, `None` if unreachable.
    pub fn distance(&self, node: NodeId) -> Option<u32> {
        self.dist[node as usize]
    }

    pub fn distances(&self) -> &[Option<u32>] {
        &self.dist
    }

    /// Largest finite distance; 0 when the source is isolated.
    pub fn max_finite(&self) -> u32 {
        self.dist.iter().flatten().copied().max().unwrap_or(0)
    }
}

/// Unweighted single-source shortest paths.
pub fn bfs_distances(g: &Graph, source: NodeId) -> Result<DistanceField> {
    g.check_node(source)?;
    let mut dist: Vec<Option<u32>> = vec![None; g.node_count()];
    dist[source as usize] = Some(0);
    let mut queue = VecDeque::new();
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let du = dist[u as usize].unwrap();
        for &v in g.neighbors(u) {
            if dist[v as usize].is_none() {
                dist[v as usize] = Some(du + 1);
                queue.push_back(v);
            }
        }
    }
    Ok(DistanceField { source, dist })
}

/// Maximum finite BFS distance from `node`; 0 for an isolated node.
pub fn eccentricity(g: &Graph, node: NodeId) -> Result<u32> {
    Ok(bfs_distances(g, node)?.max_finite())
}

/// Connected components as sorted node lists, ordered by their minimum node id.
pub fn connected_components(g: &Graph) -> Vec<Vec<NodeId>> {
    let mut seen = vec![false; g.node_count()];
    let mut components = Vec::new();
    for start in g.nodes() {
        if seen[start as usize] {
            continue;
        }
        let mut comp = vec![start];
        seen[start as usize] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    comp.push(v);
                    queue.push_back(v);
                }
            }
        }
        comp.sort_unstable();
        components.push(comp);
    }
    components
}

/// Induced subgraph on the largest connected component, ids re-densified in
/// ascending original-id order. Ties between equal-sized components go to the
/// one containing the smallest original id.
///
/// Returns the subgraph and the old-id → new-id mapping (`None` for dropped
/// nodes).
pub fn largest_component(g: &Graph) -> Result<(Graph, Vec<Option<NodeId>>)> {
    if g.node_count() == 0 {
        return Err(NetdimError::EmptyGraph(
            "cannot take component of empty graph".into(),
        ));
    }
    let components = connected_components(g);
    // Components come out ordered by minimum id, so the first maximal one wins ties.
    let largest = components
        .iter()
        .max_by(|a, b| a.len().cmp(&b.len()).then(b[0].cmp(&a[0])))
        .expect("nonempty graph has at least one component");

    let mut mapping: Vec<Option<NodeId>> = vec![None; g.node_count()];
    for (new_id, &old_id) in largest.iter().enumerate() {
        mapping[old_id as usize] = Some(new_id as NodeId);
    }
    let mut edges = Vec::new();
    for &old_u in largest {
        let new_u = mapping[old_u as usize].unwrap();
        for &old_v in g.neighbors(old_u) {
            if old_u < old_v {
                edges.push((new_u, mapping[old_v as usize].unwrap()));
            }
        }
    }
    let labels = g
        .labels
        .as_ref()
        .map(|l| largest.iter().map(|&old| l[old as usize].clone()).collect());
    let mut sub = Graph::from_edges(largest.len(), edges)?;
    sub.labels = labels;
    Ok((sub, mapping))
}

/// Knobs for [`parse_edge_list`].
#[derive(Debug, Clone)]
pub struct ParseOptions {
    /// Treat endpoint tokens as opaque labels, assigned dense ids in
    /// first-appearance order. When false, tokens must be nonnegative
    /// integers used directly as ids (gaps become isolated nodes).
    pub allow_labels: bool,
    /// Lines starting with this character (after leading whitespace) are skipped.
    pub comment_prefix: char,
}

impl Default for ParseOptions {
    fn default() -> Self {
        ParseOptions {
            allow_labels: true,
            comment_prefix: '#',
        }
    }
}

/// What the parser discarded while reading an edge list.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, serde::Serialize)]
pub struct ParseSummary {
    pub self_loops_dropped: usize,
    pub duplicates_collapsed: usize,
    pub lines_read: usize,
}

/// Parses an undirected simple graph from edge-list text.
///
/// One edge per line: two whitespace-separated endpoint tokens; anything after
/// the second token (e.g. a weight) is ignored. Blank lines and comment lines
/// are skipped. Direction and multiplicity in the source are erased: the pair
/// is symmetrized, duplicates collapse, self-loops drop (both counted in the
/// summary).
pub fn parse_edge_list<R: BufRead>(
    reader: R,
    options: &ParseOptions,
) -> Result<(Graph, ParseSummary)> {
    let mut summary = ParseSummary::default();
    let mut edges: Vec<(NodeId, NodeId)> = Vec::new();
    let mut labels: Vec<String> = Vec::new();
    let mut label_ids: HashMap<String, NodeId> = HashMap::new();
    let mut max_numeric_id: u32 = 0;

    let mut intern = |token: &str, line: usize| -> Result<NodeId> {
        if let Some(&id) = label_ids.get(token) {
            return Ok(id);
        }
        let id = labels.len() as NodeId;
        labels.push(token.to_string());
        label_ids.insert(token.to_string(), id);
        let _ = line;
        Ok(id)
    };

    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        summary.lines_read += 1;
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with(options.comment_prefix) {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let (a, b) = match (tokens.next(), tokens.next()) {
            (Some(a), Some(b)) => (a, b),
            _ => {
                return Err(NetdimError::Parse {
                    line: line_no,
                    msg: format!("expected two endpoint tokens, got {trimmed:?}"),
                })
            }
        };
        let (u, v) = if options.allow_labels {
            (intern(a, line_no)?, intern(b, line_no)?)
        } else {
            let parse_id = |tok: &str| -> Result<NodeId> {
                tok.parse::<NodeId>().map_err(|_| NetdimError::Parse {
                    line: line_no,
                    msg: format!("endpoint {tok:?} is not a nonnegative integer id"),
                })
            };
            let (u, v) = (parse_id(a)?, parse_id(b)?);
            max_numeric_id = max_numeric_id.max(u).max(v);
            (u, v)
        };
        if u == v {
            summary.self_loops_dropped += 1;
            continue;
        }
        edges.push((u.min(v), u.max(v)));
    }

    if edges.is_empty() {
        return Err(NetdimError::EmptyGraph(
            "edge list contains no usable edges".into(),
        ));
    }
    let before = edges.len();
    edges.sort_unstable();
    edges.dedup();
    summary.duplicates_collapsed = before - edges.len();

    let (node_count, labels) = if options.allow_labels {
        (labels.len(), Some(labels))
    } else {
        (max_numeric_id as usize + 1, None)
    };
    Ok((Graph::from_clean_edges(node_count, &edges, labels), summary))
}

/// Writes `u v\n` per edge, with original labels when `use_labels` is set and
/// the graph has them, internal ids otherwise.
pub fn write_edge_list<W: Write>(g: &Graph, mut writer: W, use_labels: bool) -> Result<()> {
    for (u, v) in g.edges() {
        match (use_labels, g.label(u), g.label(v)) {
            (true, Some(lu), Some(lv)) => writeln!(writer, "{lu} {lv}")?,
            _ => writeln!(writer, "{u} {v}")?,
        }
    }
    Ok(())
}

/// Diameter of the (possibly disconnected) graph: maximum finite eccentricity.
pub fn diameter(g: &Graph) -> Result<u32> {
    let mut best = 0;
    for node in g.nodes() {
        best = best.max(eccentricity(g, node)?);
    }
    Ok(best)
}
