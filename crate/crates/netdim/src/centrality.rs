//! Shared centrality machinery: method identifiers, score tables, rankings,
//! and their CSV/JSON serializations.

use std::io::Write;
use std::str::FromStr;

use rayon::prelude::*;

use crate::baselines;
use crate::dimension::{self, DimensionMethod, DimensionOptions};
use crate::error::{NetdimError, Result};
use crate::graph::{Graph, NodeId};

/// The centrality measures the toolkit can rank nodes by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Lvid,
    Lvd,
    /// Shortest-path betweenness (unnormalized Brandes).
    Bc,
    /// PageRank on the undirected random walk.
    Pr,
    Degree,
    /// Classic gravity centrality with a distance cutoff.
    Gravity,
}

impl Method {
    pub const ALL: [Method; 6] = [
        Method::Lvid,
        Method::Lvd,
        Method::Bc,
        Method::Pr,
        Method::Degree,
        Method::Gravity,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Method::Lvid => "lvid",
            Method::Lvd => "lvd",
            Method::Bc => "bc",
            Method::Pr => "pr",
            Method::Degree => "degree",
            Method::Gravity => "gravity",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = NetdimError;

    fn from_str(s: &str) -> Result<Method> {
        match s.to_ascii_lowercase().as_str() {
            "lvid" => Ok(Method::Lvid),
            "lvd" => Ok(Method::Lvd),
            "bc" | "betweenness" => Ok(Method::Bc),
            "pr" | "pagerank" => Ok(Method::Pr),
            "degree" | "dc" => Ok(Method::Degree),
            "gravity" => Ok(Method::Gravity),
            "gg" | "wg" => Err(NetdimError::Config(format!(
                "method {s:?} is not implemented: the generalized/weighted gravity \
                 variants are out of scope; use \"gravity\" for the classic form"
            ))),
            other => Err(NetdimError::Config(format!(
                "unknown method {other:?}; available: lvid, lvd, bc, pr, degree, gravity"
            ))),
        }
    }
}

/// Parameters the individual methods need; defaults match the experiment setup.
#[derive(Debug, Clone, serde::Serialize)]
pub struct RankOptions {
    pub dimension: DimensionOptions,
    pub gravity_radius: u32,
    #[serde(skip)]
    pub pagerank: baselines::PageRankConfig,
}

impl Default for RankOptions {
    fn default() -> Self {
        RankOptions {
            dimension: DimensionOptions::default(),
            gravity_radius: baselines::DEFAULT_GRAVITY_RADIUS,
            pagerank: baselines::PageRankConfig::default(),
        }
    }
}

/// Finite per-node scores for one method, plus the induced ranking
/// (descending score, ties broken by ascending node id).
#[derive(Debug, Clone)]
pub struct CentralityScores {
    method: Method,
    scores: Vec<f64>,
    ranking: Vec<NodeId>,
}

impl CentralityScores {
    /// Wraps raw per-node scores, computing the ranking. Scores must be finite.
    pub fn from_scores(method: Method, scores: Vec<f64>) -> Result<CentralityScores> {
        if let Some(bad) = scores.iter().position(|s| !s.is_finite()) {
            return Err(NetdimError::InvalidArgument(format!(
                "non-finite {method} score at node {bad}"
            )));
        }
        let mut ranking: Vec<NodeId> = (0..scores.len() as NodeId).collect();
        ranking.sort_by(|&a, &b| {
            scores[b as usize]
                .partial_cmp(&scores[a as usize])
                .expect("scores checked finite")
                .then(a.cmp(&b))
        });
        Ok(CentralityScores {
            method,
            scores,
            ranking,
        })
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn score(&self, node: NodeId) -> f64 {
        self.scores[node as usize]
    }

    pub fn scores(&self) -> &[f64] {
        &self.scores
    }

    /// Node ids from best to worst.
    pub fn ranking(&self) -> &[NodeId] {
        &self.ranking
    }

    pub fn top_k(&self, k: usize) -> &[NodeId] {
        &self.ranking[..k.min(self.ranking.len())]
    }

    /// Writes `node,label,score,rank` rows sorted by rank. The label column
    /// falls back to the node id when the graph carries no labels.
    pub fn write_csv<W: Write>(&self, g: &Graph, mut writer: W) -> Result<()> {
        writeln!(writer, "node,label,score,rank")?;
        for (pos, &node) in self.ranking.iter().enumerate() {
            let label = g
                .label(node)
                .map(str::to_string)
                .unwrap_or_else(|| node.to_string());
            writeln!(
                writer,
                "{},{},{},{}",
                node,
                label,
                self.scores[node as usize],
                pos + 1
            )?;
        }
        Ok(())
    }

    /// Same rows as the CSV, as a JSON array sorted by rank.
    pub fn to_json(&self, g: &Graph) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .ranking
            .iter()
            .enumerate()
            .map(|(pos, &node)| {
                let label = g
                    .label(node)
                    .map(str::to_string)
                    .unwrap_or_else(|| node.to_string());
                serde_json::json!({
                    "node": node,
                    "label": label,
                    "score": self.scores[node as usize],
                    "rank": pos + 1,
                })
            })
            .collect();
        serde_json::json!({ "method": self.method.name(), "scores": rows })
    }
}

/// Fills degenerate (sub-two-point) dimension scores with the finite minimum
/// minus one so they rank last, then wraps the result.
fn rank_dimension(
    g: &Graph,
    method: DimensionMethod,
    tag: Method,
    options: &DimensionOptions,
) -> Result<CentralityScores> {
    let per_node: Vec<_> = (0..g.node_count() as NodeId)
        .into_par_iter()
        .map(|node| match method {
            DimensionMethod::Lvd => dimension::lvd_score(g, node, options),
            DimensionMethod::Lvid => dimension::lvid_score(g, node, options),
        })
        .collect::<Result<_>>()?;
    let finite_min = per_node
        .iter()
        .filter_map(|s| s.score)
        .fold(f64::INFINITY, f64::min);
    let sentinel = if finite_min.is_finite() {
        finite_min - 1.0
    } else {
        -1.0
    };
    let scores = per_node
        .into_iter()
        .map(|s| s.score.unwrap_or(sentinel))
        .collect();
    CentralityScores::from_scores(tag, scores)
}

/// Scores every node under `method`. Deterministic: per-node work is collected
/// by index, so thread scheduling cannot reorder results.
pub fn rank_all(g: &Graph, method: Method, options: &RankOptions) -> Result<CentralityScores> {
    match method {
        Method::Lvid => rank_dimension(g, DimensionMethod::Lvid, method, &options.dimension),
        Method::Lvd => rank_dimension(g, DimensionMethod::Lvd, method, &options.dimension),
        Method::Bc => baselines::betweenness(g),
        Method::Pr => baselines::pagerank(g, &options.pagerank),
        Method::Degree => baselines::degree_centrality(g),
        Method::Gravity => baselines::gravity(g, options.gravity_radius),
    }
}
