//! Comparison centralities: betweenness, PageRank, degree, and a classic
//! gravity centrality.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::centrality::{CentralityScores, Method};
use crate::error::{NetdimError, Result};
use crate::graph::{Graph, NodeId};

/// Sources per parallel betweenness task. Each chunk accumulates
/// sequentially and chunks are folded in fixed order, so the result is
/// bit-identical for any thread count.
const BETWEENNESS_CHUNK: usize = 32;

/// Cutoff radius used by the gravity experiments.
pub const DEFAULT_GRAVITY_RADIUS: u32 = 3;

/// Unnormalized shortest-path betweenness via Brandes' dependency
/// accumulation. Each unordered pair is counted once; endpoints are excluded.
pub fn betweenness(g: &Graph) -> Result<CentralityScores> {
    let n = g.node_count();
    let sources: Vec<NodeId> = (0..n as NodeId).collect();
    let partials: Vec<Vec<f64>> = sources
        .par_chunks(BETWEENNESS_CHUNK)
        .map(|chunk| {
            let mut acc = vec![0.0f64; n];
            for &s in chunk {
                brandes_from_source(g, s, &mut acc);
            }
            acc
        })
        .collect();

    let mut scores = vec![0.0f64; n];
    for partial in partials {
        for (total, part) in scores.iter_mut().zip(partial) {
            *total += part;
        }
    }
    // Accumulation visits each unordered pair from both endpoints.
    for s in &mut scores {
        *s /= 2.0;
    }
    CentralityScores::from_scores(Method::Bc, scores)
}

fn brandes_from_source(g: &Graph, source: NodeId, acc: &mut [f64]) {
    let n = g.node_count();
    let mut stack: Vec<NodeId> = Vec::with_capacity(n);
    let mut preds: Vec<Vec<NodeId>> = vec![Vec::new(); n];
    let mut sigma = vec![0.0f64; n];
    let mut dist = vec![-1i32; n];

    sigma[source as usize] = 1.0;
    dist[source as usize] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(v) = queue.pop_front() {
        stack.push(v);
        for &w in g.neighbors(v) {
            if dist[w as usize] < 0 {
                dist[w as usize] = dist[v as usize] + 1;
                queue.push_back(w);
            }
            if dist[w as usize] == dist[v as usize] + 1 {
                sigma[w as usize] += sigma[v as usize];
                preds[w as usize].push(v);
            }
        }
    }

    let mut delta = vec![0.0f64; n];
    while let Some(w) = stack.pop() {
        for &v in &preds[w as usize] {
            delta[v as usize] +=
                (sigma[v as usize] / sigma[w as usize]) * (1.0 + delta[w as usize]);
        }
        if w != source {
            acc[w as usize] += delta[w as usize];
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct PageRankConfig {
    pub damping: f64,
    pub tolerance: f64,
    pub max_iterations: usize,
}

impl Default for PageRankConfig {
    fn default() -> Self {
        PageRankConfig {
            damping: 0.85,
            tolerance: 1e-10,
            max_iterations: 200,
        }
    }
}

/// PageRank of the undirected random walk with uniform teleport, by power
/// iteration. Converged when the L1 change drops below `tolerance`; scores
/// sum to 1.
pub fn pagerank(g: &Graph, config: &PageRankConfig) -> Result<CentralityScores> {
    let damping_ok = config.damping > 0.0 && config.damping < 1.0;
    if !damping_ok {
        return Err(NetdimError::InvalidArgument(format!(
            "damping must lie strictly in (0, 1), got {}",
            config.damping
        )));
    }
    let n = g.node_count();
    if n == 0 {
        return Err(NetdimError::EmptyGraph(
            "pagerank needs at least one node".into(),
        ));
    }
    let n_f = n as f64;
    let mut scores = vec![1.0 / n_f; n];
    let mut next = vec![0.0f64; n];
    let mut residual = f64::INFINITY;

    for _ in 0..config.max_iterations {
        let dangling: f64 = g
            .degrees()
            .iter()
            .enumerate()
            .filter(|(_, &d)| d == 0)
            .map(|(i, _)| scores[i])
            .sum();
        let base = (1.0 - config.damping) / n_f + config.damping * dangling / n_f;
        next.fill(base);
        for (u, &score) in scores.iter().enumerate() {
            let deg = g.degree(u as NodeId);
            if deg > 0 {
                let share = config.damping * score / deg as f64;
                for &v in g.neighbors(u as NodeId) {
                    next[v as usize] += share;
                }
            }
        }
        residual = scores.iter().zip(&next).map(|(a, b)| (a - b).abs()).sum();
        std::mem::swap(&mut scores, &mut next);
        if residual < config.tolerance {
            return CentralityScores::from_scores(Method::Pr, scores);
        }
    }
    Err(NetdimError::NonConvergence {
        iterations: config.max_iterations,
        residual,
        last: scores,
    })
}

/// Classic gravity centrality: `score(i) = sum deg(i) deg(j) / d_ij^2` over
/// nodes `j != i` within shortest-path distance `radius`.
pub fn gravity(g: &Graph, radius: u32) -> Result<CentralityScores> {
    if radius < 1 {
        return Err(NetdimError::InvalidArgument(
            "gravity radius must be >= 1".into(),
        ));
    }
    let n = g.node_count();
    let scores: Vec<f64> = (0..n as NodeId)
        .into_par_iter()
        .map(|i| {
            let deg_i = g.degree(i) as f64;
            if deg_i == 0.0 {
                return 0.0;
            }
            // truncated BFS out to `radius`
            let mut dist = vec![0u32; n];
            let mut seen = vec![false; n];
            seen[i as usize] = true;
            let mut queue = VecDeque::from([i]);
            let mut score = 0.0;
            while let Some(u) = queue.pop_front() {
                let du = dist[u as usize];
                if du == radius {
                    continue;
                }
                for &v in g.neighbors(u) {
                    if !seen[v as usize] {
                        seen[v as usize] = true;
                        let dv = du + 1;
                        dist[v as usize] = dv;
                        score += deg_i * g.degree(v) as f64 / (dv as f64 * dv as f64);
                        queue.push_back(v);
                    }
                }
            }
            score
        })
        .collect();
    CentralityScores::from_scores(Method::Gravity, scores)
}

/// Degree of each node.
pub fn degree_centrality(g: &Graph) -> Result<CentralityScores> {
    CentralityScores::from_scores(
        Method::Degree,
        g.degrees().iter().map(|&d| d as f64).collect(),
    )
}
