//! Shared oracles and graph generators for the integration suites.
//!
//! Everything here recomputes results along routes independent of the
//! library's implementations: Floyd–Warshall instead of BFS, literal
//! shortest-path enumeration instead of Brandes, direct volume sums plus a
//! two-pass centered regression instead of the ring/one-pass pipeline, and
//! quadratic pair enumeration instead of the merge-based tau.

// Each integration test target compiles this module separately and none of
// them uses every helper. The oracles deliberately use plain index loops.
#![allow(dead_code)]
#![allow(clippy::needless_range_loop)]

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

use netdim::graph::NodeId;
use netdim::Graph;

/// All-pairs shortest paths by Floyd–Warshall. `None` = unreachable.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<u32>>> {
    let n = g.node_count();
    let mut dist = vec![vec![None; n]; n];
    for u in 0..n {
        dist[u][u] = Some(0u32);
        for &v in g.neighbors(u as NodeId) {
            dist[u][v as usize] = Some(1);
        }
    }
    for k in 0..n {
        for i in 0..n {
            if let Some(dik) = dist[i][k] {
                for j in 0..n {
                    if let Some(dkj) = dist[k][j] {
                        let through = dik + dkj;
                        if dist[i][j].is_none_or(|d| through < d) {
                            dist[i][j] = Some(through);
                        }
                    }
                }
            }
        }
    }
    dist
}

/// Every shortest path from `s` to `t`, found by walking edges that step one
/// unit closer to `t` according to the distance oracle.
fn enumerate_shortest_paths(
    g: &Graph,
    dist: &[Vec<Option<u32>>],
    s: usize,
    t: usize,
) -> Vec<Vec<usize>> {
    let mut paths = Vec::new();
    let mut current = vec![s];
    fn extend(
        g: &Graph,
        dist: &[Vec<Option<u32>>],
        t: usize,
        current: &mut Vec<usize>,
        paths: &mut Vec<Vec<usize>>,
    ) {
        let here = *current.last().unwrap();
        if here == t {
            paths.push(current.clone());
            return;
        }
        let remaining = dist[here][t].unwrap();
        for &next in g.neighbors(here as NodeId) {
            if dist[next as usize][t] == Some(remaining - 1) {
                current.push(next as usize);
                extend(g, dist, t, current, paths);
                current.pop();
            }
        }
    }
    if dist[s][t].is_some() {
        extend(g, dist, t, &mut current, &mut paths);
    }
    paths
}

/// Unnormalized betweenness by literal path enumeration: for each unordered
/// pair, the fraction of its shortest paths each interior node sits on.
pub fn brute_betweenness(g: &Graph) -> Vec<f64> {
    let n = g.node_count();
    let dist = floyd_warshall(g);
    let mut scores = vec![0.0f64; n];
    for s in 0..n {
        for t in s + 1..n {
            let paths = enumerate_shortest_paths(g, &dist, s, t);
            if paths.is_empty() {
                continue;
            }
            let sigma = paths.len() as f64;
            let mut on_path = vec![0usize; n];
            for path in &paths {
                for &v in &path[1..path.len() - 1] {
                    on_path[v] += 1;
                }
            }
            for v in 0..n {
                scores[v] += on_path[v] as f64 / sigma;
            }
        }
    }
    scores
}

/// Two-pass centered least-squares slope.
fn two_pass_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / n;
    let mut num = 0.0;
    let mut den = 0.0;
    for &(x, y) in points {
        num += (x - mean_x) * (y - mean_y);
        den += (x - mean_x) * (x - mean_x);
    }
    num / den
}

#[derive(Clone, Copy)]
pub enum NaiveMethod {
    Lvd,
    Lvid,
}

/// Naive whole-graph dimension scores: Floyd–Warshall distances, direct
/// volume sums per radius, two-pass regression, degenerate nodes filled with
/// the finite minimum minus one.
pub fn naive_dimension_scores(g: &Graph, method: NaiveMethod) -> Vec<f64> {
    let n = g.node_count();
    let dist = floyd_warshall(g);
    let total: f64 = g.degrees().iter().map(|&d| d as f64).sum();
    let mut raw: Vec<Option<f64>> = Vec::with_capacity(n);
    for i in 0..n {
        let ecc = dist[i].iter().flatten().copied().max().unwrap_or(0);
        if ecc < 2 {
            raw.push(None);
            continue;
        }
        let mut points = Vec::new();
        for l in 1..=ecc {
            let volume: f64 = (0..n)
                .filter(|&j| matches!(dist[i][j], Some(d) if d <= l))
                .map(|j| g.degree(j as NodeId) as f64)
                .sum();
            let y = match method {
                NaiveMethod::Lvd => volume.ln(),
                NaiveMethod::Lvid => {
                    let p = volume / total;
                    -p * p.ln()
                }
            };
            points.push(((l as f64).ln(), y));
        }
        raw.push(Some(-two_pass_slope(&points)));
    }
    let finite_min = raw.iter().flatten().copied().fold(f64::INFINITY, f64::min);
    let sentinel = if finite_min.is_finite() {
        finite_min - 1.0
    } else {
        -1.0
    };
    raw.into_iter().map(|s| s.unwrap_or(sentinel)).collect()
}

/// Quadratic concordant/discordant enumeration. Returns `n_p - n_n` exactly.
pub fn brute_concordant_minus_discordant(x: &[f64], y: &[f64]) -> i64 {
    let n = x.len();
    let mut concordant = 0i64;
    let mut discordant = 0i64;
    for i in 0..n {
        for j in i + 1..n {
            let dx = x[i].partial_cmp(&x[j]).unwrap();
            let dy = y[i].partial_cmp(&y[j]).unwrap();
            use std::cmp::Ordering::*;
            match (dx, dy) {
                (Less, Less) | (Greater, Greater) => concordant += 1,
                (Less, Greater) | (Greater, Less) => discordant += 1,
                _ => {}
            }
        }
    }
    concordant - discordant
}

/// Reference tau per the plain definition `2 (n_p - n_n) / (n (n-1))`.
pub fn brute_kendall_tau(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    2.0 * brute_concordant_minus_discordant(x, y) as f64 / (n * (n - 1.0))
}

/// Connected graph with `n` in `2..=max_nodes`: a random spanning tree plus
/// random extra edges.
pub fn random_connected_graph(rng: &mut StdRng, max_nodes: usize) -> Graph {
    let n = rng.gen_range(2..=max_nodes);
    random_connected_graph_exact(rng, n)
}

/// Connected graph with exactly `n` nodes.
pub fn random_connected_graph_exact(rng: &mut StdRng, n: usize) -> Graph {
    let mut order: Vec<u32> = (0..n as u32).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        edges.push((order[i], parent));
    }
    let extra = rng.gen_range(0..=n);
    for _ in 0..extra {
        let u = rng.gen_range(0..n as u32);
        let v = rng.gen_range(0..n as u32);
        if u != v {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Preferential-attachment-style graph: each new node attaches to `m`
/// endpoints sampled from the existing edge list, giving a heavy-tailed
/// degree sequence like the benchmark networks'.
pub fn scale_free_graph(rng: &mut StdRng, n: usize, m: usize) -> Graph {
    assert!(n > m && m >= 1);
    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut endpoints: Vec<u32> = Vec::new();
    for v in 1..=m as u32 {
        edges.push((v, 0));
        endpoints.extend([v, 0]);
    }
    for v in m as u32 + 1..n as u32 {
        for _ in 0..m {
            let target = endpoints[rng.gen_range(0..endpoints.len())];
            if target != v {
                edges.push((v, target));
                endpoints.extend([v, target]);
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn path(n: u32) -> Graph {
    Graph::from_edges(n as usize, (0..n - 1).map(|i| (i, i + 1))).unwrap()
}

pub fn cycle(n: u32) -> Graph {
    Graph::from_edges(n as usize, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn star(leaves: u32) -> Graph {
    Graph::from_edges(leaves as usize + 1, (1..=leaves).map(|i| (0, i))).unwrap()
}

pub fn complete(n: u32) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n as usize, edges).unwrap()
}
