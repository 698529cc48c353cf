//! Local volume dimension (LVD) and local volume information dimension (LVID).
//!
//! Both scores describe how fast the degree mass around a node grows with the
//! shortest-path radius `l`:
//!
//! - the volume `s_i(l)` is the total degree of all nodes within distance `l`
//!   of node `i` (the node's own degree included by default);
//! - LVD is the negated slope of `ln s_i(l)` regressed on `ln l`;
//! - LVID replaces `ln s_i(l)` with the entropy term
//!   `-(s_i(l)/S) ln(s_i(l)/S)`, where `S` is the total degree of the graph,
//!   and again takes the negated regression slope.
//!
//! `l` runs from 1 to the node's eccentricity, so a node needs eccentricity
//! at least 2 to produce a two-point regression; nodes below that are
//! *degenerate* and carry no finite score on their own (ranking assigns them
//! the method minimum minus one, see [`crate::centrality::rank_all`]).

use crate::error::{NetdimError, Result};
use crate::graph::{bfs_distances, Graph, NodeId};
use crate::stats::fit_slope;

/// Degree mass within each radius `l = 1..=eccentricity(node)`.
#[derive(Debug, Clone, PartialEq)]
pub struct VolumeProfile {
    pub node: NodeId,
    /// `volumes[l-1]` is `s_i(l)`; nondecreasing, and equal to `total_degree`
    /// at the last entry on a connected graph.
    pub volumes: Vec<u64>,
    /// `S`, the sum of all degrees in the graph.
    pub total_degree: u64,
}

/// Which of the two dimension scores a value belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DimensionMethod {
    Lvd,
    Lvid,
}

/// Per-node regression result. `score` is `None` for degenerate nodes
/// (fewer than two regression points).
#[derive(Debug, Clone, PartialEq)]
pub struct DimensionScore {
    pub node: NodeId,
    pub score: Option<f64>,
    pub method: DimensionMethod,
    pub points_used: usize,
}

/// Knobs the defining formulas leave open.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct DimensionOptions {
    /// Count the node's own degree in `s_i(l)` (distance 0 <= l).
    pub include_self: bool,
    /// Score = minus the regression slope. Disabling flips every score's sign.
    pub negate_slope: bool,
}

impl Default for DimensionOptions {
    fn default() -> Self {
        DimensionOptions {
            include_self: true,
            negate_slope: true,
        }
    }
}

/// Computes `s_i(l)` for `l = 1..=eccentricity(node)` via one BFS and a
/// prefix sum over distance rings.
pub fn volume_profile(g: &Graph, node: NodeId, include_self: bool) -> Result<VolumeProfile> {
    let field = bfs_distances(g, node)?;
    let ecc = field.max_finite() as usize;
    if ecc == 0 {
        return Err(NetdimError::Degenerate(format!(
            "node {node} is isolated; volume profile is empty"
        )));
    }
    let mut ring_degree = vec![0u64; ecc + 1];
    for (other, dist) in field.distances().iter().enumerate() {
        if let Some(d) = dist {
            ring_degree[*d as usize] += g.degree(other as NodeId) as u64;
        }
    }
    if !include_self {
        ring_degree[0] = 0;
    }
    let mut volumes = Vec::with_capacity(ecc);
    let mut acc = ring_degree[0];
    for &ring in &ring_degree[1..] {
        acc += ring;
        volumes.push(acc);
    }
    Ok(VolumeProfile {
        node,
        volumes,
        total_degree: g.total_degree(),
    })
}

/// The information contribution `-p ln p` with `p = s / S`.
///
/// Exactly 0 at `s = S`; domain error outside `0 < s <= S`.
pub fn entropy_term(s: f64, total: f64) -> Result<f64> {
    let in_domain = s > 0.0 && total > 0.0 && s <= total;
    if !in_domain {
        return Err(NetdimError::InvalidArgument(format!(
            "entropy term needs 0 < s <= S, got s = {s}, S = {total}"
        )));
    }
    if s == total {
        return Ok(0.0);
    }
    let p = s / total;
    Ok(-p * p.ln())
}

/// Regression points `(ln l, y(l))` for a profile, under the method's y transform.
fn regression_points(profile: &VolumeProfile, method: DimensionMethod) -> Result<Vec<(f64, f64)>> {
    let total = profile.total_degree as f64;
    profile
        .volumes
        .iter()
        .enumerate()
        .map(|(idx, &s)| {
            let x = ((idx + 1) as f64).ln();
            let y = match method {
                DimensionMethod::Lvd => (s as f64).ln(),
                DimensionMethod::Lvid => entropy_term(s as f64, total)?,
            };
            Ok((x, y))
        })
        .collect()
}

fn dimension_score(
    g: &Graph,
    node: NodeId,
    method: DimensionMethod,
    options: &DimensionOptions,
) -> Result<DimensionScore> {
    let profile = match volume_profile(g, node, options.include_self) {
        Ok(p) => p,
        Err(NetdimError::Degenerate(_)) => {
            return Ok(DimensionScore {
                node,
                score: None,
                method,
                points_used: 0,
            })
        }
        Err(e) => return Err(e),
    };
    let points = regression_points(&profile, method)?;
    if points.len() < 2 {
        return Ok(DimensionScore {
            node,
            score: None,
            method,
            points_used: points.len(),
        });
    }
    let (slope, _) = fit_slope(&points)?;
    let score = if options.negate_slope { -slope } else { slope };
    Ok(DimensionScore {
        node,
        score: Some(score),
        method,
        points_used: points.len(),
    })
}

/// Local volume dimension of one node.
pub fn lvd_score(g: &Graph, node: NodeId, options: &DimensionOptions) -> Result<DimensionScore> {
    dimension_score(g, node, DimensionMethod::Lvd, options)
}

/// Local volume information dimension of one node.
pub fn lvid_score(g: &Graph, node: NodeId, options: &DimensionOptions) -> Result<DimensionScore> {
    dimension_score(g, node, DimensionMethod::Lvid, options)
}

/// Scores for every node; per-node work is independent, so this is safe to
/// parallelize from the caller side (see [`crate::centrality::rank_all`]).
pub fn dimension_scores(
    g: &Graph,
    method: DimensionMethod,
    options: &DimensionOptions,
) -> Result<Vec<DimensionScore>> {
    g.nodes()
        .map(|node| dimension_score(g, node, method, options))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const LN2: f64 = std::f64::consts::LN_2;

    fn star5() -> Graph {
        // center 0, leaves 1..=4
        Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap()
    }

    fn p3() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn star_leaf_profile() {
        let profile = volume_profile(&star5(), 1, true).unwrap();
        assert_eq!(profile.volumes, vec![5, 8]);
        assert_eq!(profile.total_degree, 8);
    }

    #[test]
    fn star_center_profile() {
        let profile = volume_profile(&star5(), 0, true).unwrap();
        assert_eq!(profile.volumes, vec![8]);
    }

    #[test]
    fn path_endpoint_profile() {
        let profile = volume_profile(&p3(), 0, true).unwrap();
        assert_eq!(profile.volumes, vec![3, 4]);
        assert_eq!(profile.total_degree, 4);
    }

    #[test]
    fn profile_without_self_degree() {
        let profile = volume_profile(&star5(), 1, false).unwrap();
        assert_eq!(profile.volumes, vec![4, 7]);
    }

    #[test]
    fn isolated_node_profile_is_degenerate() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert!(matches!(
            volume_profile(&g, 2, true),
            Err(NetdimError::Degenerate(_))
        ));
    }

    #[test]
    fn entropy_term_values() {
        assert_eq!(entropy_term(8.0, 8.0).unwrap(), 0.0);
        let max = entropy_term(1.0, std::f64::consts::E).unwrap();
        assert!((max - 1.0 / std::f64::consts::E).abs() < 1e-12);
        let star_leaf = entropy_term(5.0, 8.0).unwrap();
        assert!((star_leaf - 0.293752).abs() < 1e-6);
    }

    #[test]
    fn entropy_term_domain_errors() {
        assert!(entropy_term(0.0, 8.0).is_err());
        assert!(entropy_term(-1.0, 8.0).is_err());
        assert!(entropy_term(9.0, 8.0).is_err());
    }

    #[test]
    fn lvd_star_leaf_and_path_endpoint() {
        let opts = DimensionOptions::default();
        let leaf = lvd_score(&star5(), 1, &opts).unwrap();
        let expected = -(8.0f64.ln() - 5.0f64.ln()) / LN2;
        assert!((leaf.score.unwrap() - expected).abs() < 1e-12);
        assert!((leaf.score.unwrap() - (-0.678072)).abs() < 1e-6);
        assert_eq!(leaf.points_used, 2);

        let endpoint = lvd_score(&p3(), 0, &opts).unwrap();
        assert!((endpoint.score.unwrap() - (-0.415037)).abs() < 1e-6);
    }

    #[test]
    fn lvid_star_leaf_and_path_endpoint() {
        let opts = DimensionOptions::default();
        let leaf = lvid_score(&star5(), 1, &opts).unwrap();
        assert!((leaf.score.unwrap() - 0.423795).abs() < 1e-6);

        let endpoint = lvid_score(&p3(), 0, &opts).unwrap();
        assert!((endpoint.score.unwrap() - 0.311278).abs() < 1e-6);
    }

    #[test]
    fn eccentricity_one_is_degenerate() {
        let opts = DimensionOptions::default();
        let center = lvid_score(&star5(), 0, &opts).unwrap();
        assert_eq!(center.score, None);
        assert_eq!(center.points_used, 1);
        let lvd_center = lvd_score(&star5(), 0, &opts).unwrap();
        assert_eq!(lvd_center.score, None);
    }

    #[test]
    fn negate_slope_flag_flips_sign() {
        let default = lvid_score(&star5(), 1, &DimensionOptions::default()).unwrap();
        let flipped = lvid_score(
            &star5(),
            1,
            &DimensionOptions {
                negate_slope: false,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(default.score.unwrap(), -flipped.score.unwrap());
    }

    #[test]
    fn volumes_monotone_and_capped() {
        let g =
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 2)]).unwrap();
        for node in g.nodes() {
            let profile = volume_profile(&g, node, true).unwrap();
            for w in profile.volumes.windows(2) {
                assert!(w[0] <= w[1]);
            }
            assert_eq!(*profile.volumes.last().unwrap(), g.total_degree());
        }
    }
}
