//! Graph analytics around the local volume information dimension (LVID)
//! node-importance measure: volume-dimension centralities, classic baselines
//! (betweenness, PageRank, degree, gravity), a deterministic discrete-time
//! SIR simulator, Kendall rank correlation, and an experiment harness that
//! sweeps infection/recovery rates and emits plot-ready tables.
//!
//! Everything downstream of a parsed [`graph::Graph`] is deterministic for a
//! fixed master seed, independent of thread count.

pub mod baselines;
pub mod centrality;
pub mod datasets;
pub mod dimension;
pub mod epidemic;
pub mod error;
pub mod experiment;
pub mod graph;
pub mod stats;

pub use centrality::{rank_all, CentralityScores, Method, RankOptions};
pub use dimension::{entropy_term, lvd_score, lvid_score, volume_profile, DimensionOptions};
pub use epidemic::{simulate_once, spread_all, spread_score, topk_curve, SirParams};
pub use error::{NetdimError, Result};
pub use graph::{bfs_distances, eccentricity, largest_component, parse_edge_list, Graph};
pub use stats::{fit_slope, kendall_tau, TauVariant};
