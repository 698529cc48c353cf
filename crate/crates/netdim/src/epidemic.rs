//! Discrete-time SIR Monte Carlo on a graph.
//!
//! Synchronous dynamics with infect-then-recover ordering: at every step each
//! currently infectious node tries to infect each susceptible neighbor with
//! probability `beta` (a node reached by several infectors is infected once),
//! then each node that was already infectious at the start of the step
//! recovers with probability `gamma`. Newly infected nodes become infectious
//! on the next step; recovered nodes are permanently immune. With `gamma = 0`
//! the process degenerates to SI and the recovered set stays empty.
//!
//! Reproducibility: every run draws from its own `ChaCha8` stream whose seed
//! is derived from `(master_seed, seed set, run index)` by a SplitMix64
//! chain, and all aggregation sums integers, so results are bit-identical
//! whatever the thread count.

use std::io::Write;

use rand::distributions::{Bernoulli, Distribution};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::centrality::CentralityScores;
use crate::error::{NetdimError, Result};
use crate::graph::{Graph, NodeId};

/// Master seed used when the caller does not pick one ("netdim" in ASCII).
pub const DEFAULT_MASTER_SEED: u64 = 0x6e65_7464_696d;

/// Simulation configuration.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct SirParams {
    /// Per-contact, per-step infection probability.
    pub beta: f64,
    /// Per-step recovery probability.
    pub gamma: f64,
    /// Number of steps `T`.
    pub steps: u32,
    /// Independent runs `N` averaged per measurement.
    pub runs: u32,
    pub master_seed: u64,
}

impl Default for SirParams {
    fn default() -> Self {
        SirParams {
            beta: 0.05,
            gamma: 0.0,
            steps: 25,
            runs: 100,
            master_seed: DEFAULT_MASTER_SEED,
        }
    }
}

impl SirParams {
    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.beta) {
            return Err(NetdimError::InvalidArgument(format!(
                "beta must be in [0, 1], got {}",
                self.beta
            )));
        }
        if !(0.0..=1.0).contains(&self.gamma) {
            return Err(NetdimError::InvalidArgument(format!(
                "gamma must be in [0, 1], got {}",
                self.gamma
            )));
        }
        if self.steps < 1 {
            return Err(NetdimError::InvalidArgument("steps must be >= 1".into()));
        }
        if self.runs < 1 {
            return Err(NetdimError::InvalidArgument("runs must be >= 1".into()));
        }
        Ok(())
    }
}

/// One run's per-step counts, indexed by `t = 0..=steps`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunTrace {
    /// `|I| + |R|` at each step; nondecreasing.
    pub affected: Vec<u32>,
    /// `|R|` at each step; stays zero when `gamma = 0`.
    pub recovered: Vec<u32>,
}

impl RunTrace {
    pub fn final_affected(&self) -> u32 {
        *self.affected.last().expect("trace covers t = 0..=steps")
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Per-run RNG seed. Depends only on the seed *set* (ids must be sorted and
/// deduplicated), never on thread scheduling or method that produced it.
pub fn derive_run_seed(master_seed: u64, sorted_seeds: &[NodeId], run: u32) -> u64 {
    let mut h = splitmix64(master_seed);
    for &s in sorted_seeds {
        h = splitmix64(h ^ (s as u64));
    }
    splitmix64(h ^ ((run as u64) << 32))
}

fn canonical_seeds(g: &Graph, seeds: &[NodeId]) -> Result<Vec<NodeId>> {
    if seeds.is_empty() {
        return Err(NetdimError::InvalidArgument(
            "seed set must be nonempty".into(),
        ));
    }
    let mut sorted = seeds.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if let Some(&bad) = sorted.iter().find(|&&s| s as usize >= g.node_count()) {
        return Err(NetdimError::NodeOutOfRange {
            node: bad,
            count: g.node_count(),
        });
    }
    Ok(sorted)
}

const SUSCEPTIBLE: u8 = 0;
const INFECTED: u8 = 1;
const RECOVERED: u8 = 2;

/// Core loop; `seeds` must be canonical (sorted, deduplicated, in range) and
/// `params` validated.
fn run_sir(g: &Graph, seeds: &[NodeId], params: &SirParams, run_seed: u64) -> RunTrace {
    let n = g.node_count();
    let steps = params.steps as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(run_seed);
    let infect = Bernoulli::new(params.beta).expect("beta validated");
    let recover = Bernoulli::new(params.gamma).expect("gamma validated");

    let mut state = vec![SUSCEPTIBLE; n];
    let mut active: Vec<NodeId> = seeds.to_vec();
    for &s in seeds {
        state[s as usize] = INFECTED;
    }
    let mut affected = seeds.len() as u32;
    let mut recovered_count = 0u32;

    let mut trace = RunTrace {
        affected: Vec::with_capacity(steps + 1),
        recovered: Vec::with_capacity(steps + 1),
    };
    trace.affected.push(affected);
    trace.recovered.push(recovered_count);

    let mut newly: Vec<NodeId> = Vec::new();
    for _ in 1..=steps {
        if active.is_empty() {
            // No infectious nodes left: nothing can change any more.
            trace.affected.push(affected);
            trace.recovered.push(recovered_count);
            continue;
        }
        newly.clear();
        if affected < n as u32 {
            for &u in &active {
                for &v in g.neighbors(u) {
                    if state[v as usize] == SUSCEPTIBLE && infect.sample(&mut rng) {
                        state[v as usize] = INFECTED;
                        newly.push(v);
                    }
                }
            }
        }
        if params.gamma > 0.0 {
            active.retain(|&u| {
                if recover.sample(&mut rng) {
                    state[u as usize] = RECOVERED;
                    recovered_count += 1;
                    false
                } else {
                    true
                }
            });
        }
        affected += newly.len() as u32;
        active.extend_from_slice(&newly);
        trace.affected.push(affected);
        trace.recovered.push(recovered_count);
    }
    trace
}

/// Runs one simulation seeded by `run_seed` and returns its trace.
pub fn simulate_once(
    g: &Graph,
    seeds: &[NodeId],
    params: &SirParams,
    run_seed: u64,
) -> Result<RunTrace> {
    params.validate()?;
    let seeds = canonical_seeds(g, seeds)?;
    Ok(run_sir(g, &seeds, params, run_seed))
}

/// Mean final affected count (`|I| + |R|` at `t = steps`) over
/// `params.runs` independent runs seeded at one node.
pub fn spread_score(g: &Graph, seed: NodeId, params: &SirParams) -> Result<f64> {
    params.validate()?;
    let seeds = canonical_seeds(g, &[seed])?;
    let total: u64 = (0..params.runs)
        .map(|run| {
            let run_seed = derive_run_seed(params.master_seed, &seeds, run);
            run_sir(g, &seeds, params, run_seed).final_affected() as u64
        })
        .sum();
    Ok(total as f64 / params.runs as f64)
}

/// Per-node spreading ability when used as the single epidemic seed.
#[derive(Debug, Clone)]
pub struct SpreadScores {
    means: Vec<f64>,
    params: SirParams,
}

impl SpreadScores {
    #[cfg(test)]
    pub(crate) fn from_means(means: Vec<f64>, params: SirParams) -> SpreadScores {
        SpreadScores { means, params }
    }

    pub fn mean(&self, node: NodeId) -> f64 {
        self.means[node as usize]
    }

    pub fn means(&self) -> &[f64] {
        &self.means
    }

    pub fn params(&self) -> &SirParams {
        &self.params
    }

    /// Writes `node,mean_affected` rows in node order.
    pub fn write_csv<W: Write>(&self, mut writer: W) -> Result<()> {
        writeln!(writer, "node,mean_affected")?;
        for (node, mean) in self.means.iter().enumerate() {
            writeln!(writer, "{node},{mean}")?;
        }
        Ok(())
    }
}

/// [`spread_score`] for every node, in parallel across seed nodes.
pub fn spread_all(g: &Graph, params: &SirParams) -> Result<SpreadScores> {
    params.validate()?;
    let means: Vec<f64> = (0..g.node_count() as NodeId)
        .into_par_iter()
        .map(|node| {
            let seeds = [node];
            let total: u64 = (0..params.runs)
                .map(|run| {
                    let run_seed = derive_run_seed(params.master_seed, &seeds, run);
                    run_sir(g, &seeds, params, run_seed).final_affected() as u64
                })
                .sum();
            total as f64 / params.runs as f64
        })
        .collect();
    Ok(SpreadScores {
        means,
        params: *params,
    })
}

/// Mean affected trajectory for a fixed seed set.
#[derive(Debug, Clone)]
pub struct InfectionCurve {
    /// `mean_affected[t]` for `t = 0..=steps`.
    pub mean_affected: Vec<f64>,
    /// The (sorted) seed set every run started from.
    pub seeds: Vec<NodeId>,
    pub params: SirParams,
}

impl InfectionCurve {
    /// Writes `t,mean_affected` rows.
    pub fn write_csv<W: Write>(&self, mut writer: W) -> Result<()> {
        writeln!(writer, "t,mean_affected")?;
        for (t, mean) in self.mean_affected.iter().enumerate() {
            writeln!(writer, "{t},{mean}")?;
        }
        Ok(())
    }
}

fn mean_curve(g: &Graph, seeds: &[NodeId], params: &SirParams) -> Vec<f64> {
    let steps = params.steps as usize;
    let totals: Vec<u64> = (0..params.runs)
        .into_par_iter()
        .fold(
            || vec![0u64; steps + 1],
            |mut acc, run| {
                let run_seed = derive_run_seed(params.master_seed, seeds, run);
                let trace = run_sir(g, seeds, params, run_seed);
                for (slot, count) in acc.iter_mut().zip(trace.affected) {
                    *slot += count as u64;
                }
                acc
            },
        )
        .reduce(
            || vec![0u64; steps + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );
    totals
        .into_iter()
        .map(|total| total as f64 / params.runs as f64)
        .collect()
}

/// Infects the top `k` nodes of a ranking simultaneously at `t = 0` and
/// averages the affected trajectory over `params.runs` runs.
pub fn topk_curve(
    g: &Graph,
    scores: &CentralityScores,
    k: usize,
    params: &SirParams,
) -> Result<InfectionCurve> {
    params.validate()?;
    if k == 0 || k > g.node_count() {
        return Err(NetdimError::InvalidArgument(format!(
            "k must be in 1..={}, got {k}",
            g.node_count()
        )));
    }
    let seeds = canonical_seeds(g, scores.top_k(k))?;
    let mean_affected = mean_curve(g, &seeds, params);
    Ok(InfectionCurve {
        mean_affected,
        seeds,
        params: *params,
    })
}

/// Alternative top-k mode: each of the top `k` nodes seeds its own epidemics
/// and the k single-seed mean curves are averaged.
pub fn topk_curve_per_seed_average(
    g: &Graph,
    scores: &CentralityScores,
    k: usize,
    params: &SirParams,
) -> Result<InfectionCurve> {
    params.validate()?;
    if k == 0 || k > g.node_count() {
        return Err(NetdimError::InvalidArgument(format!(
            "k must be in 1..={}, got {k}",
            g.node_count()
        )));
    }
    let seeds = canonical_seeds(g, scores.top_k(k))?;
    let steps = params.steps as usize;
    let mut combined = vec![0.0f64; steps + 1];
    for &seed in &seeds {
        let curve = mean_curve(g, &[seed], params);
        for (slot, mean) in combined.iter_mut().zip(curve) {
            *slot += mean;
        }
    }
    for slot in &mut combined {
        *slot /= seeds.len() as f64;
    }
    Ok(InfectionCurve {
        mean_affected: combined,
        seeds,
        params: *params,
    })
}
