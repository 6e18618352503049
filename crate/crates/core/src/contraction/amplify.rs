use super::kout::{require_connected, single_contraction_unchecked};
use super::{AmplificationConfig, ContractionError};
use crate::dsu::DisjointSets;
use crate::exec::Exec;
use crate::graph::{contract_by_labels, MultiGraph, SimpleGraph};
use crate::seed::{self, streams};

/// Seed of repetition `index` under a master seed.
pub fn repetition_seed(master: u64, index: usize) -> u64 {
    seed::derive(master, streams::REPETITION + index as u64)
}

/// Output of repetition and voting, with the per-edge tallies kept for audit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Amplified {
    pub graph: MultiGraph,
    /// Number of repetitions in which each edge id survived.
    pub votes: Vec<u32>,
    pub q: usize,
    pub r: usize,
}

/// Runs `q` independent contraction processes and contracts every edge that
/// survived fewer than `r` of them.
pub fn amplified_contraction(
    g: &SimpleGraph,
    cfg: &AmplificationConfig,
    seed: u64,
) -> Result<MultiGraph, ContractionError> {
    amplified_contraction_with(g, cfg, seed, Exec::default()).map(|a| a.graph)
}

pub fn amplified_contraction_with(
    g: &SimpleGraph,
    cfg: &AmplificationConfig,
    seed: u64,
    exec: Exec,
) -> Result<Amplified, ContractionError> {
    require_connected(g)?;
    cfg.validate()?;
    let votes = survival_votes(g, cfg, cfg.q, seed, exec)?;
    Ok(Amplified {
        graph: contract_below_threshold(g, &votes, cfg.r),
        votes,
        q: cfg.q,
        r: cfg.r,
    })
}

/// Per-edge survival counts over repetitions `0..q`.
pub fn survival_votes(
    g: &SimpleGraph,
    cfg: &AmplificationConfig,
    q: usize,
    seed: u64,
    exec: Exec,
) -> Result<Vec<u32>, ContractionError> {
    // Sampling only fails on isolated vertices, which require_connected rules out.
    let votes = exec.count_votes(q, g.edge_count(), |rep| {
        single_contraction_unchecked(g, cfg, cfg.reducer, repetition_seed(seed, rep))
            .map(|mg| mg.edge_ids().collect::<Vec<_>>())
            .unwrap_or_default()
    });
    Ok(votes)
}

/// Contracts every edge with fewer than `r` votes.
pub fn contract_below_threshold(g: &SimpleGraph, votes: &[u32], r: usize) -> MultiGraph {
    let mut dsu = DisjointSets::new(g.vertex_count());
    for e in g.edges() {
        if (votes[e.id] as usize) < r {
            dsu.union(e.u, e.v);
        }
    }
    contract_by_labels(g, &dsu.labels())
}
