use super::amplify::repetition_seed;
use super::forest::{Answer, ForestOracle};
use super::kout::require_connected;
use super::{AmplificationConfig, ContractionError};
use crate::dsu::DisjointSets;
use crate::exec::Exec;
use crate::graph::{contract_by_labels, MultiGraph, SimpleGraph};

/// Below this many oracles a per-edge parallel fan-out costs more than it saves.
const PARALLEL_ORACLE_THRESHOLD: usize = 64;

#[derive(Debug, Clone)]
pub struct DenseContraction {
    pub graph: MultiGraph,
    /// Edges for which all oracles were consulted.
    pub query_rounds: usize,
    /// Query rounds that reached the vote threshold.
    pub voted_preserve: usize,
    pub oracles: Vec<ForestOracle>,
    pub q: usize,
    pub r: usize,
}

pub fn dense_contraction(
    g: &SimpleGraph,
    cfg: &AmplificationConfig,
    seed: u64,
) -> Result<MultiGraph, ContractionError> {
    dense_contraction_with(g, cfg, seed, Exec::default()).map(|d| d.graph)
}

/// Scans edges by ascending id, skipping edges whose endpoints are already
/// identified, and contracts every scanned edge that fewer than `dense_r` of
/// the `dense_q` forest oracles want to preserve.
pub fn dense_contraction_with(
    g: &SimpleGraph,
    cfg: &AmplificationConfig,
    seed: u64,
    exec: Exec,
) -> Result<DenseContraction, ContractionError> {
    require_connected(g)?;
    cfg.validate()?;
    let (q, r) = (cfg.dense_q, cfg.dense_r);
    let budget = cfg.supernode_budget(g.min_degree());
    let mut oracles = exec
        .map_indexed(q, |i| ForestOracle::new(g, budget, repetition_seed(seed, i)))
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;

    let exec = if q < PARALLEL_ORACLE_THRESHOLD {
        Exec::Sequential
    } else {
        exec
    };
    let mut merged = DisjointSets::new(g.vertex_count());
    let mut query_rounds = 0;
    let mut voted_preserve = 0;
    for e in g.edges() {
        if merged.same(e.u, e.v) {
            continue;
        }
        query_rounds += 1;
        let votes = exec.sum_mut(&mut oracles, |o| {
            usize::from(matches!(o.query(e), Ok(Answer::Preserve)))
        });
        if votes < r {
            merged.union(e.u, e.v);
        } else {
            voted_preserve += 1;
        }
    }
    Ok(DenseContraction {
        graph: contract_by_labels(g, &merged.labels()),
        query_rounds,
        voted_preserve,
        oracles,
        q,
        r,
    })
}
