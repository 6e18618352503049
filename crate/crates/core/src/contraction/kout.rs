use rand::Rng;

use super::{AmplificationConfig, ContractionError, Reducer};
use crate::certificate::reduce_edges_certificate;
use crate::graph::{connected_components, contract_by_labels, MultiGraph, SimpleGraph};
use crate::seed::{self, rng_from_seed, streams};

/// `k` incident edges drawn uniformly with replacement for every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KOutSample {
    pub k: usize,
    /// Row-major `n x k` table; `chosen[v * k + j]` is vertex `v`'s `j`-th draw.
    chosen: Vec<usize>,
    /// Distinct sampled edge ids, ascending.
    pub edge_ids: Vec<usize>,
}

impl KOutSample {
    /// The `k` draws of vertex `v`.
    pub fn chosen_by(&self, v: usize) -> &[usize] {
        &self.chosen[v * self.k..(v + 1) * self.k]
    }

    pub fn vertex_count(&self) -> usize {
        self.chosen.len().checked_div(self.k).unwrap_or(0)
    }
}

pub fn sample_k_out(g: &SimpleGraph, k: usize, seed: u64) -> Result<KOutSample, ContractionError> {
    assert!(k >= 1, "k must be positive");
    if let Some(v) = (0..g.vertex_count()).find(|&v| g.degree(v) == 0) {
        return Err(ContractionError::IsolatedVertex(v));
    }
    let mut rng = rng_from_seed(seed);
    let mut chosen = Vec::with_capacity(g.vertex_count() * k);
    let mut hit = vec![false; g.edge_count()];
    for v in 0..g.vertex_count() {
        let adj = g.neighbors(v);
        for _ in 0..k {
            let id = adj[rng.gen_range(0..adj.len())].1;
            hit[id] = true;
            chosen.push(id);
        }
    }
    let edge_ids = (0..g.edge_count()).filter(|&id| hit[id]).collect();
    Ok(KOutSample { k, chosen, edge_ids })
}

/// Contracts the connected components of a random k-out subgraph.
pub fn k_out_contraction(g: &SimpleGraph, k: usize, seed: u64) -> Result<MultiGraph, ContractionError> {
    let sample = sample_k_out(g, k, seed)?;
    let comps = connected_components(g, sample.edge_ids.iter().copied());
    Ok(contract_by_labels(g, &comps.labels))
}

/// Marks each edge independently with probability `1 / (rate_denominator *
/// delta)` and contracts the marked edges. An infinite denominator marks
/// nothing.
pub fn reduce_edges_random(mg: &MultiGraph, delta: usize, rate_denominator: f64, seed: u64) -> MultiGraph {
    assert!(delta >= 1, "delta must be positive");
    let p = 1.0 / (rate_denominator * delta as f64);
    if mg.edge_count() == 0 || p.is_nan() || p <= 0.0 {
        return mg.clone();
    }
    let p = p.min(1.0);
    let mut rng = rng_from_seed(seed);
    let marked: Vec<usize> = (0..mg.edge_count()).filter(|_| rng.gen_bool(p)).collect();
    mg.contract_edges(marked)
}

pub(crate) fn single_contraction_unchecked(
    g: &SimpleGraph,
    cfg: &AmplificationConfig,
    reducer: Reducer,
    seed: u64,
) -> Result<MultiGraph, ContractionError> {
    let delta = g.min_degree();
    let contracted = k_out_contraction(g, 2, seed)?;
    Ok(match reducer {
        Reducer::Certificate => reduce_edges_certificate(&contracted, cfg.certificate_k(delta)),
        Reducer::RandomSample => reduce_edges_random(
            &contracted,
            delta,
            cfg.edge_sample_rate_denominator,
            seed::derive(seed, streams::REDUCE),
        ),
    })
}

pub(crate) fn require_connected(g: &SimpleGraph) -> Result<(), ContractionError> {
    if g.vertex_count() == 0 {
        return Err(ContractionError::Empty);
    }
    if let Some(v) = (0..g.vertex_count()).find(|&v| g.degree(v) == 0) {
        if g.vertex_count() > 1 {
            return Err(ContractionError::Disconnected);
        }
        return Err(ContractionError::IsolatedVertex(v));
    }
    if !g.is_connected() {
        return Err(ContractionError::Disconnected);
    }
    Ok(())
}

/// One contraction process: a 2-out contraction followed by edge reduction.
/// The 2-out sample is drawn from `seed`; the random reducer uses a derived
/// stream.
pub fn single_contraction(
    g: &SimpleGraph,
    cfg: &AmplificationConfig,
    reducer: Reducer,
    seed: u64,
) -> Result<MultiGraph, ContractionError> {
    require_connected(g)?;
    cfg.validate()?;
    single_contraction_unchecked(g, cfg, reducer, seed)
}
