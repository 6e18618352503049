use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::contraction::{amplified_contraction_with, dense_contraction_with, AmplificationConfig};
use crate::exec::Exec;
use crate::graph::{connected_components, cut_from_side, Cut, SimpleGraph};

use super::{Method, MinCutResult, MultigraphMinCut, SolverError, StoerWagner};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// Repetition and voting over independent 2-out contractions.
    #[default]
    Amplified,
    /// Forest oracles scanned once over the edges.
    Dense,
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "amplified" => Ok(Variant::Amplified),
            "dense" => Ok(Variant::Dense),
            other => Err(format!("unknown variant `{other}`")),
        }
    }
}

/// Sizes observed inside one pipeline run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PipelineStats {
    pub contracted_supernodes: usize,
    pub contracted_edges: usize,
    pub min_degree: usize,
}

fn invariant(msg: String) -> SolverError {
    SolverError::Invariant(msg)
}

/// Edge connectivity of `g` with a witness cut.
///
/// 1. Contract with the chosen variant.
/// 2. Solve the contracted multigraph exactly.
/// 3. Return the smaller of that cut and the minimum-degree singleton cut.
pub fn edge_connectivity(
    g: &SimpleGraph,
    cfg: &AmplificationConfig,
    variant: Variant,
    seed: u64,
) -> Result<MinCutResult, SolverError> {
    edge_connectivity_with(g, cfg, variant, seed, &StoerWagner, Exec::default()).map(|(r, _)| r)
}

pub fn edge_connectivity_with<S: MultigraphMinCut>(
    g: &SimpleGraph,
    cfg: &AmplificationConfig,
    variant: Variant,
    seed: u64,
    solver: &S,
    exec: Exec,
) -> Result<(MinCutResult, PipelineStats), SolverError> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(SolverError::TooSmall);
    }
    let method = match variant {
        Variant::Amplified => Method::PipelineAmplified,
        Variant::Dense => Method::PipelineDense,
    };
    let comps = connected_components(g, 0..g.edge_count());
    if comps.count > 1 {
        let side: Vec<usize> = (0..n).filter(|&v| comps.labels[v] == comps.labels[0]).collect();
        let witness = cut_from_side(g, &side).map_err(|e| invariant(e.to_string()))?;
        return Ok((
            MinCutResult {
                value: 0,
                is_singleton: witness.is_singleton,
                witness,
                method,
            },
            PipelineStats::default(),
        ));
    }

    let delta = g.min_degree();
    let contracted = match variant {
        Variant::Amplified => amplified_contraction_with(g, cfg, seed, exec)?.graph,
        Variant::Dense => dense_contraction_with(g, cfg, seed, exec)?.graph,
    };
    let stats = PipelineStats {
        contracted_supernodes: contracted.supernode_count(),
        contracted_edges: contracted.edge_count(),
        min_degree: delta,
    };

    let v = g.min_degree_vertex().expect("n >= 2");
    let mut best: Cut = cut_from_side(g, &[v]).map_err(|e| invariant(e.to_string()))?;
    if contracted.supernode_count() >= 2 {
        let (value, side) = solver.min_cut(&contracted)?;
        if value < best.size {
            let cut = cut_from_side(g, &contracted.expand_side(&side)).map_err(|e| invariant(e.to_string()))?;
            if cut.size != value || cut.edge_ids != contracted.crossing_edge_ids(&side) {
                return Err(invariant(format!(
                    "contracted cut of value {value} maps back to {} edges",
                    cut.size
                )));
            }
            best = cut;
        }
    }
    Ok((
        MinCutResult {
            value: best.size,
            is_singleton: best.is_singleton,
            witness: best,
            method,
        },
        stats,
    ))
}
