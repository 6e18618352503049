//! Exact multigraph minimum cut, ground-truth oracles, and the end-to-end
//! edge-connectivity pipeline.

mod oracle;
mod pipeline;
mod stoer_wagner;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::contraction::ContractionError;
use crate::graph::{Cut, MultiGraph};

pub use oracle::{
    exhaustive_min_cut, maxflow_min_cut, maxflow_min_cut_with, oracle_mincut, oracle_mincut_with,
    oracle_multi, EXHAUSTIVE_LIMIT,
};
pub use pipeline::{edge_connectivity, edge_connectivity_with, PipelineStats, Variant};
pub use stoer_wagner::stoer_wagner;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SolverError {
    #[error("need at least two (super)nodes")]
    TooSmall,
    #[error("multigraph is disconnected")]
    Disconnected,
    #[error(transparent)]
    Contraction(#[from] ContractionError),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    PipelineAmplified,
    PipelineDense,
    StoerWagnerDirect,
    OracleExhaustive,
    OracleMaxflow,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::PipelineAmplified => "pipeline-amplified",
            Method::PipelineDense => "pipeline-dense",
            Method::StoerWagnerDirect => "stoer-wagner-direct",
            Method::OracleExhaustive => "oracle-exhaustive",
            Method::OracleMaxflow => "oracle-maxflow",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinCutResult {
    pub value: usize,
    /// Witness in original-graph coordinates; `witness.size == value`.
    pub witness: Cut,
    pub method: Method,
    pub is_singleton: bool,
}

/// Exact global minimum cut of a connected multigraph with at least two
/// supernodes. Returns the value and one side in supernode coordinates.
pub trait MultigraphMinCut: Sync {
    fn min_cut(&self, mg: &MultiGraph) -> Result<(usize, Vec<usize>), SolverError>;
}

#[derive(Debug, Clone, Copy, Default)]
pub struct StoerWagner;

impl MultigraphMinCut for StoerWagner {
    fn min_cut(&self, mg: &MultiGraph) -> Result<(usize, Vec<usize>), SolverError> {
        stoer_wagner(mg)
    }
}
