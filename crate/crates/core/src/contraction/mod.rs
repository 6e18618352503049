//! Random k-out contraction, edge reduction, repetition-and-voting, and the
//! forest-oracle contraction for dense graphs.
//!
//! A cut survives a contraction exactly when no contracted edge crosses it, so
//! all bookkeeping is done per edge id.

mod amplify;
mod config;
mod dense;
mod forest;
mod kout;

use thiserror::Error;

pub use amplify::{
    amplified_contraction, amplified_contraction_with, contract_below_threshold, repetition_seed,
    survival_votes, Amplified,
};
pub use config::{AmplificationConfig, Reducer, DEFAULT_C_Q, DEFAULT_P_HAT};
pub use dense::{dense_contraction, dense_contraction_with, DenseContraction};
pub use forest::{Answer, ForestOracle};
pub use kout::{k_out_contraction, reduce_edges_random, sample_k_out, single_contraction, KOutSample};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ContractionError {
    #[error("vertex {0} is isolated; k-out sampling needs minimum degree >= 1")]
    IsolatedVertex(usize),
    #[error("input graph is disconnected")]
    Disconnected,
    #[error("input graph has no vertices")]
    Empty,
    #[error("edge {0} was already queried")]
    RepeatedEdge(usize),
    #[error("invalid amplification config: {0}")]
    InvalidConfig(String),
}
