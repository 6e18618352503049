//! Machine-readable output records.
//!
//! Each invocation writes one top-level JSON object tagged by `"record"`.
//! Field order inside each record is fixed by declaration order below, which
//! keeps golden-file comparisons stable. Floating-point statistics must be
//! finite; a NaN or infinity is rejected instead of being silently written as
//! `null`.

use std::io::{Read, Write};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::experiments::TrialBatch;
use crate::graph::{Cut, Edge, MultiGraph};

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("non-finite value in field `{0}`")]
    NonFinite(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CutRecord {
    pub value: usize,
    pub is_singleton: bool,
    pub method: String,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub seed: u64,
    pub side: Vec<usize>,
    pub edge_ids: Vec<usize>,
}

impl CutRecord {
    pub fn new(cut: &Cut, method: impl Into<String>, vertex_count: usize, edge_count: usize, seed: u64) -> Self {
        Self {
            value: cut.size,
            is_singleton: cut.is_singleton,
            method: method.into(),
            vertex_count,
            edge_count,
            seed,
            side: cut.side.clone(),
            edge_ids: cut.edge_ids.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ContractionRecord {
    pub supernode_count: usize,
    pub edge_count: usize,
    pub seed: u64,
    /// Supernode of each original vertex.
    pub vertex_map: Vec<usize>,
    pub edges: Vec<Edge>,
}

impl ContractionRecord {
    pub fn new(mg: &MultiGraph, seed: u64) -> Self {
        Self {
            supernode_count: mg.supernode_count(),
            edge_count: mg.edge_count(),
            seed,
            vertex_map: mg.vertex_map().to_vec(),
            edges: mg.edges().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub k: usize,
    pub retained_count: usize,
    pub retained_edge_ids: Vec<usize>,
    /// 1-based forest of each retained edge, aligned with `retained_edge_ids`.
    pub forest_index: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "record", rename_all = "snake_case")]
pub enum Report {
    Cut(CutRecord),
    Contraction(ContractionRecord),
    Certificate(CertificateRecord),
    Batch(TrialBatch),
}

impl Report {
    fn check_finite(&self) -> Result<(), ReportError> {
        if let Report::Batch(batch) = self {
            for (name, value) in batch.float_fields() {
                if !value.is_finite() {
                    return Err(ReportError::NonFinite(name));
                }
            }
        }
        Ok(())
    }
}

pub fn write_report<W: Write>(report: &Report, mut sink: W) -> Result<(), ReportError> {
    report.check_finite()?;
    serde_json::to_writer_pretty(&mut sink, report)?;
    sink.write_all(b"\n")?;
    sink.flush()?;
    Ok(())
}

pub fn read_report<R: Read>(source: R) -> Result<Report, ReportError> {
    Ok(serde_json::from_reader(source)?)
}
