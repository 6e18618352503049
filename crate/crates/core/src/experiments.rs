//! Monte-Carlo harness for the compression and preservation guarantees.
//!
//! Every batch fixes one instance (drawn from the family with the batch seed)
//! and runs independent trials on derived seeds. Records are kept in trial
//! order, so equal `(spec, seed)` inputs give bit-identical batches regardless
//! of the execution policy.

use std::collections::{BTreeMap, VecDeque};
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::contraction::{amplified_contraction_with, sample_k_out, AmplificationConfig, ContractionError};
use crate::exec::Exec;
use crate::generate::{GenerateError, GeneratorSpec};
use crate::graph::{connected_components, cut_from_side, SimpleGraph};
use crate::seed;
use crate::solver::{edge_connectivity_with, oracle_mincut, SolverError, StoerWagner, Variant};

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error(transparent)]
    Generate(#[from] GenerateError),
    #[error(transparent)]
    Contraction(#[from] ContractionError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub seed: u64,
    pub value: f64,
    /// Secondary measurement, when the batch has one.
    pub aux: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Summary {
    pub mean: f64,
    pub min: f64,
    pub q50: f64,
    pub q90: f64,
    pub q99: f64,
    pub max: f64,
}

impl Summary {
    pub fn of(values: &[f64]) -> Self {
        if values.is_empty() {
            return Self::default();
        }
        let mut sorted = values.to_vec();
        sorted.sort_by(f64::total_cmp);
        let quantile = |q: f64| sorted[((sorted.len() - 1) as f64 * q).round() as usize];
        Self {
            mean: sorted.iter().sum::<f64>() / sorted.len() as f64,
            min: sorted[0],
            q50: quantile(0.5),
            q90: quantile(0.9),
            q99: quantile(0.99),
            max: sorted[sorted.len() - 1],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialBatch {
    pub instance: String,
    pub trial_count: usize,
    pub summary: Summary,
    /// Named batch-level statistics (ratios, analytic bounds, instance sizes).
    pub stats: BTreeMap<String, f64>,
    pub records: Vec<TrialRecord>,
}

impl TrialBatch {
    pub fn from_records(instance: impl Into<String>, records: Vec<TrialRecord>) -> Self {
        let values: Vec<f64> = records.iter().map(|r| r.value).collect();
        Self {
            instance: instance.into(),
            trial_count: records.len(),
            summary: Summary::of(&values),
            stats: BTreeMap::new(),
            records,
        }
    }

    pub fn with_stat(mut self, name: &str, value: f64) -> Self {
        self.stats.insert(name.to_string(), value);
        self
    }

    pub fn stat(&self, name: &str) -> Option<f64> {
        self.stats.get(name).copied()
    }

    /// Every floating-point field with a descriptive path.
    pub fn float_fields(&self) -> Vec<(String, f64)> {
        let s = &self.summary;
        let mut out = vec![
            ("summary.mean".to_string(), s.mean),
            ("summary.min".to_string(), s.min),
            ("summary.q50".to_string(), s.q50),
            ("summary.q90".to_string(), s.q90),
            ("summary.q99".to_string(), s.q99),
            ("summary.max".to_string(), s.max),
        ];
        out.extend(self.stats.iter().map(|(k, v)| (format!("stats.{k}"), *v)));
        for (i, r) in self.records.iter().enumerate() {
            out.push((format!("records[{i}].value"), r.value));
            if let Some(a) = r.aux {
                out.push((format!("records[{i}].aux"), a));
            }
        }
        out
    }

    /// Largest secondary measurement across trials.
    pub fn max_aux(&self) -> Option<f64> {
        self.records.iter().filter_map(|r| r.aux).reduce(f64::max)
    }
}

/// Seed of the instance drawn for a batch.
pub fn instance_seed(batch_seed: u64) -> u64 {
    seed::derive(batch_seed, u64::MAX)
}

/// Seed of trial `i` in a batch.
pub fn trial_seed(batch_seed: u64, i: usize) -> u64 {
    seed::derive(batch_seed, i as u64)
}

fn instance(spec: &GeneratorSpec, batch_seed: u64) -> Result<SimpleGraph, ExperimentError> {
    Ok(spec.generate(instance_seed(batch_seed))?)
}

fn require_min_degree(g: &SimpleGraph, at_least: usize) -> Result<(), ExperimentError> {
    if g.min_degree() < at_least {
        return Err(ExperimentError::Precondition(format!(
            "minimum degree {} < {at_least}",
            g.min_degree()
        )));
    }
    Ok(())
}

fn with_sizes(batch: TrialBatch, g: &SimpleGraph) -> TrialBatch {
    batch
        .with_stat("n", g.vertex_count() as f64)
        .with_stat("m", g.edge_count() as f64)
        .with_stat("delta", g.min_degree() as f64)
}

/// Component counts of k-out samples; `aux = count * δ / n`.
pub fn measure_component_count(
    spec: &GeneratorSpec,
    k: usize,
    trials: usize,
    seed: u64,
    exec: Exec,
) -> Result<TrialBatch, ExperimentError> {
    let g = instance(spec, seed)?;
    require_min_degree(&g, 1)?;
    let scale = g.min_degree() as f64 / g.vertex_count() as f64;
    let records = exec
        .map_indexed(trials, |i| {
            let s = trial_seed(seed, i);
            let sample = sample_k_out(&g, k, s)?;
            let count = connected_components(&g, sample.edge_ids.iter().copied()).count as f64;
            Ok(TrialRecord { seed: s, value: count, aux: Some(count * scale) })
        })
        .into_iter()
        .collect::<Result<Vec<_>, ContractionError>>()?;
    let batch = TrialBatch::from_records(format!("components/{k}-out/{spec}"), records);
    let max_ratio = batch.max_aux().unwrap_or(0.0);
    Ok(with_sizes(batch, &g).with_stat("max_ratio", max_ratio))
}

/// Sum over components of the BFS diameter of each component in the sampled
/// subgraph.
pub fn diameter_sum(g: &SimpleGraph, edge_ids: &[usize]) -> usize {
    let n = g.vertex_count();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &id in edge_ids {
        let (u, v) = g.endpoints(id);
        adj[u].push(v);
        adj[v].push(u);
    }
    let comps = connected_components(g, edge_ids.iter().copied());
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); comps.count];
    for v in 0..n {
        members[comps.labels[v]].push(v);
    }
    let mut dist = vec![usize::MAX; n];
    let mut total = 0;
    for comp in &members {
        let mut diameter = 0;
        for &src in comp {
            for &v in comp {
                dist[v] = usize::MAX;
            }
            dist[src] = 0;
            let mut queue = VecDeque::from([src]);
            while let Some(x) = queue.pop_front() {
                diameter = diameter.max(dist[x]);
                for &y in &adj[x] {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
        }
        total += diameter;
    }
    total
}

/// Diameter sums of 2-out samples; `aux = sum * δ / (n ln δ)` when `δ >= 2`.
pub fn measure_diameter_sum(
    spec: &GeneratorSpec,
    trials: usize,
    seed: u64,
    exec: Exec,
) -> Result<TrialBatch, ExperimentError> {
    let g = instance(spec, seed)?;
    require_min_degree(&g, 1)?;
    let delta = g.min_degree() as f64;
    let scale = (delta >= 2.0).then(|| delta / (g.vertex_count() as f64 * delta.ln()));
    let records = exec
        .map_indexed(trials, |i| {
            let s = trial_seed(seed, i);
            let sample = sample_k_out(&g, 2, s)?;
            let sum = diameter_sum(&g, &sample.edge_ids) as f64;
            Ok(TrialRecord { seed: s, value: sum, aux: scale.map(|c| sum * c) })
        })
        .into_iter()
        .collect::<Result<Vec<_>, ContractionError>>()?;
    let batch = TrialBatch::from_records(format!("diameter-sum/{spec}"), records);
    let mut batch = with_sizes(batch, &g);
    if scale.is_some() {
        let max_ratio = batch.max_aux().unwrap_or(0.0);
        let min_ratio = batch.records.iter().filter_map(|r| r.aux).fold(f64::INFINITY, f64::min);
        batch = batch.with_stat("max_ratio", max_ratio).with_stat("min_ratio", min_ratio);
    }
    Ok(batch)
}

/// Probability that one uniform draw per vertex misses the cut, i.e.
/// `∏_{v ∈ N(S)} (1 - c(v)/d(v))`, where `c(v)` counts cut edges at `v`.
pub fn exact_one_out_preservation(g: &SimpleGraph, cut_edge_ids: &[usize]) -> f64 {
    let mut crossing = vec![0usize; g.vertex_count()];
    for &id in cut_edge_ids {
        let (u, v) = g.endpoints(id);
        crossing[u] += 1;
        crossing[v] += 1;
    }
    (0..g.vertex_count())
        .filter(|&v| crossing[v] > 0)
        .map(|v| 1.0 - crossing[v] as f64 / g.degree(v) as f64)
        .product()
}

/// Analytic floor `exp(-4 * rounds * (2 - eps) / eps)` for `rounds`
/// independent 1-out samples.
pub fn preservation_floor(eps: f64, rounds: usize) -> f64 {
    (-4.0 * rounds as f64 * (2.0 - eps) / eps).exp()
}

/// Frequency with which a `rounds`-out sample misses every edge of the planted
/// cut. The planted cut must be a non-singleton `(2 - eps)`-minimum cut,
/// checked against the oracle before any trial runs.
pub fn measure_preservation(
    spec: &GeneratorSpec,
    eps: f64,
    rounds: usize,
    trials: usize,
    seed: u64,
    exec: Exec,
) -> Result<TrialBatch, ExperimentError> {
    if !(eps > 0.0 && eps <= 1.0) {
        return Err(ExperimentError::Precondition("eps must lie in (0, 1]".into()));
    }
    let g = instance(spec, seed)?;
    let side = spec
        .planted_side()
        .ok_or_else(|| ExperimentError::Precondition(format!("{spec} has no planted cut")))?;
    let planted = cut_from_side(&g, &side).map_err(|e| ExperimentError::Precondition(e.to_string()))?;
    if planted.is_singleton {
        return Err(ExperimentError::Precondition("planted cut is a singleton".into()));
    }
    let lambda = oracle_mincut(&g)?.value;
    if planted.size as f64 > (2.0 - eps) * lambda as f64 {
        return Err(ExperimentError::Precondition(format!(
            "planted cut of size {} is not (2 - {eps})-minimum for lambda = {lambda}",
            planted.size
        )));
    }
    let mut in_cut = vec![false; g.edge_count()];
    for &id in &planted.edge_ids {
        in_cut[id] = true;
    }
    let records = exec
        .map_indexed(trials, |i| {
            let s = trial_seed(seed, i);
            let sample = sample_k_out(&g, rounds, s)?;
            let preserved = !sample.edge_ids.iter().any(|&id| in_cut[id]);
            Ok(TrialRecord { seed: s, value: f64::from(u8::from(preserved)), aux: None })
        })
        .into_iter()
        .collect::<Result<Vec<_>, ContractionError>>()?;
    let exact = exact_one_out_preservation(&g, &planted.edge_ids).powi(rounds as i32);
    let batch = TrialBatch::from_records(format!("preservation/{rounds}-out/{spec}"), records);
    let freq = batch.summary.mean;
    let sigma = (exact * (1.0 - exact) / trials.max(1) as f64).sqrt();
    Ok(with_sizes(batch, &g)
        .with_stat("lambda", lambda as f64)
        .with_stat("planted_size", planted.size as f64)
        .with_stat("eps", eps)
        .with_stat("frequency", freq)
        .with_stat("floor", preservation_floor(eps, rounds))
        .with_stat("exact", exact)
        .with_stat("sigma", sigma))
}

/// Edge and supernode counts after amplified contraction; `value = edges`,
/// `aux = supernodes`.
pub fn measure_edge_budget(
    spec: &GeneratorSpec,
    cfg: &AmplificationConfig,
    trials: usize,
    seed: u64,
    exec: Exec,
) -> Result<TrialBatch, ExperimentError> {
    let g = instance(spec, seed)?;
    // Trials run in parallel; each contraction runs its repetitions sequentially.
    let records = exec
        .map_indexed(trials, |i| {
            let s = trial_seed(seed, i);
            let amp = amplified_contraction_with(&g, cfg, s, Exec::Sequential)?;
            Ok(TrialRecord {
                seed: s,
                value: amp.graph.edge_count() as f64,
                aux: Some(amp.graph.supernode_count() as f64),
            })
        })
        .into_iter()
        .collect::<Result<Vec<_>, ContractionError>>()?;
    let batch = TrialBatch::from_records(format!("edge-budget/{spec}"), records);
    let n = g.vertex_count() as f64;
    let delta = g.min_degree() as f64;
    let edge_ratio = batch.summary.max / n;
    let node_ratio = batch.max_aux().unwrap_or(0.0) * delta / n;
    Ok(with_sizes(batch, &g)
        .with_stat("q", cfg.q as f64)
        .with_stat("r", cfg.r as f64)
        .with_stat("max_edge_ratio", edge_ratio)
        .with_stat("max_supernode_ratio", node_ratio))
}

/// Wall-clock seconds of the full pipeline per instance; `aux = m`. Timings
/// are the median of `repeats` runs.
pub fn measure_runtime_scaling(
    specs: &[GeneratorSpec],
    variant: Variant,
    repeats: usize,
    seed: u64,
    exec: Exec,
) -> Result<TrialBatch, ExperimentError> {
    let mut records = Vec::with_capacity(specs.len());
    let mut normalized = Vec::with_capacity(specs.len());
    for (i, spec) in specs.iter().enumerate() {
        let s = trial_seed(seed, i);
        let g = spec.generate(instance_seed(s))?;
        let cfg = AmplificationConfig::new(g.vertex_count());
        let mut times = Vec::with_capacity(repeats.max(1));
        for _ in 0..repeats.max(1) {
            let start = Instant::now();
            edge_connectivity_with(&g, &cfg, variant, s, &StoerWagner, exec)?;
            times.push(start.elapsed().as_secs_f64());
        }
        let t = Summary::of(&times).q50;
        let (n, m) = (g.vertex_count() as f64, g.edge_count() as f64);
        normalized.push(t / (m * n.ln().max(1.0)));
        records.push(TrialRecord { seed: s, value: t, aux: Some(m) });
    }
    let max_growth = records
        .windows(2)
        .map(|w| w[1].value / w[0].value)
        .fold(0.0, f64::max);
    let spread = Summary::of(&normalized);
    let batch = TrialBatch::from_records(format!("runtime/{variant:?}"), records);
    Ok(batch
        .with_stat("max_growth_per_step", max_growth)
        .with_stat(
            "normalized_spread",
            if spread.min > 0.0 { spread.max / spread.min } else { 0.0 },
        ))
}
