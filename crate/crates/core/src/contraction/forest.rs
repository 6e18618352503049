//! Online preserve/contract oracle built from one 2-out sample and `4δ`
//! edge-disjoint forests over the sample's components.

use rand::Rng;

use super::kout::sample_k_out;
use super::ContractionError;
use crate::dsu::DisjointSets;
use crate::graph::{connected_components, Edge, SimpleGraph};
use crate::seed::{self, rng_from_seed, streams};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Answer {
    Preserve,
    Contract,
}

#[derive(Debug, Clone)]
pub struct ForestOracle {
    /// Component color of each original vertex.
    colors: Vec<u32>,
    color_count: usize,
    forest_count: usize,
    /// Forest `i` owns elements `i * color_count .. (i + 1) * color_count`.
    forests: DisjointSets,
    preserve_count: usize,
    trivial_mode: bool,
    queried: Vec<u64>,
    added: Vec<(usize, usize)>,
    rng: seed::Rng,
}

impl ForestOracle {
    /// Draws the 2-out sample for `g` and sets up `4 * δ` empty forests. Falls
    /// back to trivial mode, which answers `Contract` to everything, when the
    /// sample leaves more than `supernode_budget` components.
    pub fn new(g: &SimpleGraph, supernode_budget: usize, seed: u64) -> Result<Self, ContractionError> {
        let sample = sample_k_out(g, 2, seed)?;
        let comps = connected_components(g, sample.edge_ids.iter().copied());
        let trivial_mode = comps.count > supernode_budget;
        let forest_count = 4 * g.min_degree();
        let forests = if trivial_mode {
            DisjointSets::new(0)
        } else {
            DisjointSets::new(forest_count * comps.count)
        };
        Ok(Self {
            colors: comps.labels.iter().map(|&c| c as u32).collect(),
            color_count: comps.count,
            forest_count,
            forests,
            preserve_count: 0,
            trivial_mode,
            queried: vec![0; g.edge_count().div_ceil(64)],
            added: Vec::new(),
            rng: rng_from_seed(seed::derive(seed, streams::FOREST)),
        })
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v] as usize
    }

    pub fn color_count(&self) -> usize {
        self.color_count
    }

    pub fn forest_count(&self) -> usize {
        self.forest_count
    }

    pub fn preserve_count(&self) -> usize {
        self.preserve_count
    }

    pub fn is_trivial(&self) -> bool {
        self.trivial_mode
    }

    /// `(edge_id, forest)` for every edge added to a forest, in query order.
    pub fn added_edges(&self) -> &[(usize, usize)] {
        &self.added
    }

    /// Upper bound on preserve answers: `4δ * (colors - 1)`.
    pub fn preserve_budget(&self) -> usize {
        self.forest_count * self.color_count.saturating_sub(1)
    }

    /// Answers one edge. Each edge id may be queried at most once.
    pub fn query(&mut self, edge: Edge) -> Result<Answer, ContractionError> {
        let (word, bit) = (edge.id / 64, 1u64 << (edge.id % 64));
        if self.queried[word] & bit != 0 {
            return Err(ContractionError::RepeatedEdge(edge.id));
        }
        self.queried[word] |= bit;
        if self.trivial_mode {
            return Ok(Answer::Contract);
        }
        let (cu, cv) = (self.color(edge.u), self.color(edge.v));
        if cu == cv {
            return Ok(Answer::Contract);
        }
        let i = self.rng.gen_range(0..self.forest_count);
        let base = i * self.color_count;
        if self.forests.union(base + cu, base + cv) {
            self.preserve_count += 1;
            self.added.push((edge.id, i));
            Ok(Answer::Preserve)
        } else {
            Ok(Answer::Contract)
        }
    }

    /// Post-hoc audit: no edge in two forests, and every forest acyclic over
    /// the colors.
    pub fn audit(&self, g: &SimpleGraph) -> Result<(), String> {
        let mut owner = std::collections::HashMap::new();
        for &(id, forest) in &self.added {
            if let Some(prev) = owner.insert(id, forest) {
                return Err(format!("edge {id} added to forests {prev} and {forest}"));
            }
        }
        let mut check = DisjointSets::new(self.forest_count * self.color_count);
        for &(id, forest) in &self.added {
            let (u, v) = g.endpoints(id);
            let base = forest * self.color_count;
            if !check.union(base + self.color(u), base + self.color(v)) {
                return Err(format!("edge {id} closes a cycle in forest {forest}"));
            }
        }
        if self.preserve_count > self.preserve_budget() {
            return Err(format!(
                "{} preserve answers exceed budget {}",
                self.preserve_count,
                self.preserve_budget()
            ));
        }
        Ok(())
    }
}
