//! Simple graphs, contraction quotients and cuts.
//!
//! Every edge of a [`SimpleGraph`] carries a positional id `0..m`. Contraction
//! never renumbers edges, so a cut found in any quotient can be mapped back to
//! the original graph edge for edge.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dsu::DisjointSets;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("cut side must be a non-empty proper subset of the vertices")]
    ImproperSide,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub id: usize,
}

/// Immutable simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<(usize, usize)>>,
    min_degree: usize,
}

impl SimpleGraph {
    /// Builds a graph whose edge ids follow the iteration order of `edges`.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        let mut seen = HashSet::new();
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            let id = list.len();
            adjacency[u].push((v, id));
            adjacency[v].push((u, id));
            list.push((u, v));
        }
        let min_degree = adjacency.iter().map(Vec::len).min().unwrap_or(0);
        Ok(Self {
            n,
            edges: list,
            adjacency,
            min_degree,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints of edge `id`, in input orientation.
    pub fn endpoints(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = Edge> + '_ {
        self.edges
            .iter()
            .enumerate()
            .map(|(id, &(u, v))| Edge { u, v, id })
    }

    /// `(neighbor, edge_id)` pairs incident to `v`.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Minimum degree; 0 for the empty graph or when a vertex is isolated.
    pub fn min_degree(&self) -> usize {
        self.min_degree
    }

    /// Some vertex of minimum degree, lowest index first.
    pub fn min_degree_vertex(&self) -> Option<usize> {
        (0..self.n).min_by_key(|&v| (self.degree(v), v))
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || connected_components(self, 0..self.edge_count()).count == 1
    }
}

/// Connected components of a spanning subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    /// Dense component label per vertex, numbered by first occurrence.
    pub labels: Vec<usize>,
    pub count: usize,
}

/// Components of the spanning subgraph `(V, edge_ids)`.
pub fn connected_components<I>(g: &SimpleGraph, edge_ids: I) -> Components
where
    I: IntoIterator<Item = usize>,
{
    let mut dsu = DisjointSets::new(g.vertex_count());
    for id in edge_ids {
        let (u, v) = g.endpoints(id);
        dsu.union(u, v);
    }
    Components {
        count: dsu.set_count(),
        labels: dsu.labels(),
    }
}

/// Contraction quotient of a [`SimpleGraph`]. Parallel edges are kept one by
/// one with their original ids; self-loops are dropped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiGraph {
    supernode_count: usize,
    edges: Vec<Edge>,
    vertex_map: Vec<usize>,
}

impl MultiGraph {
    /// The identity quotient: one supernode per vertex, every edge kept.
    pub fn identity(g: &SimpleGraph) -> Self {
        Self {
            supernode_count: g.vertex_count(),
            edges: g.edges().collect(),
            vertex_map: (0..g.vertex_count()).collect(),
        }
    }

    /// Assembles a multigraph from raw parts, validating the quotient invariants
    /// against nothing but themselves (used by tests and deserialized inputs).
    pub fn from_parts(
        supernode_count: usize,
        edges: Vec<Edge>,
        vertex_map: Vec<usize>,
    ) -> Result<Self, GraphError> {
        let mut ids = HashSet::new();
        for e in &edges {
            for vertex in [e.u, e.v] {
                if vertex >= supernode_count {
                    return Err(GraphError::VertexOutOfRange {
                        vertex,
                        n: supernode_count,
                    });
                }
            }
            if e.u == e.v {
                return Err(GraphError::SelfLoop(e.u));
            }
            if !ids.insert(e.id) {
                return Err(GraphError::DuplicateEdge(e.u, e.v));
            }
        }
        if let Some(&vertex) = vertex_map.iter().find(|&&s| s >= supernode_count) {
            return Err(GraphError::VertexOutOfRange {
                vertex,
                n: supernode_count,
            });
        }
        Ok(Self {
            supernode_count,
            edges,
            vertex_map,
        })
    }

    pub fn supernode_count(&self) -> usize {
        self.supernode_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in supernode coordinates, carrying original ids.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Supernode of each original vertex.
    pub fn vertex_map(&self) -> &[usize] {
        &self.vertex_map
    }

    pub fn original_vertex_count(&self) -> usize {
        self.vertex_map.len()
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().map(|e| e.id)
    }

    /// Multiplicity-counted degree of every supernode.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.supernode_count];
        for e in &self.edges {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
        deg
    }

    /// Merges supernodes by `labels` (one label per supernode). Labels need not
    /// be dense; the result numbers classes by first occurrence.
    pub fn contract(&self, labels: &[usize]) -> MultiGraph {
        assert_eq!(labels.len(), self.supernode_count, "one label per supernode");
        let (dense, count) = densify(labels);
        let edges = self
            .edges
            .iter()
            .filter_map(|e| {
                let (a, b) = (dense[e.u], dense[e.v]);
                (a != b).then_some(Edge { u: a, v: b, id: e.id })
            })
            .collect();
        let vertex_map = self.vertex_map.iter().map(|&s| dense[s]).collect();
        MultiGraph {
            supernode_count: count,
            edges,
            vertex_map,
        }
    }

    /// Contracts the given edges (by position in [`Self::edges`]).
    pub fn contract_edges<I>(&self, positions: I) -> MultiGraph
    where
        I: IntoIterator<Item = usize>,
    {
        let mut dsu = DisjointSets::new(self.supernode_count);
        for p in positions {
            let e = self.edges[p];
            dsu.union(e.u, e.v);
        }
        self.contract(&dsu.labels())
    }

    /// Original vertices lying in the given supernodes, sorted.
    pub fn expand_side(&self, supernodes: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.supernode_count];
        for &s in supernodes {
            member[s] = true;
        }
        self.vertex_map
            .iter()
            .enumerate()
            .filter(|&(_, &s)| member[s])
            .map(|(v, _)| v)
            .collect()
    }

    /// Ids of edges crossing a supernode side, sorted.
    pub fn crossing_edge_ids(&self, supernodes: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.supernode_count];
        for &s in supernodes {
            member[s] = true;
        }
        let mut ids: Vec<usize> = self
            .edges
            .iter()
            .filter(|e| member[e.u] != member[e.v])
            .map(|e| e.id)
            .collect();
        ids.sort_unstable();
        ids
    }

    pub fn is_connected(&self) -> bool {
        if self.supernode_count <= 1 {
            return true;
        }
        let mut dsu = DisjointSets::new(self.supernode_count);
        for e in &self.edges {
            dsu.union(e.u, e.v);
        }
        dsu.set_count() == 1
    }
}

fn densify(labels: &[usize]) -> (Vec<usize>, usize) {
    let mut map = std::collections::HashMap::new();
    let dense = labels
        .iter()
        .map(|&l| {
            let next = map.len();
            *map.entry(l).or_insert(next)
        })
        .collect();
    (dense, map.len())
}

/// Quotient of `g` whose supernodes are the classes of `labels`.
pub fn contract_by_labels(g: &SimpleGraph, labels: &[usize]) -> MultiGraph {
    assert_eq!(labels.len(), g.vertex_count(), "one label per vertex");
    MultiGraph::identity(g).contract(labels)
}

/// A cut of a [`SimpleGraph`] in original coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cut {
    /// Sorted vertices on one side.
    pub side: Vec<usize>,
    /// Sorted ids of crossing edges.
    pub edge_ids: Vec<usize>,
    pub size: usize,
    pub is_singleton: bool,
}

/// Exact cut induced by `side`. Duplicates in `side` are ignored.
pub fn cut_from_side(g: &SimpleGraph, side: &[usize]) -> Result<Cut, GraphError> {
    let n = g.vertex_count();
    let mut member = vec![false; n];
    for &v in side {
        if v >= n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n });
        }
        member[v] = true;
    }
    let side: Vec<usize> = (0..n).filter(|&v| member[v]).collect();
    if side.is_empty() || side.len() == n {
        return Err(GraphError::ImproperSide);
    }
    let edge_ids: Vec<usize> = g
        .edges()
        .filter(|e| member[e.u] != member[e.v])
        .map(|e| e.id)
        .collect();
    Ok(Cut {
        is_singleton: side.len() == 1 || side.len() == n - 1,
        size: edge_ids.len(),
        side,
        edge_ids,
    })
}
