//! Sparse k-edge-connectivity certificates by maximum-adjacency scan.
//!
//! Vertices are scanned in maximum-adjacency order. When `x` is scanned, each
//! edge `(x, y)` to an unscanned `y` is put in forest `r(y) + 1`, where `r(y)` is
//! the number of edges already joining `y` to scanned vertices, and `r(y)` is
//! then incremented. The forests `F_1, F_2, ...` obtained this way are the
//! greedy maximal-forest decomposition: every edge lands in the lowest-index
//! forest in which its endpoints are still disconnected. `F_1 ∪ ... ∪ F_k`
//! crosses every cut at least `min(k, c)` times, where `c` is the cut's size.

use crate::graph::MultiGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateForests {
    pub k: usize,
    /// Original ids of the retained edges, ascending.
    pub retained_edge_ids: Vec<usize>,
    /// 1-based forest of each retained edge, aligned with `retained_edge_ids`.
    pub forest_index: Vec<usize>,
    /// Positions in `mg.edges()` of the retained edges, aligned as above.
    pub retained_positions: Vec<usize>,
}

impl CertificateForests {
    pub fn len(&self) -> usize {
        self.retained_edge_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.retained_edge_ids.is_empty()
    }
}

/// Forest index (1-based) of every edge of `mg`, by position.
pub fn forest_decomposition(mg: &MultiGraph) -> Vec<usize> {
    let n = mg.supernode_count();
    let edges = mg.edges();
    // adjacency sorted by edge id gives deterministic tie-breaking
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    let mut order: Vec<usize> = (0..edges.len()).collect();
    order.sort_unstable_by_key(|&p| edges[p].id);
    for p in order {
        let e = edges[p];
        adj[e.u].push((e.v, p));
        adj[e.v].push((e.u, p));
    }

    let mut forest = vec![0usize; edges.len()];
    let mut rank = vec![0usize; n];
    let mut scanned = vec![false; n];
    let mut buckets: Vec<Vec<usize>> = vec![(0..n).rev().collect()];
    let mut top = 0usize;
    let mut remaining = n;
    while remaining > 0 {
        let x = loop {
            match buckets[top].pop() {
                Some(v) if !scanned[v] && rank[v] == top => break v,
                Some(_) => {}
                None => top -= 1,
            }
        };
        scanned[x] = true;
        remaining -= 1;
        for &(y, p) in &adj[x] {
            if scanned[y] {
                continue;
            }
            rank[y] += 1;
            forest[p] = rank[y];
            if rank[y] >= buckets.len() {
                buckets.resize_with(rank[y] + 1, Vec::new);
            }
            buckets[rank[y]].push(y);
            top = top.max(rank[y]);
        }
    }
    forest
}

pub fn sparse_certificate(mg: &MultiGraph, k: usize) -> CertificateForests {
    assert!(k >= 1, "certificate parameter k must be positive");
    let forest = forest_decomposition(mg);
    let mut kept: Vec<(usize, usize, usize)> = mg
        .edges()
        .iter()
        .enumerate()
        .filter(|&(p, _)| forest[p] <= k)
        .map(|(p, e)| (e.id, forest[p], p))
        .collect();
    kept.sort_unstable();
    CertificateForests {
        k,
        retained_edge_ids: kept.iter().map(|t| t.0).collect(),
        forest_index: kept.iter().map(|t| t.1).collect(),
        retained_positions: kept.iter().map(|t| t.2).collect(),
    }
}

/// One pass: contracts every edge outside the k-certificate of `mg`.
pub fn certificate_pass(mg: &MultiGraph, k: usize) -> MultiGraph {
    let cert = sparse_certificate(mg, k);
    let mut retained = vec![false; mg.edge_count()];
    for &p in &cert.retained_positions {
        retained[p] = true;
    }
    mg.contract_edges((0..mg.edge_count()).filter(|&p| !retained[p]))
}

/// Repeats [`certificate_pass`] until the certificate retains every edge.
/// Each pass keeps all cuts of size at most `k` with identical edge ids, so
/// the fixpoint does too; it has fewer than `k * supernode_count` edges and a
/// second application is the identity.
pub fn reduce_edges_certificate(mg: &MultiGraph, k: usize) -> MultiGraph {
    let mut current = certificate_pass(mg, k);
    loop {
        let next = certificate_pass(&current, k);
        if next.edge_count() == current.edge_count() {
            return current;
        }
        current = next;
    }
}
