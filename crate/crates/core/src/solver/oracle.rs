//! Ground-truth minimum cut: exhaustive side enumeration for small inputs,
//! unit-capacity max-flow from a fixed source otherwise.

use std::collections::VecDeque;

use crate::exec::Exec;
use crate::graph::{cut_from_side, MultiGraph, SimpleGraph};

use super::{Method, MinCutResult, SolverError};

/// Inputs with at most this many (super)nodes are solved by enumeration.
pub const EXHAUSTIVE_LIMIT: usize = 16;

/// Exact minimum cut of a simple graph, in original coordinates.
pub fn oracle_mincut(g: &SimpleGraph) -> Result<MinCutResult, SolverError> {
    oracle_mincut_with(g, Exec::default())
}

pub fn oracle_mincut_with(g: &SimpleGraph, exec: Exec) -> Result<MinCutResult, SolverError> {
    let mg = MultiGraph::identity(g);
    let (value, side, method) = oracle_multi_with(&mg, exec)?;
    let witness = cut_from_side(g, &side).map_err(|e| SolverError::Invariant(e.to_string()))?;
    if witness.size != value {
        return Err(SolverError::Invariant(format!(
            "oracle side has {} crossing edges, expected {value}",
            witness.size
        )));
    }
    Ok(MinCutResult {
        value,
        is_singleton: witness.is_singleton,
        witness,
        method,
    })
}

/// Exact minimum cut of a multigraph: `(value, supernode side)`. A
/// disconnected input yields value 0 and the component of supernode 0.
pub fn oracle_multi(mg: &MultiGraph) -> Result<(usize, Vec<usize>), SolverError> {
    oracle_multi_with(mg, Exec::default()).map(|(v, s, _)| (v, s))
}

fn oracle_multi_with(mg: &MultiGraph, exec: Exec) -> Result<(usize, Vec<usize>, Method), SolverError> {
    let n = mg.supernode_count();
    if n < 2 {
        return Err(SolverError::TooSmall);
    }
    if n <= EXHAUSTIVE_LIMIT {
        let (v, s) = exhaustive_min_cut(mg);
        Ok((v, s, Method::OracleExhaustive))
    } else {
        let (v, s) = maxflow_min_cut_with(mg, exec);
        Ok((v, s, Method::OracleMaxflow))
    }
}

/// Enumerates every side not containing the last supernode. Exponential;
/// intended for `n <= EXHAUSTIVE_LIMIT`.
pub fn exhaustive_min_cut(mg: &MultiGraph) -> (usize, Vec<usize>) {
    let n = mg.supernode_count();
    assert!((2..=24).contains(&n), "exhaustive enumeration needs 2 <= n <= 24");
    let edges: Vec<(u32, u32)> = mg.edges().iter().map(|e| (1 << e.u, 1 << e.v)).collect();
    let mut best = (usize::MAX, 0u32);
    for mask in 1u32..(1 << (n - 1)) {
        let size = edges
            .iter()
            .filter(|&&(a, b)| (mask & a != 0) != (mask & b != 0))
            .count();
        if size < best.0 {
            best = (size, mask);
        }
    }
    let side = (0..n).filter(|&v| best.1 & (1 << v) != 0).collect();
    (best.0, side)
}

struct FlowNetwork {
    head: Vec<usize>,
    // arcs 2i and 2i+1 are the two directions of edge i
    to: Vec<usize>,
    next: Vec<usize>,
}

impl FlowNetwork {
    fn new(mg: &MultiGraph) -> Self {
        let n = mg.supernode_count();
        let mut head = vec![usize::MAX; n];
        let mut to = Vec::with_capacity(2 * mg.edge_count());
        let mut next = Vec::with_capacity(2 * mg.edge_count());
        for e in mg.edges() {
            for (a, b) in [(e.u, e.v), (e.v, e.u)] {
                to.push(b);
                next.push(head[a]);
                head[a] = to.len() - 1;
            }
        }
        Self { head, to, next }
    }

    /// Unit-capacity s-t max flow by BFS augmentation. Returns the flow value
    /// and the source side of the final residual graph.
    fn max_flow(&self, s: usize, t: usize) -> (usize, Vec<bool>) {
        let n = self.head.len();
        let mut cap = vec![1u8; self.to.len()];
        let mut flow = 0;
        let mut via = vec![usize::MAX; n];
        loop {
            let reached = self.bfs(s, &cap, &mut via);
            if !reached[t] {
                return (flow, reached);
            }
            let mut v = t;
            while v != s {
                let arc = via[v];
                cap[arc] -= 1;
                cap[arc ^ 1] += 1;
                v = self.to[arc ^ 1];
            }
            flow += 1;
        }
    }

    fn bfs(&self, s: usize, cap: &[u8], via: &mut [usize]) -> Vec<bool> {
        let n = self.head.len();
        let mut seen = vec![false; n];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            let mut arc = self.head[x];
            while arc != usize::MAX {
                let y = self.to[arc];
                if cap[arc] > 0 && !seen[y] {
                    seen[y] = true;
                    via[y] = arc;
                    queue.push_back(y);
                }
                arc = self.next[arc];
            }
        }
        seen
    }
}

/// Edge connectivity via `n - 1` max-flow runs from supernode 0.
pub fn maxflow_min_cut(mg: &MultiGraph) -> (usize, Vec<usize>) {
    maxflow_min_cut_with(mg, Exec::default())
}

pub fn maxflow_min_cut_with(mg: &MultiGraph, exec: Exec) -> (usize, Vec<usize>) {
    let n = mg.supernode_count();
    assert!(n >= 2, "max-flow oracle needs two supernodes");
    let net = FlowNetwork::new(mg);
    let runs = exec.map_indexed(n - 1, |i| {
        let t = i + 1;
        let (flow, side) = net.max_flow(0, t);
        (flow, t, side)
    });
    let (value, _, side) = runs
        .into_iter()
        .min_by_key(|&(flow, t, _)| (flow, t))
        .expect("at least one target");
    (value, (0..n).filter(|&v| side[v]).collect())
}
