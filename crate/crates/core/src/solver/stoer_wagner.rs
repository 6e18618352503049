//! Stoer–Wagner global minimum cut on a multigraph, with parallel edges
//! counted as unit weights.

use crate::graph::MultiGraph;

use super::SolverError;

/// Minimum cut value and one side, in supernode coordinates (sorted).
pub fn stoer_wagner(mg: &MultiGraph) -> Result<(usize, Vec<usize>), SolverError> {
    let n = mg.supernode_count();
    if n < 2 {
        return Err(SolverError::TooSmall);
    }
    if !mg.is_connected() {
        return Err(SolverError::Disconnected);
    }
    let mut w = vec![0u64; n * n];
    for e in mg.edges() {
        w[e.u * n + e.v] += 1;
        w[e.v * n + e.u] += 1;
    }
    // members[i] lists the supernodes merged into active vertex i
    let mut members: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut best = (u64::MAX, Vec::new());
    let mut key = vec![0u64; n];
    let mut added = vec![false; n];

    while active.len() > 1 {
        for &v in &active {
            key[v] = 0;
            added[v] = false;
        }
        let mut prev = active[0];
        let mut last = active[0];
        added[last] = true;
        for &v in &active {
            key[v] = w[last * n + v];
        }
        for _ in 1..active.len() {
            let next = active
                .iter()
                .copied()
                .filter(|&v| !added[v])
                .max_by_key(|&v| (key[v], std::cmp::Reverse(v)))
                .expect("unadded vertex remains");
            added[next] = true;
            prev = last;
            last = next;
            for &v in &active {
                if !added[v] {
                    key[v] += w[next * n + v];
                }
            }
        }
        let phase_cut = key[last];
        if phase_cut < best.0 {
            best = (phase_cut, members[last].clone());
        }
        // merge `last` into `prev`
        let moved = std::mem::take(&mut members[last]);
        members[prev].extend(moved);
        for &v in &active {
            let add = w[last * n + v];
            w[prev * n + v] += add;
            w[v * n + prev] += add;
        }
        w[prev * n + prev] = 0;
        active.retain(|&v| v != last);
    }
    let mut side = best.1;
    side.sort_unstable();
    Ok((best.0 as usize, side))
}
