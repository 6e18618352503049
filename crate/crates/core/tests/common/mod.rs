#![allow(dead_code)]

use mincut_core::graph::{Edge, MultiGraph};
use mincut_core::seed::rng_from_seed;
use rand::Rng;

/// Random multigraph on `n` supernodes with `m` edges (parallel edges allowed).
/// When `connected`, the first `n - 1` edges form a random spanning tree.
pub fn random_multigraph(n: usize, m: usize, connected: bool, seed: u64) -> MultiGraph {
    let mut rng = rng_from_seed(seed);
    let mut edges = Vec::with_capacity(m);
    if connected {
        for v in 1..n {
            let u = rng.gen_range(0..v);
            edges.push((u, v));
        }
    }
    while edges.len() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            edges.push((u, v));
        }
    }
    // shuffle ids so they do not follow construction order
    let mut ids: Vec<usize> = (0..edges.len()).map(|i| i * 3 + 1).collect();
    for i in (1..ids.len()).rev() {
        ids.swap(i, rng.gen_range(0..=i));
    }
    let edges = edges
        .into_iter()
        .zip(ids)
        .map(|((u, v), id)| Edge { u, v, id })
        .collect();
    MultiGraph::from_parts(n, edges, (0..n).collect()).unwrap()
}

/// Number of edges of `mg` crossing the side encoded by `mask` (bit `s` set
/// when supernode `s` is on the side).
pub fn crossing(mg: &MultiGraph, mask: u64) -> usize {
    mg.edges()
        .iter()
        .filter(|e| (mask >> e.u) & 1 != (mask >> e.v) & 1)
        .count()
}

/// Every proper side, each cut listed once (the last supernode is never in the side).
pub fn proper_sides(n: usize) -> impl Iterator<Item = u64> {
    1..(1u64 << (n - 1))
}

pub fn mask_to_side(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&s| (mask >> s) & 1 == 1).collect()
}
