//! Edge connectivity of simple graphs by random 2-out contraction.
//!
//! The pipeline contracts the input down to `O(n / δ)` supernodes and `O(n)`
//! edges while keeping every non-trivial near-minimum cut whp, solves the small
//! multigraph exactly, and compares the result against the minimum degree.
//!
//! ```
//! use mincut_core::contraction::AmplificationConfig;
//! use mincut_core::generate;
//! use mincut_core::solver::{edge_connectivity, Variant};
//!
//! let g = generate::two_cliques(10, 4).unwrap();
//! let cfg = AmplificationConfig::new(g.vertex_count());
//! let result = edge_connectivity(&g, &cfg, Variant::Amplified, 7).unwrap();
//! assert_eq!(result.value, 4);
//! assert!(!result.is_singleton);
//! ```

pub mod certificate;
pub mod contraction;
pub mod dsu;
pub mod exec;
pub mod experiments;
pub mod generate;
pub mod graph;
pub mod io;
pub mod report;
pub mod seed;
pub mod solver;

pub use dsu::DisjointSets;
pub use exec::Exec;
pub use graph::{connected_components, contract_by_labels, cut_from_side, Cut, Edge, MultiGraph, SimpleGraph};
