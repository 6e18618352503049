//! Deterministic instance generators and the inline `kind:params` spec syntax.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{GraphError, SimpleGraph};
use crate::seed::rng_from_seed;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GenerateError {
    #[error("infeasible generator parameters: {0}")]
    Infeasible(String),
    #[error("bad generator spec `{spec}`: {reason}")]
    Parse { spec: String, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn infeasible(msg: impl Into<String>) -> GenerateError {
    GenerateError::Infeasible(msg.into())
}

/// Instance families. `Display` and `FromStr` round-trip through the inline
/// syntax, e.g. `two_cliques:10,4` or `gnp:200,0.1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GeneratorSpec {
    Cycle { n: usize },
    Clique { n: usize },
    Path { n: usize },
    Star { leaves: usize },
    /// Two copies of `K_k` joined by `lambda` cross edges.
    TwoCliques { k: usize, lambda: usize },
    DisjointCliques { count: usize, size: usize },
    Gnp { n: usize, p: f64 },
    /// `count` cliques of `size` in a row, consecutive ones joined by `bridge` edges.
    CliqueChain { count: usize, size: usize, bridge: usize },
    /// Uniform random recursive tree.
    Tree { n: usize },
}

impl GeneratorSpec {
    pub fn generate(&self, seed: u64) -> Result<SimpleGraph, GenerateError> {
        match *self {
            GeneratorSpec::Cycle { n } => cycle(n),
            GeneratorSpec::Clique { n } => clique(n),
            GeneratorSpec::Path { n } => path(n),
            GeneratorSpec::Star { leaves } => star(leaves),
            GeneratorSpec::TwoCliques { k, lambda } => two_cliques(k, lambda),
            GeneratorSpec::DisjointCliques { count, size } => disjoint_cliques(count, size),
            GeneratorSpec::Gnp { n, p } => gnp(n, p, seed),
            GeneratorSpec::CliqueChain {
                count,
                size,
                bridge,
            } => clique_chain(count, size, bridge),
            GeneratorSpec::Tree { n } => random_tree(n, seed),
        }
    }

    /// Vertex set of one side of the planted non-singleton cut, when the
    /// family has one.
    pub fn planted_side(&self) -> Option<Vec<usize>> {
        match *self {
            GeneratorSpec::TwoCliques { k, .. } => Some((0..k).collect()),
            GeneratorSpec::CliqueChain { count, size, .. } if count >= 2 => {
                Some((0..size).collect())
            }
            _ => None,
        }
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSpec::Cycle { n } => write!(f, "cycle:{n}"),
            GeneratorSpec::Clique { n } => write!(f, "clique:{n}"),
            GeneratorSpec::Path { n } => write!(f, "path:{n}"),
            GeneratorSpec::Star { leaves } => write!(f, "star:{leaves}"),
            GeneratorSpec::TwoCliques { k, lambda } => write!(f, "two_cliques:{k},{lambda}"),
            GeneratorSpec::DisjointCliques { count, size } => {
                write!(f, "disjoint_cliques:{count},{size}")
            }
            GeneratorSpec::Gnp { n, p } => write!(f, "gnp:{n},{p}"),
            GeneratorSpec::CliqueChain {
                count,
                size,
                bridge,
            } => write!(f, "clique_chain:{count},{size},{bridge}"),
            GeneratorSpec::Tree { n } => write!(f, "tree:{n}"),
        }
    }
}

impl FromStr for GeneratorSpec {
    type Err = GenerateError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| GenerateError::Parse {
            spec: s.to_string(),
            reason: reason.to_string(),
        };
        let (kind, params) = s.split_once(':').unwrap_or((s, ""));
        let params: Vec<&str> = if params.is_empty() {
            Vec::new()
        } else {
            params.split(',').map(str::trim).collect()
        };
        let int = |i: usize| -> Result<usize, GenerateError> {
            params
                .get(i)
                .ok_or_else(|| err("missing parameter"))?
                .parse()
                .map_err(|_| err("expected a non-negative integer"))
        };
        let arity = |want: usize| {
            if params.len() == want {
                Ok(())
            } else {
                Err(err(&format!("expected {want} parameter(s)")))
            }
        };
        let spec = match kind.trim() {
            "cycle" => {
                arity(1)?;
                GeneratorSpec::Cycle { n: int(0)? }
            }
            "clique" => {
                arity(1)?;
                GeneratorSpec::Clique { n: int(0)? }
            }
            "path" => {
                arity(1)?;
                GeneratorSpec::Path { n: int(0)? }
            }
            "star" => {
                arity(1)?;
                GeneratorSpec::Star { leaves: int(0)? }
            }
            "tree" => {
                arity(1)?;
                GeneratorSpec::Tree { n: int(0)? }
            }
            "two_cliques" => {
                arity(2)?;
                GeneratorSpec::TwoCliques {
                    k: int(0)?,
                    lambda: int(1)?,
                }
            }
            "disjoint_cliques" => {
                arity(2)?;
                GeneratorSpec::DisjointCliques {
                    count: int(0)?,
                    size: int(1)?,
                }
            }
            "clique_chain" => {
                arity(3)?;
                GeneratorSpec::CliqueChain {
                    count: int(0)?,
                    size: int(1)?,
                    bridge: int(2)?,
                }
            }
            "gnp" => {
                arity(2)?;
                let p: f64 = params[1].parse().map_err(|_| err("expected a probability"))?;
                GeneratorSpec::Gnp { n: int(0)?, p }
            }
            _ => return Err(err("unknown generator kind")),
        };
        Ok(spec)
    }
}

fn clique_edges(offset: usize, size: usize, out: &mut Vec<(usize, usize)>) {
    for a in 0..size {
        for b in a + 1..size {
            out.push((offset + a, offset + b));
        }
    }
}

/// `count` distinct cross pairs between two blocks of `size` vertices. The
/// first `size` pairs form a perfect matching.
fn bridge_edges(left: usize, right: usize, size: usize, count: usize, out: &mut Vec<(usize, usize)>) {
    for i in 0..count {
        let a = i % size;
        let b = (a + i / size) % size;
        out.push((left + a, right + b));
    }
}

pub fn cycle(n: usize) -> Result<SimpleGraph, GenerateError> {
    if n < 3 {
        return Err(infeasible("cycle needs n >= 3"));
    }
    Ok(SimpleGraph::new(n, (0..n).map(|i| (i, (i + 1) % n)))?)
}

pub fn clique(n: usize) -> Result<SimpleGraph, GenerateError> {
    if n == 0 {
        return Err(infeasible("clique needs n >= 1"));
    }
    let mut edges = Vec::new();
    clique_edges(0, n, &mut edges);
    Ok(SimpleGraph::new(n, edges)?)
}

pub fn path(n: usize) -> Result<SimpleGraph, GenerateError> {
    if n == 0 {
        return Err(infeasible("path needs n >= 1"));
    }
    Ok(SimpleGraph::new(n, (1..n).map(|i| (i - 1, i)))?)
}

pub fn star(leaves: usize) -> Result<SimpleGraph, GenerateError> {
    Ok(SimpleGraph::new(leaves + 1, (1..=leaves).map(|v| (0, v)))?)
}

/// Two `K_k` on vertices `0..k` and `k..2k` joined by `lambda` cross edges.
/// The cross edges are the planted cut; it is the unique minimum cut when
/// `lambda < k - 1`.
pub fn two_cliques(k: usize, lambda: usize) -> Result<SimpleGraph, GenerateError> {
    if k < 2 {
        return Err(infeasible("two_cliques needs k >= 2"));
    }
    if lambda == 0 || lambda > k * k {
        return Err(infeasible(format!(
            "two_cliques needs 1 <= lambda <= k^2 = {}",
            k * k
        )));
    }
    let mut edges = Vec::new();
    clique_edges(0, k, &mut edges);
    clique_edges(k, k, &mut edges);
    bridge_edges(0, k, k, lambda, &mut edges);
    Ok(SimpleGraph::new(2 * k, edges)?)
}

pub fn disjoint_cliques(count: usize, size: usize) -> Result<SimpleGraph, GenerateError> {
    if count == 0 || size == 0 {
        return Err(infeasible("disjoint_cliques needs count, size >= 1"));
    }
    let mut edges = Vec::new();
    for c in 0..count {
        clique_edges(c * size, size, &mut edges);
    }
    Ok(SimpleGraph::new(count * size, edges)?)
}

pub fn clique_chain(count: usize, size: usize, bridge: usize) -> Result<SimpleGraph, GenerateError> {
    if count == 0 || size < 2 {
        return Err(infeasible("clique_chain needs count >= 1, size >= 2"));
    }
    if count > 1 && (bridge == 0 || bridge > size * size) {
        return Err(infeasible("clique_chain needs 1 <= bridge <= size^2"));
    }
    let mut edges = Vec::new();
    for c in 0..count {
        clique_edges(c * size, size, &mut edges);
    }
    for c in 1..count {
        bridge_edges((c - 1) * size, c * size, size, bridge, &mut edges);
    }
    Ok(SimpleGraph::new(count * size, edges)?)
}

/// Erdős–Rényi `G(n, p)`; pairs are visited in lexicographic order.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<SimpleGraph, GenerateError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(infeasible("gnp needs 0 <= p <= 1"));
    }
    let mut rng = rng_from_seed(seed);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Ok(SimpleGraph::new(n, edges)?)
}

pub fn random_tree(n: usize, seed: u64) -> Result<SimpleGraph, GenerateError> {
    if n == 0 {
        return Err(infeasible("tree needs n >= 1"));
    }
    let mut rng = rng_from_seed(seed);
    Ok(SimpleGraph::new(
        n,
        (1..n).map(|v| (rng.gen_range(0..v), v)).collect::<Vec<_>>(),
    )?)
}
