//! Forbidden-subgraph scan for convex-polyhedral realizability and simple
//! density statistics.
//!
//! The scan is one-sided: a reported obstruction proves that no
//! convex-polyhedral surface realizes the graph, while an empty report
//! proves nothing.

use serde::Serialize;

use super::generators::{complete, triple_stacked_triangle};
use super::subgraph::{contains_k5t, contains_subgraph};
use super::Graph;

/// Number of common neighbors in the `K_{5,t}` obstruction.
pub const K5T_COMMON: usize = 81;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ObstructionKind {
    K5,
    K5_81,
    TripleStackedTriangle,
}

impl std::fmt::Display for ObstructionKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ObstructionKind::K5 => "K5",
            ObstructionKind::K5_81 => "K5,81",
            ObstructionKind::TripleStackedTriangle => "triple-stacked triangle",
        })
    }
}

/// An obstruction with the host vertices certifying it. For `K5` and the
/// triple-stacked triangle, `witness[i]` is the image of pattern vertex `i`;
/// for `K5_81` the first five entries are the hubs and the rest are the
/// common neighbors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Obstruction {
    pub kind: ObstructionKind,
    pub witness: Vec<usize>,
}

impl Obstruction {
    /// Checks that the witness really embeds the named pattern in `g`.
    pub fn certifies(&self, g: &Graph) -> bool {
        let pattern_edges: Vec<(usize, usize)> = match self.kind {
            ObstructionKind::K5 => complete(5).edges(),
            ObstructionKind::TripleStackedTriangle => triple_stacked_triangle().edges(),
            ObstructionKind::K5_81 => {
                if self.witness.len() < 5 + K5T_COMMON {
                    return false;
                }
                (0..5).flat_map(|h| (5..self.witness.len()).map(move |c| (h, c))).collect()
            }
        };
        let mut distinct = self.witness.clone();
        distinct.sort_unstable();
        distinct.dedup();
        distinct.len() == self.witness.len()
            && self.witness.iter().all(|&v| v < g.n())
            && pattern_edges.iter().all(|&(a, b)| g.has_edge(self.witness[a], self.witness[b]))
    }
}

/// Reports every obstruction kind present in `g`, one witness per kind.
pub fn obstruction_scan(g: &Graph) -> Vec<Obstruction> {
    let mut out = Vec::new();
    if let Some(w) = contains_subgraph(g, &complete(5)).expect("pattern within size bound") {
        out.push(Obstruction { kind: ObstructionKind::K5, witness: w });
    }
    if let Some(w) = contains_k5t(g, K5T_COMMON) {
        let mut witness = w.hubs.to_vec();
        witness.extend(w.common.iter().filter(|v| !w.hubs.contains(v)).take(K5T_COMMON));
        out.push(Obstruction { kind: ObstructionKind::K5_81, witness });
    }
    if let Some(w) = contains_subgraph(g, &triple_stacked_triangle()).expect("pattern within size bound") {
        out.push(Obstruction { kind: ObstructionKind::TripleStackedTriangle, witness: w });
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensityStats {
    pub n: usize,
    pub m: usize,
    pub avg_degree: f64,
    /// `n^(9/5)`, the constant-free upper-bound reference.
    pub kst_upper: f64,
    /// Edge count `d * 2^(d-1)` of the hypercube on `2^d` vertices, with
    /// `2^d` the power of two nearest to `n`.
    pub hypercube_lower_example: u64,
}

pub fn density_stats(g: &Graph) -> DensityStats {
    let n = g.n();
    let m = g.m();
    let avg_degree = if n == 0 { 0.0 } else { 2.0 * m as f64 / n as f64 };
    let d = if n <= 1 { 0 } else { (n as f64).log2().round() as u32 };
    let hypercube_lower_example = if d == 0 { 0 } else { u64::from(d) << (d - 1) };
    DensityStats { n, m, avg_degree, kst_upper: (n as f64).powf(1.8), hypercube_lower_example }
}
