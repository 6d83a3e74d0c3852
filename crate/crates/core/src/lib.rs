//! Fast Christofides-style approximation for metric TSP on implicit instances.
//!
//! An instance is a sparse weighted graph; the metric is its shortest-path
//! metric. The sparsified pipeline solves the 2-edge-connected spanning
//! subgraph LP approximately (with a dual certificate), sparsifies the
//! fractional point by importance sampling on edge strengths, computes a
//! minimum-cost T-join inside the sparse support, and assembles a tour from
//! the minimum spanning tree plus the join.
//!
//! Every stage has an exhaustive counterpart usable at small scale
//! ([`graph::enumerate_cut_violations`], [`graph::held_karp_opt`]) so results
//! can be checked rather than trusted.

pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod lp;
pub mod matching;
pub mod mincut;
pub mod pipeline;
pub mod report;
pub mod sparsify;
pub mod tjoin;

pub use error::{Error, Result};
pub use graph::{EdgeId, EdgeMultiset, FractionalSolution, Graph, Tour, Vertex};

/// Relative tolerance used for equality of accumulated real quantities.
pub const REL_TOL: f64 = 1e-9;

/// `a <= b` up to [`REL_TOL`] relative slack.
pub fn le_rel(a: f64, b: f64) -> bool {
    a <= b + REL_TOL * a.abs().max(b.abs()).max(1e-300)
}

/// `a == b` up to [`REL_TOL`] relative slack.
pub fn eq_rel(a: f64, b: f64) -> bool {
    (a - b).abs() <= REL_TOL * a.abs().max(b.abs()).max(1e-300)
}
