//! Global minimum cuts (Stoer–Wagner) and exact edge strengths under a
//! nonnegative edge weighting.
//!
//! The strength of an edge is the largest `k` such that some vertex-induced
//! subgraph containing both endpoints has minimum cut at least `k`. It is
//! computed by splitting along minimum cuts: a subgraph with min cut above
//! `λ` can never straddle a cut of value `λ`, so the strength of an edge is
//! the largest min-cut value seen on the chain of vertex sets containing it.

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Vertex};

/// A graph together with a nonnegative weight per edge.
#[derive(Clone, Debug)]
pub struct WeightedView<'a> {
    base: &'a Graph,
    weights: Vec<f64>,
}

impl<'a> WeightedView<'a> {
    pub fn new(base: &'a Graph, weights: Vec<f64>) -> Result<Self> {
        if weights.len() != base.m() {
            return Err(Error::InvalidParameter(format!(
                "{} weights for {} edges",
                weights.len(),
                base.m()
            )));
        }
        if let Some(i) = weights.iter().position(|w| !(w.is_finite() && *w >= 0.0)) {
            return Err(Error::InvalidParameter(format!(
                "weight {} of edge {i} is not a nonnegative real",
                weights[i]
            )));
        }
        Ok(WeightedView { base, weights })
    }

    /// Weights equal to the edge costs.
    pub fn costs(base: &'a Graph) -> Self {
        let weights = base.edges().iter().map(|e| e.cost).collect();
        WeightedView { base, weights }
    }

    pub fn base(&self) -> &Graph {
        self.base
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn weight(&self, id: EdgeId) -> f64 {
        self.weights[id]
    }

    /// Total weight of edges crossing the vertex set `side`.
    pub fn cut_value(&self, side: &[Vertex]) -> f64 {
        let mut inside = vec![false; self.base.n()];
        for &v in side {
            inside[v] = true;
        }
        self.base
            .edges()
            .iter()
            .zip(&self.weights)
            .filter(|(e, _)| inside[e.u] != inside[e.v])
            .map(|(_, w)| w)
            .sum()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MinCut {
    pub value: f64,
    /// One side of the cut, ascending.
    pub side: Vec<Vertex>,
}

/// Stoer–Wagner on a dense symmetric matrix, O(k³). Returns the cut value and
/// one side as local indices. Requires `k >= 2`.
pub(crate) fn stoer_wagner(mut w: Vec<Vec<f64>>) -> (f64, Vec<usize>) {
    let k = w.len();
    debug_assert!(k >= 2);
    let mut groups: Vec<Vec<usize>> = (0..k).map(|i| vec![i]).collect();
    let mut active: Vec<usize> = (0..k).collect();
    let mut best = f64::INFINITY;
    let mut best_side = Vec::new();
    let mut key = vec![0.0; k];
    let mut added = vec![false; k];

    while active.len() > 1 {
        for &a in &active {
            key[a] = 0.0;
            added[a] = false;
        }
        let mut prev = usize::MAX;
        let mut last = usize::MAX;
        let mut last_key = 0.0;
        for _ in 0..active.len() {
            let mut sel = usize::MAX;
            for &a in &active {
                if !added[a] && (sel == usize::MAX || key[a] > key[sel]) {
                    sel = a;
                }
            }
            added[sel] = true;
            prev = last;
            last = sel;
            last_key = key[sel];
            for &a in &active {
                if !added[a] {
                    key[a] += w[sel][a];
                }
            }
        }
        if last_key < best {
            best = last_key;
            best_side = groups[last].clone();
        }
        // merge `last` into `prev`
        for &a in &active {
            let add = w[last][a];
            w[prev][a] += add;
            w[a][prev] = w[prev][a];
        }
        w[prev][prev] = 0.0;
        let moved = std::mem::take(&mut groups[last]);
        groups[prev].extend(moved);
        active.retain(|&a| a != last);
    }
    best_side.sort_unstable();
    (best, best_side)
}

/// Dense weight matrix of the subgraph induced by `vertices`; `local` must
/// map each listed vertex to its position and every other vertex to
/// `usize::MAX`.
fn induced_matrix(wv: &WeightedView, vertices: &[Vertex], local: &[usize]) -> Vec<Vec<f64>> {
    let k = vertices.len();
    let mut w = vec![vec![0.0; k]; k];
    for (e, &x) in wv.base.edges().iter().zip(&wv.weights) {
        let (a, b) = (local[e.u], local[e.v]);
        if a != usize::MAX && b != usize::MAX {
            w[a][b] += x;
            w[b][a] += x;
        }
    }
    w
}

/// Exact global minimum cut of the weighted graph.
///
/// A graph disconnected under positive weights yields value 0 with one
/// component-respecting side.
pub fn global_min_cut(wv: &WeightedView) -> Result<MinCut> {
    let n = wv.base.n();
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "global minimum cut needs at least 2 vertices, got {n}"
        )));
    }
    let vertices: Vec<Vertex> = (0..n).collect();
    let (value, side) = stoer_wagner(induced_matrix(wv, &vertices, &vertices));
    Ok(MinCut { value, side })
}

/// Per-edge strengths.
#[derive(Clone, Debug, PartialEq)]
pub struct StrengthMap {
    values: Vec<f64>,
}

impl StrengthMap {
    pub fn get(&self, id: EdgeId) -> f64 {
        self.values[id]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// `Σ_e w_e / s_e` over edges of positive weight. At most `n - 1` for
    /// exact strengths.
    pub fn weighted_inverse_sum(&self, weights: &[f64]) -> f64 {
        weights
            .iter()
            .zip(&self.values)
            .filter(|(w, _)| **w > 0.0)
            .map(|(w, s)| w / s)
            .sum()
    }
}

/// Exact strengths by recursive min-cut decomposition (O(n) min-cut solves).
///
/// Every edge of positive weight gets a strength of at least its own weight.
/// Zero-weight edges get the strength of the strongest vertex set that
/// contains both endpoints, which is zero only if that set is disconnected.
pub fn exact_strengths(wv: &WeightedView) -> Result<StrengthMap> {
    let g = wv.base;
    g.ensure_connected()?;
    let n = g.n();
    let mut strength = vec![0.0f64; g.m()];
    let mut local = vec![usize::MAX; n];
    let mut pending: Vec<Vec<Vertex>> = vec![(0..n).collect()];

    while let Some(vertices) = pending.pop() {
        if vertices.len() < 2 {
            continue;
        }
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let (lambda, side) = stoer_wagner(induced_matrix(wv, &vertices, &local));
        for (id, e) in g.edges().iter().enumerate() {
            if local[e.u] != usize::MAX && local[e.v] != usize::MAX && lambda > strength[id] {
                strength[id] = lambda;
            }
        }
        let mut in_side = vec![false; vertices.len()];
        for &i in &side {
            in_side[i] = true;
        }
        for &v in &vertices {
            local[v] = usize::MAX;
        }
        let (a, b): (Vec<_>, Vec<_>) = vertices
            .iter()
            .enumerate()
            .partition(|(i, _)| in_side[*i]);
        pending.push(b.into_iter().map(|(_, &v)| v).collect());
        pending.push(a.into_iter().map(|(_, &v)| v).collect());
    }
    Ok(StrengthMap { values: strength })
}
