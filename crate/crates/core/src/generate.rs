//! Random instances for tests and benchmarks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Connected simple graph with `m` edges and integer costs in `1..=max_cost`.
///
/// A random spanning tree (each vertex attached to an earlier one in a
/// shuffled order) is topped up with distinct random pairs; the edge order is
/// shuffled so the tree is not recognizable from ids.
pub fn random_connected_graph<R: Rng>(n: usize, m: usize, max_cost: u32, rng: &mut R) -> Result<Graph> {
    let max_m = n * n.saturating_sub(1) / 2;
    if n == 0 || m + 1 < n || m > max_m || max_cost == 0 {
        return Err(Error::InvalidParameter(format!(
            "need n ≥ 1, n-1 ≤ m ≤ {max_m} and max_cost ≥ 1 (n = {n}, m = {m}, max_cost = {max_cost})"
        )));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut present = vec![false; n * n];
    let mut pairs = Vec::with_capacity(m);
    for i in 1..n {
        let (u, v) = (order[i], order[rng.gen_range(0..i)]);
        present[u * n + v] = true;
        present[v * n + u] = true;
        pairs.push((u, v));
    }
    if m - pairs.len() > max_m / 2 {
        // dense: pick from the explicit complement
        let mut rest: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !present[u * n + v])
            .collect();
        rest.shuffle(rng);
        pairs.extend(rest.into_iter().take(m - (n - 1)));
    } else {
        while pairs.len() < m {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u != v && !present[u * n + v] {
                present[u * n + v] = true;
                present[v * n + u] = true;
                pairs.push((u, v));
            }
        }
    }
    pairs.shuffle(rng);
    Graph::new(
        n,
        pairs.into_iter().map(|(u, v)| (u, v, f64::from(rng.gen_range(1..=max_cost)))),
    )
}

/// Complete graph on uniform points in `[0, side)²` with rounded Euclidean
/// costs.
pub fn random_euclidean_graph<R: Rng>(n: usize, side: f64, rng: &mut R) -> Graph {
    let pts: Vec<(f64, f64)> = (0..n)
        .map(|_| (rng.gen::<f64>() * side, rng.gen::<f64>() * side))
        .collect();
    crate::io::euclidean_graph(&pts)
}
