use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::{EdgeId, Graph, Vertex};

/// Single-source shortest-path tree.
#[derive(Clone, Debug)]
pub struct ShortestPaths {
    pub source: Vertex,
    /// `f64::INFINITY` for unreachable vertices.
    pub dist: Vec<f64>,
    /// `(predecessor, edge id)` on a shortest path; `None` for the source and
    /// unreachable vertices.
    pub parent: Vec<Option<(Vertex, EdgeId)>>,
}

impl ShortestPaths {
    /// Edge ids of the tree path from `target` back to the source.
    pub fn path_edges(&self, target: Vertex) -> Vec<EdgeId> {
        let mut path = Vec::new();
        let mut v = target;
        while let Some((p, id)) = self.parent[v] {
            path.push(id);
            v = p;
        }
        path
    }
}

#[derive(PartialEq)]
struct Entry(f64, Vertex);

impl Eq for Entry {}

impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        // min-heap on distance, then vertex id
        other.0.total_cmp(&self.0).then_with(|| other.1.cmp(&self.1))
    }
}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Dijkstra from `source`. Costs are nonnegative by construction of [`Graph`].
pub fn shortest_paths(g: &Graph, source: Vertex) -> ShortestPaths {
    let n = g.n();
    let mut dist = vec![f64::INFINITY; n];
    let mut parent = vec![None; n];
    let mut done = vec![false; n];
    let mut heap = BinaryHeap::new();
    dist[source] = 0.0;
    heap.push(Entry(0.0, source));
    while let Some(Entry(d, v)) = heap.pop() {
        if done[v] {
            continue;
        }
        done[v] = true;
        for &(w, id) in g.neighbors(v) {
            let nd = d + g.cost(id);
            if nd < dist[w] {
                dist[w] = nd;
                parent[w] = Some((v, id));
                heap.push(Entry(nd, w));
            }
        }
    }
    ShortestPaths { source, dist, parent }
}

/// All-pairs shortest-path distances (the metric completion).
pub fn metric_closure(g: &Graph) -> Vec<Vec<f64>> {
    (0..g.n()).map(|s| shortest_paths(g, s).dist).collect()
}
