//! Weighted undirected multigraphs and the basic algorithms on them.

mod cuts;
mod euler;
mod held_karp;
mod mst;
pub(crate) use mst::UnionFind;
mod paths;

use std::collections::BTreeMap;

pub use cuts::{enumerate_cut_violations, min_cut_by_enumeration, CutReport, MAX_ENUMERATION_VERTICES};
pub use euler::{euler_tour, ClosedWalk};
pub use held_karp::{held_karp_opt, MAX_HELD_KARP_VERTICES};
pub use mst::mst;
pub use paths::{metric_closure, shortest_paths, ShortestPaths};

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
    pub cost: f64,
}

impl Edge {
    /// The endpoint opposite to `w`.
    pub fn other(&self, w: Vertex) -> Vertex {
        if self.u == w {
            self.v
        } else {
            self.u
        }
    }
}

/// An immutable weighted multigraph. Edge ids are positions in input order.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<(Vertex, EdgeId)>>,
}

/// Checks one edge record; the message is meant to be prefixed with a location.
pub(crate) fn check_record(n: usize, u: usize, v: usize, cost: f64) -> std::result::Result<(), String> {
    if u >= n || v >= n {
        return Err(format!("vertex id out of range [0, {n}): ({u}, {v})"));
    }
    if u == v {
        return Err(format!("self-loop at vertex {u}"));
    }
    if !cost.is_finite() {
        return Err(format!("cost {cost} is not finite"));
    }
    if cost < 0.0 {
        return Err(format!("negative cost {cost}"));
    }
    Ok(())
}

impl Graph {
    /// Builds a graph on `n` vertices. Errors name the offending record,
    /// counted from 1.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex, f64)>,
    {
        let mut list = Vec::new();
        let mut adj = vec![Vec::new(); n];
        for (i, (u, v, cost)) in edges.into_iter().enumerate() {
            check_record(n, u, v, cost).map_err(|reason| Error::Ingest { line: i + 1, reason })?;
            let id = list.len();
            list.push(Edge { u, v, cost });
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        Ok(Graph { n, edges: list, adj })
    }

    /// Builds a graph whose vertex count is one past the largest id mentioned.
    pub fn from_edges<I>(edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex, f64)>,
    {
        let edges: Vec<_> = edges.into_iter().collect();
        let n = edges.iter().map(|&(u, v, _)| u.max(v) + 1).max().unwrap_or(0);
        Self::new(n, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[id]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn cost(&self, id: EdgeId) -> f64 {
        self.edges[id].cost
    }

    /// Incident `(neighbor, edge id)` pairs in edge-id order.
    pub fn neighbors(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[v]
    }

    /// Same topology, costs replaced by `f(id, edge)`.
    pub fn map_costs<F>(&self, mut f: F) -> Result<Self>
    where
        F: FnMut(EdgeId, &Edge) -> f64,
    {
        Self::new(
            self.n,
            self.edges.iter().enumerate().map(|(i, e)| (e.u, e.v, f(i, e))),
        )
    }

    /// The spanning subgraph on the listed edges. The returned vector maps
    /// new edge ids back to ids of `self`.
    pub fn edge_subgraph(&self, ids: &[EdgeId]) -> (Graph, Vec<EdgeId>) {
        let mut adj = vec![Vec::new(); self.n];
        let mut edges = Vec::with_capacity(ids.len());
        for &id in ids {
            let e = self.edges[id];
            adj[e.u].push((e.v, edges.len()));
            adj[e.v].push((e.u, edges.len()));
            edges.push(e);
        }
        (Graph { n: self.n, edges, adj }, ids.to_vec())
    }

    /// Component label per vertex; labels are numbered by smallest member.
    pub fn components(&self) -> Vec<usize> {
        self.components_where(|_| true)
    }

    /// Components using only edges accepted by `keep`.
    pub fn components_where<F: Fn(EdgeId) -> bool>(&self, keep: F) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = next;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &(w, id) in &self.adj[v] {
                    if label[w] == usize::MAX && keep(id) {
                        label[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn ensure_connected(&self) -> Result<()> {
        let label = self.components();
        match label.iter().position(|&c| c != 0) {
            None => Ok(()),
            Some(second) => Err(Error::Disconnected {
                first: 0,
                second,
                components: label.iter().max().map_or(0, |&c| c + 1),
            }),
        }
    }

    pub fn total_cost(&self) -> f64 {
        self.edges.iter().map(|e| e.cost).sum()
    }
}

/// A multiset of edge ids of a parent graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeMultiset {
    counts: BTreeMap<EdgeId, usize>,
}

impl EdgeMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, id: EdgeId) {
        self.insert_n(id, 1);
    }

    pub fn insert_n(&mut self, id: EdgeId, times: usize) {
        if times > 0 {
            *self.counts.entry(id).or_insert(0) += times;
        }
    }

    pub fn extend(&mut self, other: &EdgeMultiset) {
        for (id, k) in other.iter() {
            self.insert_n(id, k);
        }
    }

    pub fn multiplicity(&self, id: EdgeId) -> usize {
        self.counts.get(&id).copied().unwrap_or(0)
    }

    /// `(edge id, multiplicity)` in increasing id order.
    pub fn iter(&self) -> impl Iterator<Item = (EdgeId, usize)> + '_ {
        self.counts.iter().map(|(&id, &k)| (id, k))
    }

    pub fn distinct(&self) -> usize {
        self.counts.len()
    }

    /// Number of edges counted with multiplicity.
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn cost(&self, g: &Graph) -> f64 {
        self.iter().map(|(id, k)| k as f64 * g.cost(id)).sum()
    }

    pub fn degrees(&self, g: &Graph) -> Vec<usize> {
        let mut deg = vec![0; g.n()];
        for (id, k) in self.iter() {
            let e = g.edge(id);
            deg[e.u] += k;
            deg[e.v] += k;
        }
        deg
    }

    /// Vertices of odd degree, ascending.
    pub fn odd_vertices(&self, g: &Graph) -> Vec<Vertex> {
        self.degrees(g)
            .iter()
            .enumerate()
            .filter(|(_, &d)| d % 2 == 1)
            .map(|(v, _)| v)
            .collect()
    }
}

impl FromIterator<EdgeId> for EdgeMultiset {
    fn from_iter<T: IntoIterator<Item = EdgeId>>(iter: T) -> Self {
        let mut s = EdgeMultiset::new();
        for id in iter {
            s.insert(id);
        }
        s
    }
}

/// A nonnegative value per edge of a graph together with its cost.
#[derive(Clone, Debug, PartialEq)]
pub struct FractionalSolution {
    values: Vec<f64>,
    objective: f64,
}

impl FractionalSolution {
    pub fn new(g: &Graph, values: Vec<f64>) -> Result<Self> {
        if values.len() != g.m() {
            return Err(Error::InvalidParameter(format!(
                "solution has {} values for {} edges",
                values.len(),
                g.m()
            )));
        }
        if let Some(i) = values.iter().position(|x| !(x.is_finite() && *x >= 0.0)) {
            return Err(Error::InvalidParameter(format!(
                "value {} of edge {i} is not a nonnegative real",
                values[i]
            )));
        }
        let objective = values.iter().zip(g.edges()).map(|(x, e)| x * e.cost).sum();
        Ok(FractionalSolution { values, objective })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn value(&self, id: EdgeId) -> f64 {
        self.values[id]
    }

    pub fn objective(&self) -> f64 {
        self.objective
    }

    /// Ids of edges with a positive value.
    pub fn support(&self) -> Vec<EdgeId> {
        (0..self.values.len()).filter(|&i| self.values[i] > 0.0).collect()
    }
}

/// A closed tour in the shortest-path metric; the last vertex connects back
/// to the first.
#[derive(Clone, Debug, PartialEq)]
pub struct Tour {
    pub vertices: Vec<Vertex>,
    pub cost: f64,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let g = Graph::from_edges([(0, 1, 1.0)]).unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
    }

    #[test]
    fn triangle() {
        let g = Graph::from_edges([(0, 1, 1.0), (1, 2, 1.0), (2, 0, 1.0)]).unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
        assert!(g.ensure_connected().is_ok());
    }

    #[test]
    fn parallel_edges_kept() {
        let g = Graph::from_edges([(0, 1, 1.0), (0, 1, 2.0)]).unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(g.neighbors(0), &[(1, 0), (1, 1)]);
    }

    #[test]
    fn rejects_bad_records_with_position() {
        let err = Graph::from_edges([(0, 1, 1.0), (2, 2, 1.0)]).unwrap_err();
        assert!(matches!(err, Error::Ingest { line: 2, .. }), "{err}");
        let err = Graph::from_edges([(0, 1, -1.0)]).unwrap_err();
        assert!(matches!(err, Error::Ingest { line: 1, .. }));
        let err = Graph::from_edges([(0, 1, 1.0), (1, 2, 2.0), (0, 2, f64::NAN)]).unwrap_err();
        assert!(matches!(err, Error::Ingest { line: 3, .. }));
        let err = Graph::new(2, [(0, 5, 1.0)]).unwrap_err();
        assert!(matches!(err, Error::Ingest { line: 1, .. }));
    }

    #[test]
    fn disconnected_names_components() {
        let g = Graph::new(4, [(0, 1, 1.0), (2, 3, 1.0)]).unwrap();
        match g.ensure_connected() {
            Err(Error::Disconnected { first, second, components }) => {
                assert_eq!((first, second, components), (0, 2, 2));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn multiset_degrees() {
        let g = Graph::from_edges([(0, 1, 1.0), (1, 2, 2.0)]).unwrap();
        let mut s: EdgeMultiset = [0, 1].into_iter().collect();
        assert_eq!(s.odd_vertices(&g), vec![0, 2]);
        s.insert(1);
        assert_eq!(s.total(), 3);
        assert_eq!(s.cost(&g), 5.0);
        assert_eq!(s.odd_vertices(&g), vec![0, 1]);
    }

    #[test]
    fn fractional_objective() {
        let g = Graph::from_edges([(0, 1, 2.0), (1, 2, 3.0)]).unwrap();
        let x = FractionalSolution::new(&g, vec![0.5, 0.0]).unwrap();
        assert_eq!(x.objective(), 1.0);
        assert_eq!(x.support(), vec![0]);
        assert!(FractionalSolution::new(&g, vec![-1.0, 0.0]).is_err());
    }
}
