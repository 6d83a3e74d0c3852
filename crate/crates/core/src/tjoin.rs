//! Minimum-cost T-joins by Edmonds' reduction: a minimum T-join is the
//! union of shortest paths given by a minimum perfect matching on `T` under
//! the shortest-path metric.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{shortest_paths, EdgeMultiset, Graph, ShortestPaths, Vertex};
use crate::matching::{min_cost_perfect_matching, MatchingInstance};

/// A vertex set of even size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParitySet(BTreeSet<Vertex>);

impl ParitySet {
    pub fn new<I: IntoIterator<Item = Vertex>>(vertices: I) -> Result<Self> {
        let set: BTreeSet<Vertex> = vertices.into_iter().collect();
        if set.len() % 2 == 1 {
            return Err(Error::OddTerminalSet(set.len()));
        }
        Ok(ParitySet(set))
    }

    /// Odd-degree vertices of a sub-multigraph; always even in number.
    pub fn odd_vertices(g: &Graph, es: &EdgeMultiset) -> Self {
        ParitySet(es.odd_vertices(g).into_iter().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct JoinResult {
    pub edges: EdgeMultiset,
    pub cost: f64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TJoinOptions {
    /// Keep edges used by two matched paths instead of cancelling them.
    pub keep_multiplicities: bool,
}

pub fn min_cost_tjoin(h: &Graph, t: &ParitySet) -> Result<JoinResult> {
    min_cost_tjoin_with(h, t, TJoinOptions::default())
}

pub fn min_cost_tjoin_with(h: &Graph, t: &ParitySet, opts: TJoinOptions) -> Result<JoinResult> {
    if let Some(v) = t.iter().find(|&v| v >= h.n()) {
        return Err(Error::InvalidParameter(format!("terminal {v} is not a vertex")));
    }
    let terminals: Vec<Vertex> = t.iter().collect();
    if terminals.is_empty() {
        return Ok(JoinResult { edges: EdgeMultiset::new(), cost: 0.0 });
    }
    let trees: Vec<ShortestPaths> = terminals.iter().map(|&s| shortest_paths(h, s)).collect();
    for (i, tree) in trees.iter().enumerate() {
        if let Some(&b) = terminals.iter().find(|&&b| tree.dist[b].is_infinite()) {
            return Err(Error::TerminalsDisconnected { a: terminals[i], b });
        }
    }
    let inst = MatchingInstance::complete(terminals.len(), |i, j| trees[i].dist[terminals[j]])?;
    let matching = min_cost_perfect_matching(&inst)?;

    let mut used = EdgeMultiset::new();
    for &(i, j) in &matching.pairs {
        for id in trees[i].path_edges(terminals[j]) {
            used.insert(id);
        }
    }
    let edges = if opts.keep_multiplicities {
        used
    } else {
        used.iter().filter(|&(_, k)| k % 2 == 1).map(|(id, _)| id).collect()
    };
    let odd = ParitySet::odd_vertices(h, &edges);
    if &odd != t {
        return Err(Error::CheckFailed(format!(
            "T-join parity mismatch: odd set {:?}, expected {:?}",
            odd.0, t.0
        )));
    }
    let cost = edges.cost(h);
    Ok(JoinResult { edges, cost })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_terminal_set() {
        let g = Graph::from_edges([(0, 1, 1.0)]).unwrap();
        let j = min_cost_tjoin(&g, &ParitySet::new([]).unwrap()).unwrap();
        assert!(j.edges.is_empty());
        assert_eq!(j.cost, 0.0);
    }

    #[test]
    fn path_endpoints() {
        let g = Graph::from_edges([(0, 1, 1.0), (1, 2, 1.0)]).unwrap();
        let j = min_cost_tjoin(&g, &ParitySet::new([0, 2]).unwrap()).unwrap();
        assert_eq!(j.cost, 2.0);
        assert_eq!(j.edges.distinct(), 2);
    }

    #[test]
    fn adjacent_on_cycle() {
        for n in 4..9 {
            let g = Graph::from_edges((0..n).map(|i| (i, (i + 1) % n, 1.0))).unwrap();
            let j = min_cost_tjoin(&g, &ParitySet::new([2, 3]).unwrap()).unwrap();
            assert_eq!(j.cost, 1.0);
            assert_eq!(j.edges.iter().collect::<Vec<_>>(), vec![(2, 1)]);
        }
    }

    #[test]
    fn overlapping_paths_cancel() {
        // star with center 0: T = all four leaves; each pair path uses the
        // center, and no edge repeats with multiplicity 2 after reduction
        let g = Graph::from_edges([(0, 1, 1.0), (0, 2, 1.0), (0, 3, 1.0), (0, 4, 1.0)]).unwrap();
        let t = ParitySet::new([1, 2, 3, 4]).unwrap();
        let j = min_cost_tjoin(&g, &t).unwrap();
        assert_eq!(j.cost, 4.0);
        let kept = min_cost_tjoin_with(&g, &t, TJoinOptions { keep_multiplicities: true }).unwrap();
        assert_eq!(kept.cost, 4.0);
    }

    #[test]
    fn errors() {
        assert!(matches!(ParitySet::new([0, 1, 2]), Err(Error::OddTerminalSet(3))));
        let g = Graph::new(4, [(0, 1, 1.0), (2, 3, 1.0)]).unwrap();
        assert!(matches!(
            min_cost_tjoin(&g, &ParitySet::new([0, 2]).unwrap()),
            Err(Error::TerminalsDisconnected { a: 0, b: 2 })
        ));
        // terminals in one component of a disconnected graph are fine
        let j = min_cost_tjoin(&g, &ParitySet::new([2, 3]).unwrap()).unwrap();
        assert_eq!(j.cost, 1.0);
    }
}
