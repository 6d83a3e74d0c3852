use super::{EdgeId, EdgeMultiset, Graph, Vertex};
use crate::error::{Error, Result};

/// A closed walk: `vertices` starts and ends at the same vertex and
/// `edges[i]` joins `vertices[i]` to `vertices[i + 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedWalk {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
}

impl ClosedWalk {
    /// Number of edges traversed.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn cost(&self, g: &Graph) -> f64 {
        self.edges.iter().map(|&id| g.cost(id)).sum()
    }

    pub fn as_multiset(&self) -> EdgeMultiset {
        self.edges.iter().copied().collect()
    }
}

/// Hierholzer's algorithm on the sub-multigraph `es` of `g`. Starts at the
/// smallest vertex with an incident edge; traversal order follows edge ids.
pub fn euler_tour(g: &Graph, es: &EdgeMultiset) -> Result<ClosedWalk> {
    let degrees = es.degrees(g);
    if let Some(v) = degrees.iter().position(|d| d % 2 == 1) {
        return Err(Error::OddDegree { vertex: v, degree: degrees[v] });
    }
    let Some(start) = degrees.iter().position(|&d| d > 0) else {
        return Ok(ClosedWalk { vertices: Vec::new(), edges: Vec::new() });
    };

    // one slot per copy of each edge
    let mut slot_edge = Vec::with_capacity(es.total());
    let mut adj: Vec<Vec<(Vertex, usize)>> = vec![Vec::new(); g.n()];
    for (id, k) in es.iter() {
        let e = g.edge(id);
        for _ in 0..k {
            let slot = slot_edge.len();
            slot_edge.push(id);
            adj[e.u].push((e.v, slot));
            adj[e.v].push((e.u, slot));
        }
    }

    let mut used = vec![false; slot_edge.len()];
    let mut next = vec![0usize; g.n()];
    let mut stack: Vec<(Vertex, Option<usize>)> = vec![(start, None)];
    let mut vertices = Vec::with_capacity(slot_edge.len() + 1);
    let mut edges = Vec::with_capacity(slot_edge.len());
    while let Some(&(v, _)) = stack.last() {
        while next[v] < adj[v].len() && used[adj[v][next[v]].1] {
            next[v] += 1;
        }
        if let Some(&(w, slot)) = adj[v].get(next[v]) {
            used[slot] = true;
            stack.push((w, Some(slot)));
        } else {
            let (v, slot) = stack.pop().expect("stack is nonempty");
            vertices.push(v);
            if let Some(slot) = slot {
                edges.push(slot_edge[slot]);
            }
        }
    }

    if edges.len() != slot_edge.len() {
        let vertex = (0..g.n())
            .find(|&v| adj[v].iter().any(|&(_, s)| !used[s]))
            .expect("an unused slot has an endpoint");
        return Err(Error::EulerDisconnected { start, vertex });
    }
    vertices.reverse();
    edges.reverse();
    Ok(ClosedWalk { vertices, edges })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_walk(g: &Graph, es: &EdgeMultiset, walk: &ClosedWalk) {
        assert_eq!(walk.vertices.len(), walk.edges.len() + 1);
        assert_eq!(walk.vertices.first(), walk.vertices.last());
        for (i, &id) in walk.edges.iter().enumerate() {
            let e = g.edge(id);
            let (a, b) = (walk.vertices[i], walk.vertices[i + 1]);
            assert!((e.u, e.v) == (a, b) || (e.v, e.u) == (a, b));
        }
        assert_eq!(&walk.as_multiset(), es);
    }

    #[test]
    fn triangle() {
        let g = Graph::from_edges([(0, 1, 1.0), (1, 2, 1.0), (2, 0, 1.0)]).unwrap();
        let es: EdgeMultiset = [0, 1, 2].into_iter().collect();
        let walk = euler_tour(&g, &es).unwrap();
        assert_eq!(walk.len(), 3);
        check_walk(&g, &es, &walk);
    }

    #[test]
    fn doubled_edge() {
        let g = Graph::from_edges([(0, 1, 3.0)]).unwrap();
        let mut es = EdgeMultiset::new();
        es.insert_n(0, 2);
        let walk = euler_tour(&g, &es).unwrap();
        assert_eq!(walk.vertices, vec![0, 1, 0]);
        assert_eq!(walk.cost(&g), 6.0);
    }

    #[test]
    fn cycle_path_plus_closing_edge() {
        let g = Graph::from_edges((0..5).map(|i| (i, (i + 1) % 5, 1.0))).unwrap();
        let es: EdgeMultiset = (0..5).collect();
        let walk = euler_tour(&g, &es).unwrap();
        // by hand: 0 -e0-> 1 -e1-> 2 -e2-> 3 -e3-> 4 -e4-> 0
        assert_eq!(walk.vertices, vec![0, 1, 2, 3, 4, 0]);
        assert_eq!(walk.edges, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn odd_degree_rejected() {
        let g = Graph::from_edges([(0, 1, 1.0), (1, 2, 1.0)]).unwrap();
        let es: EdgeMultiset = [0, 1].into_iter().collect();
        assert!(matches!(euler_tour(&g, &es), Err(Error::OddDegree { vertex: 0, degree: 1 })));
    }

    #[test]
    fn disconnected_support_rejected() {
        let g = Graph::from_edges([(0, 1, 1.0), (2, 3, 1.0)]).unwrap();
        let mut es = EdgeMultiset::new();
        es.insert_n(0, 2);
        es.insert_n(1, 2);
        assert!(matches!(
            euler_tour(&g, &es),
            Err(Error::EulerDisconnected { start: 0, vertex: 2 })
        ));
    }
}
