use super::{EdgeMultiset, Graph};
use crate::error::{Error, Result};

pub(crate) struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

/// Minimum spanning tree by Kruskal; equal costs are taken in edge-id order.
pub fn mst(g: &Graph) -> Result<EdgeMultiset> {
    g.ensure_connected()?;
    let mut order: Vec<usize> = (0..g.m()).collect();
    // stable sort keeps id order among equal costs
    order.sort_by(|&a, &b| g.cost(a).total_cmp(&g.cost(b)));
    let mut uf = UnionFind::new(g.n());
    let mut tree = EdgeMultiset::new();
    for id in order {
        let e = g.edge(id);
        if uf.union(e.u, e.v) {
            tree.insert(id);
            if tree.total() + 1 == g.n() {
                break;
            }
        }
    }
    if tree.total() + 1 != g.n().max(1) {
        return Err(Error::CheckFailed("spanning tree is incomplete".into()));
    }
    Ok(tree)
}
