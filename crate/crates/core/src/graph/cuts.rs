use super::{FractionalSolution, Graph, Vertex};
use crate::error::{Error, Result};

pub const MAX_ENUMERATION_VERTICES: usize = 24;

/// Result of exhaustive cut enumeration.
#[derive(Clone, Debug, PartialEq)]
pub struct CutReport {
    /// Minimum value over all cuts.
    pub value: f64,
    /// One side of a minimizing cut; never contains vertex 0.
    pub side: Vec<Vertex>,
    /// `value >= threshold - 1e-9`.
    pub feasible: bool,
}

const RESYNC_PERIOD: usize = 4096;

fn cut_value(g: &Graph, weights: &[f64], inside: &[bool]) -> f64 {
    g.edges()
        .iter()
        .zip(weights)
        .filter(|(e, _)| inside[e.u] != inside[e.v])
        .map(|(_, w)| w)
        .sum()
}

/// Minimum cut of `g` under per-edge `weights` by visiting all
/// `2^(n-1) - 1` cuts in Gray-code order.
pub fn min_cut_by_enumeration(g: &Graph, weights: &[f64]) -> Result<(f64, Vec<Vertex>)> {
    let n = g.n();
    if n > MAX_ENUMERATION_VERTICES {
        return Err(Error::Capacity {
            what: "cut enumeration",
            n,
            max: MAX_ENUMERATION_VERTICES,
        });
    }
    if n < 2 {
        return Err(Error::InvalidParameter("a cut needs at least two vertices".into()));
    }
    let mut inside = vec![false; n];
    let mut value = 0.0;
    let mut best = f64::INFINITY;
    let mut best_mask = 0usize;
    for i in 1usize..(1 << (n - 1)) {
        let v = i.trailing_zeros() as usize + 1;
        let entering = !inside[v];
        inside[v] = entering;
        if i % RESYNC_PERIOD == 0 {
            value = cut_value(g, weights, &inside);
        } else {
            for &(w, id) in g.neighbors(v) {
                // v's membership just flipped
                if inside[w] == entering {
                    value -= weights[id];
                } else {
                    value += weights[id];
                }
            }
        }
        if value < best {
            best = value;
            best_mask = i ^ (i >> 1);
        }
    }
    let side: Vec<Vertex> = (1..n).filter(|&v| best_mask >> (v - 1) & 1 == 1).collect();
    let mut inside = vec![false; n];
    for &v in &side {
        inside[v] = true;
    }
    Ok((cut_value(g, weights, &inside), side))
}

/// Exhaustive check of the cut constraints `x(δ(U)) >= threshold`.
pub fn enumerate_cut_violations(
    g: &Graph,
    x: &FractionalSolution,
    threshold: f64,
) -> Result<CutReport> {
    let (value, side) = min_cut_by_enumeration(g, x.values())?;
    Ok(CutReport {
        value,
        side,
        feasible: value >= threshold - 1e-9,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::from_edges((0..4).map(|i| (i, (i + 1) % 4, 1.0))).unwrap()
    }

    #[test]
    fn unit_square_is_feasible() {
        let g = c4();
        let x = FractionalSolution::new(&g, vec![1.0; 4]).unwrap();
        let r = enumerate_cut_violations(&g, &x, 2.0).unwrap();
        assert_eq!(r.value, 2.0);
        assert!(r.feasible);
    }

    #[test]
    fn half_edge_violates() {
        let g = c4();
        let x = FractionalSolution::new(&g, vec![1.0, 0.5, 1.0, 1.0]).unwrap();
        let r = enumerate_cut_violations(&g, &x, 2.0).unwrap();
        assert_eq!(r.value, 1.5);
        assert!(!r.feasible);
        let inside: Vec<bool> = (0..4).map(|v| r.side.contains(&v)).collect();
        assert_eq!(cut_value(&g, x.values(), &inside), 1.5);
    }

    #[test]
    fn capacity_limit() {
        let g = Graph::from_edges((0..25).map(|i| (i, i + 1, 1.0))).unwrap();
        let x = FractionalSolution::new(&g, vec![1.0; g.m()]).unwrap();
        assert!(matches!(
            enumerate_cut_violations(&g, &x, 2.0),
            Err(Error::Capacity { .. })
        ));
    }
}
