//! Approximate solver for the 2-edge-connected spanning subgraph LP
//!
//! ```text
//!     min  Σ_e c_e x_e   s.t.  x(δ(U)) >= 2  for all ∅ ≠ U ⊊ V,  x >= 0
//! ```
//!
//! with a certified lower bound. The dual packs cuts into the edge costs:
//! `max Σ_S 2 y_S` subject to `Σ_{S : e ∈ δ(S)} y_S <= c_e`. A
//! Garg–Könemann multiplicative-weights loop packs minimum cuts under edge
//! lengths `ℓ`; each length vector also yields the feasible primal point
//! `x = 2ℓ / mincut_ℓ(G)`. The loop stops as soon as the best primal point is
//! within `1 + ε` of the packing rescaled to feasibility, so optimality is
//! checked rather than assumed.

use crate::error::{Error, Result};
use crate::graph::{FractionalSolution, Graph, UnionFind};
use crate::mincut::{global_min_cut, stoer_wagner, WeightedView};

#[derive(Clone, Debug, PartialEq)]
pub struct SolverParams {
    pub epsilon: f64,
    /// Defaults to `50·m·⌈log₂ n⌉ / ε²`.
    pub max_iterations: Option<usize>,
    /// Initial length scale δ0; defaults to `(1+ε')·((1+ε')·n)^(−1/ε')`.
    pub init_length: Option<f64>,
}

impl SolverParams {
    pub fn new(epsilon: f64) -> Result<Self> {
        let p = SolverParams {
            epsilon,
            max_iterations: None,
            init_length: None,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.epsilon > 0.0 && self.epsilon < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "epsilon must lie in (0, 1), got {}",
                self.epsilon
            )));
        }
        if let Some(d) = self.init_length {
            if !(d > 0.0 && d.is_finite()) {
                return Err(Error::InvalidParameter(format!("init_length must be positive, got {d}")));
            }
        }
        Ok(())
    }

    /// Step size of the length updates.
    pub fn inner_epsilon(&self) -> f64 {
        self.epsilon / 3.0
    }

    pub fn init_length_for(&self, n: usize) -> f64 {
        self.init_length.unwrap_or_else(|| {
            let e = self.inner_epsilon();
            (1.0 + e) * ((1.0 + e) * n as f64).powf(-1.0 / e)
        })
    }

    pub fn max_iterations_for(&self, n: usize, m: usize) -> usize {
        self.max_iterations.unwrap_or_else(|| {
            let log_n = (n.max(2) as f64).log2().ceil();
            (50.0 * m as f64 * log_n / (self.epsilon * self.epsilon)).ceil() as usize
        })
    }
}

#[derive(Clone, Debug)]
pub struct LpResult {
    /// Feasible point; every cut carries at least 2.
    pub x: FractionalSolution,
    /// Certified lower bound on the LP optimum.
    pub lower_bound: f64,
    /// `objective / lower_bound − 1`; infinite when the bound is 0 and the
    /// objective is not.
    pub gap: f64,
    pub iterations: usize,
    /// Whether `gap <= epsilon` was reached before the iteration cap.
    pub certified: bool,
}

impl LpResult {
    pub fn objective(&self) -> f64 {
        self.x.objective()
    }
}

/// A fractional packing of cuts: `value = Σ_S 2 y_S` and, per edge, the load
/// `Σ_{S : e ∈ δ(S)} y_S`.
#[derive(Clone, Debug, PartialEq)]
pub struct CutPacking {
    pub value: f64,
    pub load: Vec<f64>,
}

impl CutPacking {
    pub fn empty(m: usize) -> Self {
        CutPacking {
            value: 0.0,
            load: vec![0.0; m],
        }
    }
}

fn scaled_packing_value(costs: &[f64], packing: &CutPacking) -> f64 {
    let mut congestion = 0.0f64;
    for (&c, &load) in costs.iter().zip(&packing.load) {
        if load > 0.0 {
            if c <= 0.0 {
                return 0.0;
            }
            congestion = congestion.max(load / c);
        }
    }
    if congestion == 0.0 {
        0.0
    } else {
        packing.value / congestion
    }
}

/// Lower bound on the LP optimum from any cut packing: dividing the packing
/// by its worst edge congestion makes it dual feasible, so weak duality
/// applies whether or not the solver converged.
pub fn certify_lower_bound(g: &Graph, packing: &CutPacking) -> f64 {
    let costs: Vec<f64> = g.edges().iter().map(|e| e.cost).collect();
    scaled_packing_value(&costs, packing)
}

const RESCALE_ABOVE: f64 = 1e200;
// exact power of two, so rescaling does not perturb ratios
const RESCALE_BY: f64 = 1.0 / (1u128 << 120) as f64 / (1u128 << 120) as f64;

/// Solves the LP to within `1 + ε` with a certificate, or reports the gap
/// reached when the iteration cap is hit.
pub fn solve_2ecss_lp(g: &Graph, params: &SolverParams) -> Result<LpResult> {
    params.validate()?;
    g.ensure_connected()?;
    let n = g.n();
    let m = g.m();

    // zero-cost edges take value 2 outright; the rest is solved on the
    // graph with them contracted
    let mut uf = UnionFind::new(n);
    for e in g.edges() {
        if e.cost == 0.0 {
            uf.union(e.u, e.v);
        }
    }
    let mut comp = vec![usize::MAX; n];
    let mut k = 0;
    for v in 0..n {
        let r = uf.find(v);
        if comp[r] == usize::MAX {
            comp[r] = k;
            k += 1;
        }
        comp[v] = comp[r];
    }
    let mut values = vec![0.0; m];
    // contracted edges: (original id, a, b)
    let mut reduced = Vec::new();
    for (id, e) in g.edges().iter().enumerate() {
        if e.cost == 0.0 {
            values[id] = 2.0;
        } else if comp[e.u] != comp[e.v] {
            reduced.push((id, comp[e.u], comp[e.v]));
        }
    }

    if k <= 1 {
        let x = FractionalSolution::new(g, values)?;
        return Ok(LpResult {
            x,
            lower_bound: 0.0,
            gap: 0.0,
            iterations: 0,
            certified: true,
        });
    }

    let c_ref = reduced.iter().map(|&(id, _, _)| g.cost(id)).fold(0.0, f64::max);
    let cost: Vec<f64> = reduced.iter().map(|&(id, _, _)| g.cost(id) / c_ref).collect();
    let eps = params.epsilon;
    let step = params.inner_epsilon();
    let cap = params.max_iterations_for(n, m);

    let delta0 = params.init_length_for(k);
    let mut length: Vec<f64> = cost.iter().map(|c| delta0 / c).collect();
    let mut packing = CutPacking::empty(reduced.len());
    let mut congestion = 0.0f64;
    let mut lower = 0.0;
    let mut best_ratio = f64::INFINITY;
    let mut best_point = Vec::new();
    let mut iterations = 0;
    let mut certified = false;
    let mut w = vec![vec![0.0; k]; k];

    loop {
        for row in w.iter_mut() {
            row.iter_mut().for_each(|x| *x = 0.0);
        }
        for (&(_, a, b), &l) in reduced.iter().zip(&length) {
            w[a][b] += l;
            w[b][a] += l;
        }
        let (alpha, side) = stoer_wagner(w.clone());
        let volume: f64 = cost.iter().zip(&length).map(|(c, l)| c * l).sum();
        let ratio = 2.0 * volume / alpha;
        if ratio < best_ratio {
            best_ratio = ratio;
            best_point = length.iter().map(|l| 2.0 * l / alpha).collect();
        }
        if iterations >= cap {
            break;
        }

        let mut inside = vec![false; k];
        for &v in &side {
            inside[v] = true;
        }
        let crossing: Vec<usize> = (0..reduced.len())
            .filter(|&i| inside[reduced[i].1] != inside[reduced[i].2])
            .collect();
        let bottleneck = crossing.iter().map(|&i| cost[i]).fold(f64::INFINITY, f64::min);
        packing.value += 2.0 * bottleneck;
        for &i in &crossing {
            packing.load[i] += bottleneck;
            congestion = congestion.max(packing.load[i] / cost[i]);
            length[i] *= 1.0 + step * bottleneck / cost[i];
        }
        iterations += 1;
        lower = packing.value / congestion;
        if best_ratio <= (1.0 + eps) * lower {
            certified = true;
            break;
        }
        if length.iter().any(|&l| l > RESCALE_ABOVE) {
            length.iter_mut().for_each(|l| *l *= RESCALE_BY);
        }
    }

    for (&(id, _, _), &x) in reduced.iter().zip(&best_point) {
        values[id] = x;
    }
    let x = FractionalSolution::new(g, values)?;
    let min_cut = global_min_cut(&WeightedView::new(g, x.values().to_vec())?)?;
    if min_cut.value < 2.0 * (1.0 - 1e-9) {
        return Err(Error::CheckFailed(format!(
            "LP point has a cut of value {} < 2",
            min_cut.value
        )));
    }
    debug_assert!(
        (scaled_packing_value(&cost, &packing) - lower).abs() <= 1e-9 * lower.max(1e-300)
    );
    let lower_bound = lower * c_ref;
    let objective = x.objective();
    let gap = if lower_bound > 0.0 {
        (objective / lower_bound - 1.0).max(0.0)
    } else if objective > 0.0 {
        f64::INFINITY
    } else {
        0.0
    };
    Ok(LpResult {
        x,
        lower_bound,
        gap,
        iterations,
        certified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges((0..n).map(|i| (i, (i + 1) % n, 1.0))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j, 1.0));
            }
        }
        Graph::from_edges(edges).unwrap()
    }

    #[test]
    fn unit_cycles_are_forced() {
        let eps = 0.1;
        for n in 3..10 {
            let r = solve_2ecss_lp(&cycle(n), &SolverParams::new(eps).unwrap()).unwrap();
            let nf = n as f64;
            assert!(r.certified);
            assert!(r.objective() >= nf - 1e-9 && r.objective() <= (1.0 + eps) * nf + 1e-9);
            assert!(r.lower_bound >= nf / (1.0 + eps) - 1e-9 && r.lower_bound <= nf + 1e-9);
        }
    }

    #[test]
    fn parallel_pair_prefers_cheap_edge() {
        let g = Graph::from_edges([(0, 1, 1.0), (0, 1, 5.0)]).unwrap();
        let r = solve_2ecss_lp(&g, &SolverParams::new(0.1).unwrap()).unwrap();
        assert!(r.objective() >= 2.0 - 1e-9 && r.objective() <= 2.2 + 1e-9);
    }

    #[test]
    fn unit_k4() {
        let r = solve_2ecss_lp(&complete(4), &SolverParams::new(0.1).unwrap()).unwrap();
        assert!(r.objective() >= 4.0 - 1e-9 && r.objective() <= 4.4 + 1e-9);
    }

    #[test]
    fn zero_iterations_give_vacuous_bound() {
        let p = SolverParams {
            max_iterations: Some(0),
            ..SolverParams::new(0.25).unwrap()
        };
        assert_eq!(certify_lower_bound(&cycle(5), &CutPacking::empty(5)), 0.0);
        let r = solve_2ecss_lp(&cycle(5), &p).unwrap();
        assert_eq!(r.lower_bound, 0.0);
        assert!(!r.certified);
        assert!(r.gap.is_infinite());
        assert!((r.objective() - 5.0).abs() < 1e-9);
    }

    #[test]
    fn converged_cycle_bound() {
        let eps = 0.25;
        let r = solve_2ecss_lp(&cycle(5), &SolverParams::new(eps).unwrap()).unwrap();
        assert!(r.lower_bound >= 5.0 / (1.0 + eps) - 1e-9);
        assert!(r.gap <= eps);
    }

    #[test]
    fn zero_cost_edges_are_fixed_at_two() {
        let g = Graph::from_edges([(0, 1, 0.0), (1, 2, 1.0), (2, 0, 1.0)]).unwrap();
        let r = solve_2ecss_lp(&g, &SolverParams::new(0.1).unwrap()).unwrap();
        assert_eq!(r.x.value(0), 2.0);
        // contracted graph is two vertices joined by two unit edges
        assert!(r.objective() >= 2.0 - 1e-9 && r.objective() <= 2.2 + 1e-9);

        let g = Graph::from_edges([(0, 1, 0.0), (1, 2, 0.0)]).unwrap();
        let r = solve_2ecss_lp(&g, &SolverParams::new(0.1).unwrap()).unwrap();
        assert_eq!(r.objective(), 0.0);
        assert_eq!(r.lower_bound, 0.0);
    }

    #[test]
    fn rejects_bad_epsilon_and_disconnected() {
        assert!(SolverParams::new(0.0).is_err());
        assert!(SolverParams::new(1.0).is_err());
        let g = Graph::new(3, [(0, 1, 1.0)]).unwrap();
        assert!(matches!(
            solve_2ecss_lp(&g, &SolverParams::new(0.5).unwrap()),
            Err(Error::Disconnected { .. })
        ));
    }

    #[test]
    fn packing_rescaled_by_congestion() {
        let g = Graph::from_edges([(0, 1, 1.0), (1, 2, 2.0), (2, 0, 4.0)]).unwrap();
        // y_{0} = 1 loads edges 0 and 2 with 1 each
        let p = CutPacking {
            value: 2.0,
            load: vec![1.0, 0.0, 1.0],
        };
        assert_eq!(certify_lower_bound(&g, &p), 2.0);
        let p = CutPacking {
            value: 4.0,
            load: vec![2.0, 0.0, 2.0],
        };
        assert_eq!(certify_lower_bound(&g, &p), 2.0);
    }
}
