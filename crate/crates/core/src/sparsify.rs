//! Cost-preserving cut sparsification of a feasible 2ECSS point.
//!
//! Each edge is kept independently with probability
//! `r_e = max(p_e, q_e)` at value `x_e / r_e`, where
//!
//! ```text
//!     p_e = min(1, Δ·x_e / (ε'²·s_e))            (cut preservation)
//!     q_e = min(1, Δ·c_e·x_e / (ε'²·Σ c·x))      (cost concentration)
//! ```
//!
//! with `s_e` the strength of `e` in `(G, x)` and `Δ = d·ln n`. The sample
//! is scaled by `1 + ε'`, where `(1 + ε')² = 1 + ε`. Every output passes
//! posterior checks of support, cut feasibility, cost and size; a failing
//! sample is redrawn with a fresh stream.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{min_cut_by_enumeration, EdgeId, FractionalSolution, Graph};
use crate::mincut::{exact_strengths, global_min_cut, StrengthMap, WeightedView};

/// Vertex count up to which posterior cut checks enumerate all cuts.
pub const ENUMERATION_CHECK_MAX_N: usize = 14;

#[derive(Clone, Debug, PartialEq)]
pub struct SparsifyParams {
    pub epsilon: f64,
    /// Oversampling constant `d` of `Δ = d·ln n`.
    pub d: f64,
    pub seed: u64,
    /// Verify that the input point is feasible before sampling.
    pub debug_verify: bool,
    pub max_attempts: usize,
}

impl SparsifyParams {
    pub const DEFAULT_D: f64 = 8.0;

    pub fn new(epsilon: f64, seed: u64) -> Result<Self> {
        let p = SparsifyParams {
            epsilon,
            d: Self::DEFAULT_D,
            seed,
            debug_verify: false,
            max_attempts: 3,
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
        if !(self.d >= 1.0 && self.d.is_finite()) {
            return Err(Error::InvalidParameter(format!("d must be at least 1, got {}", self.d)));
        }
        if self.max_attempts == 0 {
            return Err(Error::InvalidParameter("max_attempts must be positive".into()));
        }
        Ok(())
    }

    /// `ε'` with `(1 + ε')² = 1 + ε`.
    pub fn eps_prime(&self) -> f64 {
        (1.0 + self.epsilon).sqrt() - 1.0
    }

    /// `Δ = d·ln n`.
    pub fn oversampling(&self, n: usize) -> f64 {
        self.d * (n.max(2) as f64).ln()
    }

    /// Contractual support bound `4·(n·Δ/ε'² + Δ/ε'²)`.
    pub fn support_bound(&self, n: usize) -> f64 {
        let ratio = self.oversampling(n) / self.eps_prime().powi(2);
        4.0 * (n as f64 * ratio + ratio)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SampleProbabilities {
    pub p: Vec<f64>,
    pub q: Vec<f64>,
    pub r: Vec<f64>,
}

impl SampleProbabilities {
    /// Costs enter only through the ratios `c_e / Σ c·x`.
    pub fn compute(
        g: &Graph,
        x: &FractionalSolution,
        strengths: &StrengthMap,
        oversampling: f64,
        eps_prime: f64,
    ) -> Self {
        let scale = oversampling / (eps_prime * eps_prime);
        let c_ref = g.edges().iter().map(|e| e.cost).fold(0.0, f64::max);
        let norm_cost = |id: EdgeId| if c_ref > 0.0 { g.cost(id) / c_ref } else { 0.0 };
        let total: f64 = (0..g.m()).map(|id| norm_cost(id) * x.value(id)).sum();
        let mut p = Vec::with_capacity(g.m());
        let mut q = Vec::with_capacity(g.m());
        for id in 0..g.m() {
            let xe = x.value(id);
            let pe = if xe > 0.0 {
                (scale * xe / strengths.get(id)).min(1.0)
            } else {
                0.0
            };
            let qe = if xe > 0.0 && total > 0.0 {
                (scale * norm_cost(id) * xe / total).min(1.0)
            } else {
                0.0
            };
            p.push(pe);
            q.push(qe);
        }
        let r = p.iter().zip(&q).map(|(a, b)| a.max(*b)).collect();
        SampleProbabilities { p, q, r }
    }
}

/// Uniform draw in `[0, 1)` for one edge in one attempt. ChaCha8 is counter
/// based, so each `(seed, attempt, edge)` owns a fixed block of the stream
/// regardless of evaluation order.
fn uniform(seed: u64, attempt: usize, id: EdgeId) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(attempt as u64);
    rng.set_word_pos(2 * id as u128);
    rng.gen::<f64>()
}

/// One importance sample `x'`: edge `e` is kept with probability `r_e` at
/// value `x_e / r_e`. Not scaled.
pub fn draw_sample(x: &FractionalSolution, probs: &SampleProbabilities, seed: u64, attempt: usize) -> Vec<f64> {
    (0..x.values().len())
        .map(|id| {
            let r = probs.r[id];
            if r >= 1.0 {
                x.value(id)
            } else if r > 0.0 && uniform(seed, attempt, id) < r {
                x.value(id) / r
            } else {
                0.0
            }
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct SparsifyOutcome {
    pub y: FractionalSolution,
    pub probabilities: SampleProbabilities,
    pub strengths: StrengthMap,
    pub attempts: usize,
    /// Whether the first draw passed every check.
    pub single_shot_success: bool,
    pub support_size: usize,
    pub support_bound: f64,
    pub oversampling: f64,
    pub eps_prime: f64,
    pub min_cut: f64,
}

/// Minimum cut of `(g, w)`: exhaustive for small graphs, Stoer–Wagner above.
fn posterior_min_cut(g: &Graph, w: &[f64]) -> Result<f64> {
    if g.n() < 2 {
        return Ok(f64::INFINITY);
    }
    if g.n() <= ENUMERATION_CHECK_MAX_N {
        Ok(min_cut_by_enumeration(g, w)?.0)
    } else {
        Ok(global_min_cut(&WeightedView::new(g, w.to_vec())?)?.value)
    }
}

pub fn sparsify_solution(g: &Graph, x: &FractionalSolution, params: &SparsifyParams) -> Result<SparsifyOutcome> {
    params.validate()?;
    g.ensure_connected()?;
    if x.values().len() != g.m() {
        return Err(Error::InvalidParameter("solution does not match the graph".into()));
    }
    let n = g.n();
    if params.debug_verify && n >= 2 {
        let value = posterior_min_cut(g, x.values())?;
        if value < 2.0 - 1e-9 {
            return Err(Error::InfeasiblePoint { value, threshold: 2.0 });
        }
    }
    let eps_prime = params.eps_prime();
    let oversampling = params.oversampling(n);
    let support_bound = params.support_bound(n);
    let strengths = exact_strengths(&WeightedView::new(g, x.values().to_vec())?)?;
    let probabilities = SampleProbabilities::compute(g, x, &strengths, oversampling, eps_prime);
    let cost_cap = (1.0 + params.epsilon) * x.objective();

    let mut failures = Vec::new();
    for attempt in 0..params.max_attempts {
        let sample = draw_sample(x, &probabilities, params.seed, attempt);
        let values: Vec<f64> = sample.iter().map(|v| (1.0 + eps_prime) * v).collect();
        let y = FractionalSolution::new(g, values)?;
        let support = y.support();
        let mut problems = Vec::new();
        if let Some(&id) = support.iter().find(|&&id| x.value(id) <= 0.0) {
            problems.push(format!("edge {id} outside the input support"));
        }
        if support.len() as f64 > support_bound {
            problems.push(format!("support {} exceeds {support_bound:.1}", support.len()));
        }
        if y.objective() > cost_cap {
            problems.push(format!("cost {} exceeds {cost_cap}", y.objective()));
        }
        let min_cut = posterior_min_cut(g, y.values())?;
        if min_cut < 2.0 - 1e-9 {
            problems.push(format!("cut of value {min_cut}"));
        }
        if problems.is_empty() {
            return Ok(SparsifyOutcome {
                support_size: support.len(),
                y,
                probabilities,
                strengths,
                attempts: attempt + 1,
                single_shot_success: attempt == 0,
                support_bound,
                oversampling,
                eps_prime,
                min_cut,
            });
        }
        failures.push(format!("attempt {}: {}", attempt + 1, problems.join(", ")));
    }
    Err(Error::SamplingFailed {
        attempts: params.max_attempts,
        diagnostics: failures.join("; "),
    })
}
