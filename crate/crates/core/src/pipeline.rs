//! Tour construction: the sparsified Christofides pipeline and two
//! baselines (classic Christofides and double tree).
//!
//! Sparsified pipeline:
//!
//! 1. minimum spanning tree `S`, with `T` its odd-degree vertices;
//! 2. approximate 2ECSS LP point `x` with a certified lower bound;
//! 3. sparsified feasible point `y`;
//! 4. minimum T-join `J` inside `support(y)`;
//! 5. Euler tour of `S + J`, shortcut in the shortest-path metric.
//!
//! Each run checks the chain `mst ≤ lp objective`, `join ≤ ½·c(y)`,
//! `walk = mst + join`, `tour ≤ walk ≤ 1.5·(1+ε)·lp objective` and fails
//! with [`Error::CheckFailed`] if any link breaks.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::graph::{euler_tour, mst, shortest_paths, ClosedWalk, EdgeMultiset, Graph, Tour, Vertex};
use crate::lp::{solve_2ecss_lp, LpResult, SolverParams};
use crate::report::{MultigraphEdge, SparsifierStats, StageTimes, TourReport};
use crate::sparsify::{sparsify_solution, SparsifyOutcome, SparsifyParams};
use crate::tjoin::{min_cost_tjoin_with, ParitySet, TJoinOptions};
use crate::{eq_rel, le_rel};

pub const DEFAULT_SEED: u64 = 0x7e57_5eed;
pub const DEFAULT_EPSILON: f64 = 0.25;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    SparsifiedChristofides,
    ClassicChristofides,
    DoubleTree,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [
        Algorithm::SparsifiedChristofides,
        Algorithm::ClassicChristofides,
        Algorithm::DoubleTree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::SparsifiedChristofides => "sparsified-christofides",
            Algorithm::ClassicChristofides => "classic-christofides",
            Algorithm::DoubleTree => "double-tree",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown algorithm {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PipelineConfig {
    pub epsilon: f64,
    pub seed: u64,
    /// Oversampling constant of the sparsifier.
    pub d: f64,
    pub debug_verify: bool,
    pub keep_multiplicities: bool,
    /// When off, the reported tour is the Euler walk itself.
    pub shortcut: bool,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            epsilon: DEFAULT_EPSILON,
            seed: DEFAULT_SEED,
            d: SparsifyParams::DEFAULT_D,
            debug_verify: false,
            keep_multiplicities: false,
            shortcut: true,
        }
    }
}

#[derive(Clone, Debug)]
pub struct PipelineOutcome {
    pub tour: Tour,
    pub walk: ClosedWalk,
    /// `S + J`, the multigraph the walk traverses.
    pub multigraph: EdgeMultiset,
    pub report: TourReport,
    pub lp: Option<LpResult>,
    pub sparsified: Option<SparsifyOutcome>,
}

/// Keeps the first occurrence of each vertex; the cost is measured in the
/// shortest-path metric and includes the closing leg.
pub fn shortcut_tour(g: &Graph, walk: &[Vertex]) -> Result<Tour> {
    let mut seen = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    for &v in walk {
        if v >= g.n() {
            return Err(Error::InvalidParameter(format!("walk vertex {v} is out of range")));
        }
        if !seen[v] {
            seen[v] = true;
            order.push(v);
        }
    }
    if let Some(v) = seen.iter().position(|s| !s) {
        return Err(Error::MissingVertex(v));
    }
    let mut cost = 0.0;
    if order.len() > 1 {
        for (i, &v) in order.iter().enumerate() {
            let next = order[(i + 1) % order.len()];
            let d = shortest_paths(g, v).dist[next];
            if !d.is_finite() {
                return Err(Error::Disconnected {
                    first: v,
                    second: next,
                    components: g.components().iter().max().map_or(0, |c| c + 1),
                });
            }
            cost += d;
        }
    }
    Ok(Tour { vertices: order, cost })
}

struct Assembly {
    tour: Tour,
    walk: ClosedWalk,
    multigraph: EdgeMultiset,
    walk_cost: f64,
}

fn assemble(g: &Graph, tree: &EdgeMultiset, join: &EdgeMultiset, cfg: &PipelineConfig) -> Result<Assembly> {
    let mut multigraph = tree.clone();
    multigraph.extend(join);
    let walk = euler_tour(g, &multigraph)?;
    let walk_cost = walk.cost(g);
    let tour = if walk.is_empty() {
        // single vertex
        Tour { vertices: (0..g.n()).collect(), cost: 0.0 }
    } else if cfg.shortcut {
        shortcut_tour(g, &walk.vertices)?
    } else {
        Tour {
            vertices: walk.vertices[..walk.vertices.len() - 1].to_vec(),
            cost: walk_cost,
        }
    };
    Ok(Assembly { tour, walk, multigraph, walk_cost })
}

fn check(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::CheckFailed(what()))
    }
}

fn base_report(g: &Graph, algorithm: Algorithm, cfg: &PipelineConfig) -> TourReport {
    TourReport {
        algorithm: algorithm.name().to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        seed: cfg.seed,
        epsilon: None,
        n: g.n(),
        m: g.m(),
        lp_objective: None,
        lp_lower_bound: None,
        lp_gap: None,
        lp_iterations: None,
        lp_certified: None,
        sparsifier: None,
        mst_cost: 0.0,
        join_cost: 0.0,
        walk_cost: 0.0,
        shortcut_tour_cost: 0.0,
        ratio_to_lower_bound: None,
        stage_seconds: StageTimes::default(),
        tour: None,
        walk: None,
        multigraph: None,
    }
}

fn check_common(report: &TourReport) -> Result<()> {
    check(eq_rel(report.walk_cost, report.mst_cost + report.join_cost), || {
        format!(
            "walk cost {} differs from mst {} + join {}",
            report.walk_cost, report.mst_cost, report.join_cost
        )
    })?;
    check(le_rel(report.shortcut_tour_cost, report.walk_cost), || {
        format!(
            "shortcut tour {} exceeds walk {}",
            report.shortcut_tour_cost, report.walk_cost
        )
    })
}

/// The sparsified pipeline.
pub fn apx_christofides(g: &Graph, cfg: &PipelineConfig) -> Result<PipelineOutcome> {
    g.ensure_connected()?;
    let start = Instant::now();
    let mut times = StageTimes::default();

    let t = Instant::now();
    let tree = mst(g)?;
    let terminals = ParitySet::odd_vertices(g, &tree);
    times.mst = t.elapsed().as_secs_f64();

    let t = Instant::now();
    let lp = solve_2ecss_lp(g, &SolverParams::new(cfg.epsilon)?)?;
    times.lp = t.elapsed().as_secs_f64();

    let t = Instant::now();
    let sp = SparsifyParams {
        d: cfg.d,
        debug_verify: cfg.debug_verify,
        ..SparsifyParams::new(cfg.epsilon, cfg.seed)?
    };
    let sparse = sparsify_solution(g, &lp.x, &sp)?;
    times.sparsify = t.elapsed().as_secs_f64();

    let t = Instant::now();
    let (support_graph, back) = g.edge_subgraph(&sparse.y.support());
    let opts = TJoinOptions { keep_multiplicities: cfg.keep_multiplicities };
    let local = min_cost_tjoin_with(&support_graph, &terminals, opts)?;
    let mut join = EdgeMultiset::new();
    for (id, k) in local.edges.iter() {
        join.insert_n(back[id], k);
    }
    times.tjoin = t.elapsed().as_secs_f64();

    let t = Instant::now();
    let asm = assemble(g, &tree, &join, cfg)?;
    times.tour = t.elapsed().as_secs_f64();
    times.total = start.elapsed().as_secs_f64();

    let mut report = base_report(g, Algorithm::SparsifiedChristofides, cfg);
    report.epsilon = Some(cfg.epsilon);
    report.lp_objective = Some(lp.objective());
    report.lp_lower_bound = Some(lp.lower_bound);
    report.lp_gap = Some(lp.gap);
    report.lp_iterations = Some(lp.iterations);
    report.lp_certified = Some(lp.certified);
    report.sparsifier = Some(SparsifierStats {
        support_size: sparse.support_size,
        input_support_size: lp.x.support().len(),
        support_bound: sparse.support_bound,
        attempts: sparse.attempts,
        single_shot_success: sparse.single_shot_success,
        oversampling: sparse.oversampling,
        eps_prime: sparse.eps_prime,
        sparsified_cost: sparse.y.objective(),
    });
    report.mst_cost = tree.cost(g);
    report.join_cost = join.cost(g);
    report.walk_cost = asm.walk_cost;
    report.shortcut_tour_cost = asm.tour.cost;
    report.ratio_to_lower_bound = (lp.lower_bound > 0.0).then(|| asm.tour.cost / lp.lower_bound);
    report.stage_seconds = times;

    check(le_rel(report.mst_cost, lp.objective()), || {
        format!("mst cost {} exceeds LP objective {}", report.mst_cost, lp.objective())
    })?;
    check(le_rel(report.join_cost, 0.5 * sparse.y.objective()), || {
        format!(
            "join cost {} exceeds half the sparsified cost {}",
            report.join_cost,
            0.5 * sparse.y.objective()
        )
    })?;
    check_common(&report)?;
    check(le_rel(asm.tour.cost, 1.5 * (1.0 + cfg.epsilon) * lp.objective()), || {
        format!(
            "tour cost {} exceeds 1.5·(1+ε)·LP objective {}",
            asm.tour.cost,
            1.5 * (1.0 + cfg.epsilon) * lp.objective()
        )
    })?;
    if let Some(ratio) = report.ratio_to_lower_bound {
        check(ratio >= 1.0 - 1e-9, || format!("tour beats the LP lower bound (ratio {ratio})"))?;
    }

    Ok(PipelineOutcome {
        tour: asm.tour,
        walk: asm.walk,
        multigraph: asm.multigraph,
        report,
        lp: Some(lp),
        sparsified: Some(sparse),
    })
}

/// MST plus an exact T-join over the whole graph.
pub fn classic_christofides(g: &Graph, cfg: &PipelineConfig) -> Result<PipelineOutcome> {
    g.ensure_connected()?;
    let start = Instant::now();
    let mut times = StageTimes::default();
    let t = Instant::now();
    let tree = mst(g)?;
    let terminals = ParitySet::odd_vertices(g, &tree);
    times.mst = t.elapsed().as_secs_f64();

    let t = Instant::now();
    let opts = TJoinOptions { keep_multiplicities: cfg.keep_multiplicities };
    let join = min_cost_tjoin_with(g, &terminals, opts)?.edges;
    times.tjoin = t.elapsed().as_secs_f64();

    let t = Instant::now();
    let asm = assemble(g, &tree, &join, cfg)?;
    times.tour = t.elapsed().as_secs_f64();
    times.total = start.elapsed().as_secs_f64();

    let mut report = base_report(g, Algorithm::ClassicChristofides, cfg);
    report.mst_cost = tree.cost(g);
    report.join_cost = join.cost(g);
    report.walk_cost = asm.walk_cost;
    report.shortcut_tour_cost = asm.tour.cost;
    report.stage_seconds = times;
    check_common(&report)?;
    Ok(PipelineOutcome {
        tour: asm.tour,
        walk: asm.walk,
        multigraph: asm.multigraph,
        report,
        lp: None,
        sparsified: None,
    })
}

/// Doubled MST, Euler tour, shortcut. The second tree copy is reported as
/// the join.
pub fn double_tree(g: &Graph, cfg: &PipelineConfig) -> Result<PipelineOutcome> {
    g.ensure_connected()?;
    let start = Instant::now();
    let mut times = StageTimes::default();
    let t = Instant::now();
    let tree = mst(g)?;
    times.mst = t.elapsed().as_secs_f64();

    let t = Instant::now();
    let asm = assemble(g, &tree, &tree, cfg)?;
    times.tour = t.elapsed().as_secs_f64();
    times.total = start.elapsed().as_secs_f64();

    let mut report = base_report(g, Algorithm::DoubleTree, cfg);
    report.mst_cost = tree.cost(g);
    report.join_cost = report.mst_cost;
    report.walk_cost = asm.walk_cost;
    report.shortcut_tour_cost = asm.tour.cost;
    report.stage_seconds = times;
    check_common(&report)?;
    Ok(PipelineOutcome {
        tour: asm.tour,
        walk: asm.walk,
        multigraph: asm.multigraph,
        report,
        lp: None,
        sparsified: None,
    })
}

pub fn run(g: &Graph, algorithm: Algorithm, cfg: &PipelineConfig) -> Result<PipelineOutcome> {
    match algorithm {
        Algorithm::SparsifiedChristofides => apx_christofides(g, cfg),
        Algorithm::ClassicChristofides => classic_christofides(g, cfg),
        Algorithm::DoubleTree => double_tree(g, cfg),
    }
}

impl PipelineOutcome {
    /// Adds the tour, walk and multigraph to the report.
    pub fn attach_artifacts(&mut self, g: &Graph, tour: bool, multigraph: bool) {
        if tour {
            self.report.tour = Some(self.tour.vertices.clone());
            self.report.walk = Some(self.walk.vertices.clone());
        }
        if multigraph {
            self.report.multigraph = Some(MultigraphEdge::list(g, &self.multigraph));
        }
    }
}
