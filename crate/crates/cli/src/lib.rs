//! `tspkit` command line: solve, inspect individual stages, benchmark.
//!
//! Exit codes: 0 success, 1 infeasible input (disconnected graph, no
//! perfect matching, ...), 2 failed internal check, 64 usage or input
//! format error.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use tspkit::generate::{random_connected_graph, seeded_rng};
use tspkit::graph::{held_karp_opt, mst, MAX_HELD_KARP_VERTICES};
use tspkit::io::{parse_instance, Format};
use tspkit::lp::{solve_2ecss_lp, SolverParams};
use tspkit::pipeline::{run, Algorithm, PipelineConfig, DEFAULT_EPSILON, DEFAULT_SEED};
use tspkit::report::{f64_17, opt_f64_17, MultigraphEdge, TourReport};
use tspkit::sparsify::{sparsify_solution, SparsifyParams};
use tspkit::tjoin::{min_cost_tjoin_with, ParitySet, TJoinOptions};
use tspkit::{Error, Graph};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INFEASIBLE: i32 = 1;
pub const EXIT_CHECK: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(name = "tspkit", version, about = "Christofides-style metric TSP on sparse graph instances")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a tour and write its report.
    Solve(SolveArgs),
    /// Solve the 2-edge-connected cut LP and print its value and certificate.
    Lp(LpArgs),
    /// Sparsify the LP point and print the sampled solution.
    Sparsify(SparsifyArgs),
    /// Minimum-cost T-join for a terminal set.
    Tjoin(TjoinArgs),
    /// Run algorithms over many instances, one JSON line per run.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Edge,
    Matrix,
    Euc2d,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Edge => Format::Edge,
            FormatArg::Matrix => Format::Matrix,
            FormatArg::Euc2d => Format::Euc2d,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum AlgorithmArg {
    SparsifiedChristofides,
    ClassicChristofides,
    DoubleTree,
}

impl From<AlgorithmArg> for Algorithm {
    fn from(a: AlgorithmArg) -> Self {
        match a {
            AlgorithmArg::SparsifiedChristofides => Algorithm::SparsifiedChristofides,
            AlgorithmArg::ClassicChristofides => Algorithm::ClassicChristofides,
            AlgorithmArg::DoubleTree => Algorithm::DoubleTree,
        }
    }
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Instance file, `-` for stdin.
    #[arg(long)]
    input: PathBuf,
    /// Expected format; detected from the `p` header when omitted.
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
}

impl InputArgs {
    fn load(&self) -> Result<Graph, Error> {
        let text = if self.input.as_os_str() == "-" {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        } else {
            fs::read_to_string(&self.input)?
        };
        parse_instance(&text, self.format.map(Format::from))
    }
}

#[derive(Args, Debug)]
struct SeedArg {
    #[arg(long, env = "TSPKIT_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value = "sparsified-christofides")]
    algorithm: AlgorithmArg,
    #[arg(long, default_value_t = DEFAULT_EPSILON)]
    epsilon: f64,
    #[command(flatten)]
    seed: SeedArg,
    /// Oversampling constant of the sparsifier.
    #[arg(long, default_value_t = SparsifyParams::DEFAULT_D)]
    d: f64,
    /// Report path; stdout when omitted.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Check feasibility of the LP point before sampling.
    #[arg(long)]
    debug_verify: bool,
    /// Include the tour and the Euler walk in the report.
    #[arg(long)]
    emit_tour: bool,
    /// Include the Eulerian multigraph in the report.
    #[arg(long)]
    emit_multigraph: bool,
    /// Keep T-join edges that matched paths traverse twice.
    #[arg(long)]
    keep_multiplicities: bool,
    /// Report the Euler walk instead of shortcutting it.
    #[arg(long)]
    no_shortcut: bool,
}

#[derive(Args, Debug)]
struct LpArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, default_value_t = DEFAULT_EPSILON)]
    epsilon: f64,
    /// Iteration cap; the default is derived from n, m and epsilon.
    #[arg(long)]
    max_iterations: Option<usize>,
}

#[derive(Args, Debug)]
struct SparsifyArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, default_value_t = DEFAULT_EPSILON)]
    epsilon: f64,
    #[command(flatten)]
    seed: SeedArg,
    #[arg(long, default_value_t = SparsifyParams::DEFAULT_D)]
    d: f64,
    #[arg(long)]
    debug_verify: bool,
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct TjoinArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Comma-separated terminal set; the odd-degree vertices of the minimum
    /// spanning tree when omitted.
    #[arg(long, value_delimiter = ',')]
    terminals: Option<Vec<usize>>,
    #[arg(long)]
    keep_multiplicities: bool,
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct BenchArgs {
    /// Instance files; random instances are generated when none are given.
    #[arg(long = "input")]
    inputs: Vec<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Algorithms to run (repeatable); all of them by default.
    #[arg(long, value_enum)]
    algorithm: Vec<AlgorithmArg>,
    #[arg(long, default_value_t = 10)]
    instances: usize,
    #[arg(long, default_value_t = 12)]
    n: usize,
    #[arg(long, default_value_t = 24)]
    m: usize,
    #[arg(long, default_value_t = 100)]
    max_cost: u32,
    #[arg(long, default_value_t = DEFAULT_EPSILON)]
    epsilon: f64,
    #[command(flatten)]
    seed: SeedArg,
    #[arg(long)]
    emit_tour: bool,
    /// JSON-lines output path; stdout when omitted.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Worker threads; rayon's default when omitted.
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Serialize)]
struct LpSummary {
    #[serde(serialize_with = "f64_17")]
    lp_objective: f64,
    #[serde(serialize_with = "f64_17")]
    lp_lower_bound: f64,
    #[serde(serialize_with = "f64_17")]
    lp_gap: f64,
}

#[derive(Serialize)]
struct EdgeValue {
    id: usize,
    u: usize,
    v: usize,
    #[serde(serialize_with = "f64_17")]
    x: f64,
    #[serde(serialize_with = "f64_17")]
    y: f64,
}

#[derive(Serialize)]
struct SparsifyReport {
    seed: u64,
    #[serde(serialize_with = "f64_17")]
    epsilon: f64,
    #[serde(serialize_with = "f64_17")]
    d: f64,
    n: usize,
    m: usize,
    #[serde(serialize_with = "f64_17")]
    lp_objective: f64,
    #[serde(serialize_with = "f64_17")]
    lp_lower_bound: f64,
    #[serde(serialize_with = "f64_17")]
    sparsified_cost: f64,
    input_support_size: usize,
    support_size: usize,
    #[serde(serialize_with = "f64_17")]
    support_bound: f64,
    attempts: usize,
    single_shot_success: bool,
    #[serde(serialize_with = "f64_17")]
    min_cut: f64,
    edges: Vec<EdgeValue>,
}

#[derive(Serialize)]
struct JoinReport {
    terminals: Vec<usize>,
    #[serde(serialize_with = "f64_17")]
    cost: f64,
    edges: Vec<MultigraphEdge>,
}

#[derive(Serialize)]
struct BenchRecord {
    instance: usize,
    source: String,
    #[serde(serialize_with = "opt_f64_17")]
    held_karp_opt: Option<f64>,
    #[serde(serialize_with = "opt_f64_17")]
    ratio_to_opt: Option<f64>,
    #[serde(flatten)]
    report: TourReport,
}

#[derive(Serialize)]
struct BenchFailure {
    instance: usize,
    source: String,
    algorithm: String,
    error: String,
    exit_code: i32,
}

fn exit_code(e: &Error) -> i32 {
    if e.is_infeasible_input() {
        EXIT_INFEASIBLE
    } else if e.is_check_failure() {
        EXIT_CHECK
    } else {
        match e {
            Error::OddDegree { .. } | Error::EulerDisconnected { .. } | Error::MissingVertex(_) => EXIT_CHECK,
            _ => EXIT_USAGE,
        }
    }
}

/// Writes via a sibling temporary file and a rename, so readers never see a
/// partial report.
fn write_atomic(path: &Path, text: &str) -> io::Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(format!(".tmp{}", std::process::id()));
    let tmp = PathBuf::from(tmp);
    fs::write(&tmp, text)?;
    fs::rename(&tmp, path).inspect_err(|_| {
        let _ = fs::remove_file(&tmp);
    })
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), Error> {
    match path {
        Some(p) => write_atomic(p, text)?,
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
        }
    }
    Ok(())
}

fn json_line<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

fn solve(a: &SolveArgs) -> Result<i32, Error> {
    let g = a.input.load()?;
    let cfg = PipelineConfig {
        epsilon: a.epsilon,
        seed: a.seed.seed,
        d: a.d,
        debug_verify: a.debug_verify,
        keep_multiplicities: a.keep_multiplicities,
        shortcut: !a.no_shortcut,
    };
    let mut out = run(&g, a.algorithm.into(), &cfg)?;
    out.attach_artifacts(&g, a.emit_tour, a.emit_multigraph);
    emit(a.report.as_deref(), &json_line(&out.report))?;
    Ok(EXIT_OK)
}

fn lp(a: &LpArgs) -> Result<i32, Error> {
    let g = a.input.load()?;
    let params = SolverParams {
        max_iterations: a.max_iterations,
        ..SolverParams::new(a.epsilon)?
    };
    let r = solve_2ecss_lp(&g, &params)?;
    let summary = LpSummary {
        lp_objective: r.objective(),
        lp_lower_bound: r.lower_bound,
        lp_gap: r.gap,
    };
    emit(None, &json_line(&summary))?;
    Ok(EXIT_OK)
}

fn sparsify(a: &SparsifyArgs) -> Result<i32, Error> {
    let g = a.input.load()?;
    let lp = solve_2ecss_lp(&g, &SolverParams::new(a.epsilon)?)?;
    let params = SparsifyParams {
        d: a.d,
        debug_verify: a.debug_verify,
        ..SparsifyParams::new(a.epsilon, a.seed.seed)?
    };
    let out = sparsify_solution(&g, &lp.x, &params)?;
    let edges = lp
        .x
        .support()
        .into_iter()
        .map(|id| {
            let e = g.edge(id);
            EdgeValue { id, u: e.u, v: e.v, x: lp.x.value(id), y: out.y.value(id) }
        })
        .collect();
    let report = SparsifyReport {
        seed: a.seed.seed,
        epsilon: a.epsilon,
        d: a.d,
        n: g.n(),
        m: g.m(),
        lp_objective: lp.objective(),
        lp_lower_bound: lp.lower_bound,
        sparsified_cost: out.y.objective(),
        input_support_size: lp.x.support().len(),
        support_size: out.support_size,
        support_bound: out.support_bound,
        attempts: out.attempts,
        single_shot_success: out.single_shot_success,
        min_cut: out.min_cut,
        edges,
    };
    emit(a.report.as_deref(), &json_line(&report))?;
    Ok(EXIT_OK)
}

fn tjoin(a: &TjoinArgs) -> Result<i32, Error> {
    let g = a.input.load()?;
    let t = match &a.terminals {
        Some(vs) => ParitySet::new(vs.iter().copied())?,
        None => ParitySet::odd_vertices(&g, &mst(&g)?),
    };
    let opts = TJoinOptions { keep_multiplicities: a.keep_multiplicities };
    let j = min_cost_tjoin_with(&g, &t, opts)?;
    let report = JoinReport {
        terminals: t.iter().collect(),
        cost: j.cost,
        edges: MultigraphEdge::list(&g, &j.edges),
    };
    emit(a.report.as_deref(), &json_line(&report))?;
    Ok(EXIT_OK)
}

fn bench(a: &BenchArgs) -> Result<i32, Error> {
    let mut instances: Vec<(String, Graph)> = Vec::new();
    if a.inputs.is_empty() {
        for i in 0..a.instances {
            let mut rng = seeded_rng(a.seed.seed.wrapping_add(i as u64));
            instances.push(("random".into(), random_connected_graph(a.n, a.m, a.max_cost, &mut rng)?));
        }
    } else {
        for p in &a.inputs {
            let g = tspkit::io::read_instance(p, a.format.map(Format::from))?;
            instances.push((p.display().to_string(), g));
        }
    }
    let algorithms: Vec<Algorithm> = if a.algorithm.is_empty() {
        Algorithm::ALL.to_vec()
    } else {
        a.algorithm.iter().map(|&x| x.into()).collect()
    };
    let cfg = PipelineConfig { epsilon: a.epsilon, seed: a.seed.seed, ..Default::default() };
    SolverParams::new(a.epsilon)?;
    let (cfg, algorithms) = (&cfg, &algorithms);

    let work = || -> Vec<(String, i32)> {
        instances
            .par_iter()
            .enumerate()
            .flat_map_iter(|(i, (source, g))| {
                let opt = (g.n() <= MAX_HELD_KARP_VERTICES).then(|| held_karp_opt(g).ok()).flatten();
                algorithms.iter().map(move |&alg| {
                    let started = Instant::now();
                    match run(g, alg, cfg) {
                        Ok(mut out) => {
                            out.attach_artifacts(g, a.emit_tour, false);
                            out.report.stage_seconds.total = started.elapsed().as_secs_f64();
                            let record = BenchRecord {
                                instance: i,
                                source: source.clone(),
                                held_karp_opt: opt,
                                ratio_to_opt: opt.filter(|&o| o > 0.0).map(|o| out.tour.cost / o),
                                report: out.report,
                            };
                            (json_line(&record), EXIT_OK)
                        }
                        Err(e) => {
                            let code = exit_code(&e);
                            let failure = BenchFailure {
                                instance: i,
                                source: source.clone(),
                                algorithm: alg.to_string(),
                                error: e.to_string(),
                                exit_code: code,
                            };
                            (json_line(&failure), code)
                        }
                    }
                })
            })
            .collect()
    };
    let results = match a.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Error::InvalidParameter(e.to_string()))?
            .install(work),
        None => work(),
    };
    let text: String = results.iter().map(|(line, _)| line.as_str()).collect();
    emit(a.report.as_deref(), &text)?;
    Ok(results.iter().map(|&(_, c)| c).max().unwrap_or(EXIT_OK))
}

/// Parses `args` (program name first) and runs the command; returns the
/// process exit code.
pub fn run_cli<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let result = match &cli.command {
        Command::Solve(a) => solve(a),
        Command::Lp(a) => lp(a),
        Command::Sparsify(a) => sparsify(a),
        Command::Tjoin(a) => tjoin(a),
        Command::Bench(a) => bench(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("tspkit: error: {e}");
            exit_code(&e)
        }
    }
}
