//! Exhaustive reference implementations. Each one shares no code with the
//! library routine it checks.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use tspkit::generate::{random_connected_graph, seeded_rng};
use tspkit::Graph;

/// `count` connected instances with `n` in `n_range`, `m ≤ m_max` and integer
/// costs in `1..=max_cost`, all derived from `seed`.
pub fn suite(seed: u64, count: usize, n_range: (usize, usize), m_max: usize, max_cost: u32) -> Vec<Graph> {
    let mut rng = seeded_rng(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(n_range.0..=n_range.1);
            let hi = m_max.min(n * (n - 1) / 2).max(n - 1);
            let m = rng.gen_range(n - 1..=hi);
            random_connected_graph(n, m, max_cost, &mut rng).unwrap()
        })
        .collect()
}

pub fn cycle(n: usize, cost: f64) -> Graph {
    Graph::from_edges((0..n).map(|i| (i, (i + 1) % n, cost))).unwrap()
}

pub fn complete(n: usize, cost: f64) -> Graph {
    Graph::from_edges((0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j, cost)))).unwrap()
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        v = parent[v];
    }
    v
}

/// Cheapest spanning tree over all `(n-1)`-edge subsets.
pub fn brute_mst_cost(g: &Graph) -> f64 {
    let (n, m) = (g.n(), g.m());
    assert!(m <= 20);
    let mut best = f64::INFINITY;
    for mask in 0u32..(1 << m) {
        if mask.count_ones() as usize != n.saturating_sub(1) {
            continue;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        let mut acyclic = true;
        let mut cost = 0.0;
        for id in (0..m).filter(|id| mask >> id & 1 == 1) {
            let e = g.edge(id);
            let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
            if a == b {
                acyclic = false;
                break;
            }
            parent[a] = b;
            cost += e.cost;
        }
        if acyclic {
            best = best.min(cost);
        }
    }
    best
}

pub fn bellman_ford(g: &Graph, s: usize) -> Vec<f64> {
    let mut d = vec![f64::INFINITY; g.n()];
    d[s] = 0.0;
    for _ in 0..g.n() {
        for e in g.edges() {
            if d[e.u] + e.cost < d[e.v] {
                d[e.v] = d[e.u] + e.cost;
            }
            if d[e.v] + e.cost < d[e.u] {
                d[e.u] = d[e.v] + e.cost;
            }
        }
    }
    d
}

pub fn floyd_warshall(g: &Graph) -> Vec<Vec<f64>> {
    let n = g.n();
    let mut d = vec![vec![f64::INFINITY; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0.0;
    }
    for e in g.edges() {
        d[e.u][e.v] = d[e.u][e.v].min(e.cost);
        d[e.v][e.u] = d[e.u][e.v];
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Optimal tour in the shortest-path metric by trying every permutation.
pub fn brute_tsp(g: &Graph) -> f64 {
    let n = g.n();
    assert!(n <= 9);
    if n <= 1 {
        return 0.0;
    }
    let d = floyd_warshall(g);
    let mut rest: Vec<usize> = (1..n).collect();
    let mut best = f64::INFINITY;
    permute(&mut rest, 0, &mut |p| {
        let mut c = d[0][p[0]] + d[p[p.len() - 1]][0];
        for w in p.windows(2) {
            c += d[w[0]][w[1]];
        }
        best = best.min(c);
    });
    best
}

fn permute(a: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == a.len() {
        f(a);
        return;
    }
    for i in k..a.len() {
        a.swap(k, i);
        permute(a, k + 1, f);
        a.swap(k, i);
    }
}

/// Minimum weighted cut of the subgraph induced by vertex mask `s`
/// (0 when that subgraph is disconnected).
fn induced_min_cut(g: &Graph, w: &[f64], s: u32) -> f64 {
    let low = s & s.wrapping_neg();
    let rest = s ^ low;
    let mut best = f64::INFINITY;
    // side = low ∪ (proper submask of rest)
    let mut sub = rest;
    loop {
        sub = sub.wrapping_sub(1) & rest;
        let side = low | sub;
        let mut value = 0.0;
        for (id, e) in g.edges().iter().enumerate() {
            let (iu, iv) = (s >> e.u & 1 == 1, s >> e.v & 1 == 1);
            if iu && iv && ((side >> e.u & 1) != (side >> e.v & 1)) {
                value += w[id];
            }
        }
        best = f64::min(best, value);
        if sub == 0 {
            break;
        }
    }
    best
}

/// Strength of every edge: the best min cut over vertex sets containing both
/// endpoints.
pub fn brute_strengths(g: &Graph, w: &[f64]) -> Vec<f64> {
    let n = g.n();
    assert!(n <= 12);
    let mut s = vec![0.0f64; g.m()];
    for mask in 1u32..(1 << n) {
        if mask.count_ones() < 2 {
            continue;
        }
        let lambda = induced_min_cut(g, w, mask);
        for (id, e) in g.edges().iter().enumerate() {
            if mask >> e.u & 1 == 1 && mask >> e.v & 1 == 1 {
                s[id] = s[id].max(lambda);
            }
        }
    }
    s
}

pub fn rational(v: f64) -> BigRational {
    BigRational::from_float(v).expect("finite")
}

/// Exact optimum of `min c·x` subject to `x(δ(S)) ≥ 2` for every cut and
/// `x ≥ 0`. Solves the dual packing LP `max 2·Σ y_S` subject to
/// `Σ_{S ∋ e} y_S ≤ c_e` with a rational tableau simplex under Bland's rule;
/// the slack basis is feasible because costs are nonnegative.
pub fn exact_lp_opt(g: &Graph) -> BigRational {
    let (n, m) = (g.n(), g.m());
    assert!((2..=12).contains(&n));
    let cuts: Vec<u32> = (1u32..(1 << (n - 1))).map(|s| s << 1).collect();
    let k = cuts.len();
    let cols = k + m;
    let zero = BigRational::zero();
    let mut rows: Vec<Vec<BigRational>> = (0..m)
        .map(|id| {
            let e = g.edge(id);
            let mut row = vec![zero.clone(); cols + 1];
            for (j, &s) in cuts.iter().enumerate() {
                if (s >> e.u & 1) != (s >> e.v & 1) {
                    row[j] = BigRational::one();
                }
            }
            row[k + id] = BigRational::one();
            row[cols] = rational(e.cost);
            row
        })
        .collect();
    let two = BigRational::from_integer(BigInt::from(2));
    let mut obj = vec![zero.clone(); cols + 1];
    for v in obj.iter_mut().take(k) {
        *v = two.clone();
    }
    let mut basis: Vec<usize> = (k..cols).collect();
    while let Some(c) = (0..cols).find(|&j| obj[j].is_positive()) {
        let mut pick: Option<(usize, BigRational)> = None;
        for (r, row) in rows.iter().enumerate() {
            if row[c].is_positive() {
                let ratio = &row[cols] / &row[c];
                let better = match &pick {
                    None => true,
                    Some((pr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*pr]),
                };
                if better {
                    pick = Some((r, ratio));
                }
            }
        }
        let (r, _) = pick.expect("the cut LP of a connected graph is bounded");
        let piv = rows[r][c].clone();
        for v in rows[r].iter_mut() {
            *v = &*v / &piv;
        }
        let prow = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, p) in row.iter_mut().zip(&prow) {
                    *v = &*v - &f * p;
                }
            }
        }
        let f = obj[c].clone();
        for (v, p) in obj.iter_mut().zip(&prow) {
            *v = &*v - &f * p;
        }
        basis[r] = c;
    }
    -obj[cols].clone()
}

pub fn to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap()
}

/// Minimum perfect matching cost over all pairings, `None` if none exists.
pub fn brute_matching(k: usize, cost: &dyn Fn(usize, usize) -> Option<f64>) -> Option<f64> {
    fn go(free: &mut Vec<usize>, cost: &dyn Fn(usize, usize) -> Option<f64>) -> Option<f64> {
        if free.is_empty() {
            return Some(0.0);
        }
        let a = free.remove(0);
        let mut best: Option<f64> = None;
        for i in 0..free.len() {
            let b = free.remove(i);
            if let Some(c) = cost(a, b) {
                if let Some(rest) = go(free, cost) {
                    let t = c + rest;
                    best = Some(best.map_or(t, |x: f64| x.min(t)));
                }
            }
            free.insert(i, b);
        }
        free.insert(0, a);
        best
    }
    let mut free: Vec<usize> = (0..k).collect();
    go(&mut free, cost)
}

/// Number of perfect matchings visited on `k` vertices of a complete graph.
pub fn pairing_count(k: usize) -> usize {
    (1..k).step_by(2).product()
}

/// Cheapest edge subset whose odd-degree vertices are exactly `t`.
pub fn brute_tjoin(g: &Graph, t: &[usize]) -> Option<f64> {
    let m = g.m();
    assert!(m <= 20);
    let mut want = vec![false; g.n()];
    for &v in t {
        want[v] = true;
    }
    let mut best: Option<f64> = None;
    for mask in 0u32..(1 << m) {
        let mut odd = vec![false; g.n()];
        let mut cost = 0.0;
        for id in (0..m).filter(|id| mask >> id & 1 == 1) {
            let e = g.edge(id);
            odd[e.u] ^= true;
            odd[e.v] ^= true;
            cost += e.cost;
        }
        if odd == want {
            best = Some(best.map_or(cost, |b: f64| b.min(cost)));
        }
    }
    best
}

/// Minimum weighted cut over all vertex bipartitions.
pub fn brute_min_cut(g: &Graph, w: &[f64]) -> f64 {
    let n = g.n();
    assert!((2..=16).contains(&n));
    induced_min_cut(g, w, (1u32 << n) - 1)
}
