mod common;

use common::{brute_tjoin, suite};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;
use tspkit::generate::seeded_rng;
use tspkit::graph::mst;
use tspkit::lp::{solve_2ecss_lp, SolverParams};
use tspkit::tjoin::{min_cost_tjoin, min_cost_tjoin_with, ParitySet, TJoinOptions};

fn random_terminals(n: usize, rng: &mut impl Rng) -> Vec<usize> {
    let mut vs: Vec<usize> = (0..n).collect();
    vs.shuffle(rng);
    let k = 2 * rng.gen_range(0..=n / 2);
    vs.truncate(k);
    vs
}

#[test]
fn matches_subset_enumeration() {
    let mut rng = seeded_rng(30);
    for g in suite(31, 50, (2, 9), 16, 9) {
        let t = random_terminals(g.n(), &mut rng);
        let j = min_cost_tjoin(&g, &ParitySet::new(t.iter().copied()).unwrap()).unwrap();
        assert_eq!(j.cost, brute_tjoin(&g, &t).unwrap());
        assert_eq!(j.edges.iter().map(|(_, k)| k).max().unwrap_or(1), 1);
    }
}

#[test]
fn half_of_a_feasible_point_dominates_every_join() {
    let mut rng = seeded_rng(32);
    for g in suite(33, 20, (3, 9), 18, 9) {
        let r = solve_2ecss_lp(&g, &SolverParams::new(0.2).unwrap()).unwrap();
        let (h, _) = g.edge_subgraph(&r.x.support());
        for _ in 0..5 {
            let t = ParitySet::new(random_terminals(g.n(), &mut rng)).unwrap();
            let j = min_cost_tjoin(&h, &t).unwrap();
            assert!(j.cost <= 0.5 * r.objective() * (1.0 + 1e-9));
        }
        let t = ParitySet::odd_vertices(&g, &mst(&g).unwrap());
        assert!(min_cost_tjoin(&h, &t).unwrap().cost <= 0.5 * r.objective() * (1.0 + 1e-9));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parity_and_multiplicity_options(seed in any::<u64>()) {
        let g = &suite(seed, 1, (2, 14), 30, 9)[0];
        let mut rng = seeded_rng(seed ^ 1);
        let t = ParitySet::new(random_terminals(g.n(), &mut rng)).unwrap();
        let reduced = min_cost_tjoin(g, &t).unwrap();
        let kept = min_cost_tjoin_with(g, &t, TJoinOptions { keep_multiplicities: true }).unwrap();
        prop_assert_eq!(ParitySet::odd_vertices(g, &reduced.edges), t.clone());
        prop_assert_eq!(ParitySet::odd_vertices(g, &kept.edges), t);
        prop_assert!(reduced.cost <= kept.cost);
        prop_assert_eq!(reduced.cost, reduced.edges.cost(g));
    }
}
