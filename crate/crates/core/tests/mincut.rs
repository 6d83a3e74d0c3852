mod common;

use common::{brute_min_cut, brute_strengths, suite};
use proptest::prelude::*;
use rand::Rng;
use tspkit::generate::seeded_rng;
use tspkit::mincut::{exact_strengths, global_min_cut, WeightedView};
use tspkit::Graph;

fn random_weights(g: &Graph, seed: u64) -> Vec<f64> {
    let mut rng = seeded_rng(seed);
    (0..g.m()).map(|_| f64::from(rng.gen_range(1u32..=8)) / 4.0).collect()
}

#[test]
fn stoer_wagner_matches_enumeration() {
    for (i, g) in suite(20, 50, (2, 12), 30, 9).into_iter().enumerate() {
        let w = random_weights(&g, i as u64);
        let cut = global_min_cut(&WeightedView::new(&g, w.clone()).unwrap()).unwrap();
        assert_eq!(cut.value, brute_min_cut(&g, &w));
    }
}

#[test]
fn strengths_match_induced_subgraph_oracle() {
    for (i, g) in suite(21, 30, (2, 9), 24, 9).into_iter().enumerate() {
        let w = random_weights(&g, 100 + i as u64);
        let s = exact_strengths(&WeightedView::new(&g, w.clone()).unwrap()).unwrap();
        let want = brute_strengths(&g, &w);
        for (id, &want) in want.iter().enumerate() {
            assert!((s.get(id) - want).abs() <= 1e-12 * want, "edge {id}: {} vs {want}", s.get(id));
        }
        let n = g.n() as f64;
        assert!(s.weighted_inverse_sum(&w) <= (n - 1.0) * (1.0 + 1e-12));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn inverse_sum_bound(seed in any::<u64>()) {
        let g = &suite(seed, 1, (2, 16), 50, 9)[0];
        let w = random_weights(g, seed);
        let s = exact_strengths(&WeightedView::new(g, w.clone()).unwrap()).unwrap();
        prop_assert!(s.weighted_inverse_sum(&w) <= (g.n() as f64 - 1.0) * (1.0 + 1e-12));
    }

    #[test]
    fn strengths_scale_exactly(seed in any::<u64>(), k in -8i32..8) {
        let g = &suite(seed, 1, (2, 12), 30, 9)[0];
        let w = random_weights(g, seed);
        let f = 2f64.powi(k);
        let a = exact_strengths(&WeightedView::new(g, w.clone()).unwrap()).unwrap();
        let b = exact_strengths(&WeightedView::new(g, w.iter().map(|x| x * f).collect()).unwrap()).unwrap();
        for id in 0..g.m() {
            prop_assert_eq!(b.get(id), f * a.get(id));
        }
    }

    #[test]
    fn strength_at_least_edge_weight_and_at_most_degree(seed in any::<u64>()) {
        let g = &suite(seed, 1, (2, 12), 30, 9)[0];
        let w = random_weights(g, seed);
        let wv = WeightedView::new(g, w.clone()).unwrap();
        let s = exact_strengths(&wv).unwrap();
        let lambda = global_min_cut(&wv).unwrap().value;
        for (id, e) in g.edges().iter().enumerate() {
            prop_assert!(s.get(id) >= lambda);
            prop_assert!(s.get(id) >= w[id] * (1.0 - 1e-12));
            let deg = |v: usize| g.neighbors(v).iter().map(|&(_, i)| w[i]).sum::<f64>();
            prop_assert!(s.get(id) <= deg(e.u).min(deg(e.v)) * (1.0 + 1e-12));
        }
    }
}
