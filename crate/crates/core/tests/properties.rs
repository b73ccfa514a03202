use proptest::prelude::*;

use flatcover::hypergraph::{Hypergraph, VertexSet};
use flatcover::kernel::{kernelize, lift_cover, KernelOptions};
use flatcover::oracle::{brute_force_min_cover, greedy_cover};
use flatcover::solver::{solve, SolveOptions};
use flatcover::structure::{find_ladder, find_semi_ladder, intersection_closure, is_flat, minimal_flat_d};

fn from_masks(n: usize, masks: &[u32]) -> Hypergraph {
    let edges = masks.iter().map(|&mask| (1..=n as u32).filter(|v| mask >> (v - 1) & 1 == 1).collect()).collect();
    Hypergraph::new(n, edges).unwrap()
}

fn hypergraph() -> impl Strategy<Value = Hypergraph> {
    (1usize..=6).prop_flat_map(|n| prop::collection::vec(0u32..(1 << n), 0..7).prop_map(move |m| from_masks(n, &m)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn closure_is_closed_and_chains_are_consistent(h in hypergraph()) {
        let c = intersection_closure(&h).unwrap();
        let sets = &c.closure;
        for e in h.edges() {
            prop_assert!(c.index_of(e).is_some());
        }
        prop_assert_eq!(c.index_of(&VertexSet::full(h.n())), Some(c.full_index()));
        for a in sets.edges() {
            for b in sets.edges() {
                prop_assert!(c.index_of(&a.intersection(b)).is_some());
            }
        }
        // A strict superset sits strictly higher in the chain order.
        for a in sets.edges() {
            for b in sets.edges() {
                if a.is_proper_subset(b) {
                    prop_assert!(c.chain_length(a).unwrap() < c.chain_length(b).unwrap());
                }
            }
        }
        let chain = c.longest_chain();
        prop_assert_eq!(chain.len(), c.longest + 1);
        prop_assert!(chain.windows(2).all(|w| w[0].is_proper_subset(&w[1])));
    }

    #[test]
    fn witnesses_verify_and_flatness_is_monotone(h in hypergraph(), d in 1usize..4) {
        if let Some(w) = find_semi_ladder(&h, d) {
            prop_assert!(w.verify());
            prop_assert_eq!(w.order, d);
        } else {
            prop_assert!(find_semi_ladder(&h, d + 1).is_none());
        }
        let c = intersection_closure(&h).unwrap();
        if let Some(w) = find_ladder(&c.closure, d) {
            prop_assert!(w.verify());
        }
        let flat = is_flat(&h, d).flat;
        prop_assert_eq!(flat, c.longest <= d + 1);
        prop_assert!(is_flat(&h, minimal_flat_d(c.longest)).flat);
    }

    #[test]
    fn solver_sound_and_complete(h in hypergraph(), k in 0usize..4) {
        let best = brute_force_min_cover(&h).unwrap();
        let got = solve(&h, k, &SolveOptions::default()).unwrap();
        match (&got.cover, &best) {
            (Some(c), _) => {
                prop_assert!(c.len() <= k);
                prop_assert!(h.verify_cover(c).unwrap());
            }
            (None, Some(b)) => prop_assert!(b.len() > k),
            (None, None) => {}
        }
        if let (Some(b), Some(g)) = (&best, greedy_cover(&h).ok()) {
            prop_assert!(h.verify_cover(&g).unwrap());
            prop_assert!(g.len() >= b.len());
        }
    }

    #[test]
    fn kernel_replays_and_lifts(h in hypergraph(), k in 1usize..4) {
        let reduced = match h.reduce() {
            Ok(r) => r.hypergraph,
            Err(_) => return Ok(()),
        };
        let d = minimal_flat_d(intersection_closure(&reduced).unwrap().longest);
        let r = kernelize(&reduced, k, d, &KernelOptions::default()).unwrap();
        prop_assert_eq!(&r.trace.replay(&reduced).unwrap(), &r.kernel);
        prop_assert!(is_flat(&r.kernel, d).flat);
        if let Some(c) = brute_force_min_cover(&r.kernel).unwrap() {
            let lifted = lift_cover(&r.trace, &reduced, &r.kernel, &c).unwrap();
            prop_assert!(reduced.verify_cover(&lifted).unwrap());
        }
    }
}
