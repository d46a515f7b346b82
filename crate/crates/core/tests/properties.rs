//! Property tests over seeded random graphs.

use proptest::prelude::*;
use rand::seq::SliceRandom;
use regraph::construct::{lift_to_rgraph, meredith_extension, p_power};
use regraph::cuts::{is_r_graph, min_odd_cut_bruteforce, min_odd_cut_flow, tight_cuts};
use regraph::factors::{covers_exactly_once, has_pm_avoiding, is_class1, pi};
use regraph::io::{parse_mgf, write_mgf};
use regraph::iso::canonical_form;
use regraph::random::{instance_rng, random_multigraph, random_proper_subset, random_r_graph};
use regraph::{Multigraph, VertexSet};

fn multigraph() -> impl Strategy<Value = Multigraph> {
    (1usize..=9, 0usize..=24, any::<u64>()).prop_map(|(half, m, seed)| {
        let n = 2 * half;
        random_multigraph(n, m, &mut instance_rng(seed, 0)).unwrap()
    })
}

fn r_graph() -> impl Strategy<Value = (usize, Multigraph)> {
    (3usize..=5, 1usize..=5, any::<u64>()).prop_map(|(r, half, seed)| {
        (r, random_r_graph(r, 2 * half, &mut instance_rng(seed, 1)).unwrap())
    })
}

fn permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(&mut instance_rng(seed, 2));
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parity_of_boundaries((r, g) in r_graph(), mask in any::<u64>()) {
        let x = VertexSet::from_mask(g.n(), mask & ((1 << g.n()) - 1));
        prop_assert_eq!(g.boundary_size(&x) % 2, (r * x.len()) % 2);
    }

    #[test]
    fn contraction_keeps_the_boundary(g in multigraph(), mask in any::<u64>()) {
        let x = VertexSet::from_mask(g.n(), mask & ((1 << g.n()) - 1));
        prop_assume!(!x.is_empty() && !x.is_full());
        let c = g.contract(&x).unwrap();
        prop_assert_eq!(c.graph.degree(c.merged), g.boundary_size(&x));
        let degrees: usize = (0..c.graph.n()).map(|v| c.graph.degree(v)).sum();
        prop_assert_eq!(degrees, 2 * c.graph.m());
    }

    #[test]
    fn adding_then_deleting_edges(g in multigraph(), seed in any::<u64>()) {
        let extra = random_multigraph(g.n(), 4, &mut instance_rng(seed, 3)).unwrap();
        let pairs: Vec<_> = extra.edges().map(|(_, u, v)| (u, v)).collect();
        let bigger = g.add_edges(&pairs).unwrap();
        let added: Vec<usize> = (g.m()..bigger.m()).collect();
        let (back, _) = bigger.delete_edges(&added).unwrap();
        prop_assert_eq!(canonical_form(&back).unwrap().certificate, canonical_form(&g).unwrap().certificate);
        let degrees: usize = (0..bigger.n()).map(|v| bigger.degree(v)).sum();
        prop_assert_eq!(degrees, 2 * bigger.m());
    }

    #[test]
    fn odd_cut_routes_agree(g in multigraph()) {
        let a = min_odd_cut_flow(&g).unwrap();
        let b = min_odd_cut_bruteforce(&g).unwrap();
        prop_assert_eq!(a.value, b.value);
        prop_assert_eq!(g.boundary_size(&a.witness), a.value);
        prop_assert!(a.witness.len() % 2 == 1);
    }

    #[test]
    fn tight_cut_witnesses((r, g) in r_graph()) {
        for t in tight_cuts(&g, r, false).unwrap() {
            prop_assert_eq!(g.boundary_size(&t.set), r);
            prop_assert!(t.set.len() % 2 == 1);
        }
    }

    #[test]
    fn relabelling_invariance(g in multigraph(), seed in any::<u64>(), r in 3usize..=5) {
        let h = g.relabel(&permutation(g.n(), seed)).unwrap();
        prop_assert_eq!(canonical_form(&g).unwrap().certificate, canonical_form(&h).unwrap().certificate);
        prop_assert_eq!(is_r_graph(&g, r), is_r_graph(&h, r));
    }

    #[test]
    fn mgf_round_trip(g in multigraph()) {
        prop_assert_eq!(parse_mgf(&write_mgf(&g)).unwrap(), g);
    }

    #[test]
    fn avoiding_matchings((r, g) in r_graph(), seed in any::<u64>()) {
        let mut edges: Vec<usize> = (0..g.m()).collect();
        edges.shuffle(&mut instance_rng(seed, 4));
        let f = &edges[..r - 1];
        let m = has_pm_avoiding(&g, r, f).unwrap();
        prop_assert!(m.as_ref().is_some_and(|m| covers_exactly_once(&g, &m.edges) && f.iter().all(|&e| !m.contains(e))));
    }

    #[test]
    fn class_and_packing_are_consistent((r, g) in r_graph()) {
        let p = pi(&g).unwrap();
        if is_class1(&g, r).unwrap().is_some() {
            prop_assert_eq!(p, r);
        } else {
            prop_assert!(p + 2 <= r);
        }
    }

    #[test]
    fn lifting_returns_r_graphs((r, g) in r_graph(), seed in any::<u64>()) {
        prop_assume!(g.n() >= 4);
        let x = random_proper_subset(g.n(), 1, &mut instance_rng(seed, 5));
        let (h, _) = lift_to_rgraph(&g, &x, r).unwrap();
        prop_assert!(h.is_connected() && is_r_graph(&h, r));
    }

    #[test]
    fn gadget_expansion_keeps_packing((r, g) in r_graph(), v in any::<prop::sample::Index>(), seed in any::<u64>()) {
        let v = v.index(g.n());
        let (h, _) = meredith_extension(&g, v, &permutation(r, seed)).unwrap();
        prop_assert!(is_r_graph(&h, r));
        prop_assert_eq!(pi(&g).unwrap(), pi(&h).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn petersen_powers_are_class_2(counts in prop::array::uniform6(0u32..=1)) {
        let g = p_power(&counts).unwrap();
        let r = 3 + counts.iter().sum::<u32>() as usize;
        prop_assert!(g.n() == 10 && is_r_graph(&g, r));
        prop_assert!(is_class1(&g, r).unwrap().is_none());
        prop_assert_eq!(pi(&g).unwrap(), r - 2);
    }
}
