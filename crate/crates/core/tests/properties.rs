use proptest::prelude::*;

use gso_core::canon::{canonical_form, canonical_graph, is_isomorphic};
use gso_core::contraction::{is_graph_contraction, proper_contractions};
use gso_core::search::{
    cmp_of, expansion_cost, expansion_to_strategy, simulate_indexed, solve, Expansion, Param, Witness,
};
use gso_core::{graph6, Graph, RootedGraph};

/// A connected graph: a random spanning tree plus extra edges.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let parents = (1..n).map(|v| 0..v).collect::<Vec<_>>();
        let extra = proptest::collection::vec((0..n, 0..n), 0..=n * 2);
        (Just(n), parents, extra).prop_map(|(n, parents, extra)| {
            let mut g = Graph::new(n);
            for (v, p) in parents.into_iter().enumerate() {
                g.add_edge(v + 1, p);
            }
            for (a, b) in extra {
                if a != b {
                    g.add_edge(a, b);
                }
            }
            g
        })
    })
}

fn with_permutation(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    connected_graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip(g in connected_graph(12)) {
        let back = graph6::decode(&graph6::encode(&g)).unwrap();
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn certificate_ignores_labels((g, perm) in with_permutation(9)) {
        let h = g.relabel(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        let (cg, _) = canonical_graph(&g, &vec![0; g.order()]);
        let (ch, _) = canonical_graph(&h, &vec![0; h.order()]);
        prop_assert_eq!(cg.edges(), ch.edges());
        prop_assert!(is_isomorphic(&g, &h));
    }

    #[test]
    fn value_ignores_labels((g, perm) in with_permutation(7)) {
        prop_assert_eq!(cmp_of(&g), cmp_of(&g.relabel(&perm)));
    }

    #[test]
    fn contractions_are_contained(g in connected_graph(7)) {
        let value = cmp_of(&g);
        for c in proper_contractions(&g) {
            prop_assert!(is_graph_contraction(&c, &g, None).unwrap().is_some());
            prop_assert!(cmp_of(&c) <= value);
        }
        prop_assert!(is_graph_contraction(&g, &g, None).unwrap().is_some());
    }

    #[test]
    fn expansion_witness_replays(g in connected_graph(7)) {
        let rg = RootedGraph::unrooted(g).unwrap();
        let r = solve(&rg, Param::Cmp, None).unwrap();
        let h = rg.enhance();
        let Witness::Expansion(lists) = &r.witness else { unreachable!() };
        let ex = Expansion::from_edge_lists(&h.index, lists).unwrap();
        prop_assert_eq!(expansion_cost(&h, &ex).unwrap(), r.value);
        let t = simulate_indexed(&h.index, &expansion_to_strategy(&h, &ex).unwrap()).unwrap();
        prop_assert!(t.is_rooted_complete(&h) && t.is_monotone() && t.is_connected());
        prop_assert_eq!(t.width(), r.value);
    }
}
