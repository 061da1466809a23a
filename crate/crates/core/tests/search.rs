use gso_core::search::*;
use gso_core::{Bits, Graph, RootedGraph};

/// Exhaustive oracle: minimum over all edge orders of the prefix expansion cost.
fn brute_order_value(rg: &RootedGraph, connected: bool) -> usize {
    let h = rg.enhance();
    let rest: Vec<usize> = h.target().difference(&h.e_in).to_vec();
    let mut best = usize::MAX;
    let mut perm = rest.clone();
    permute(&mut perm, 0, &mut |order| {
        let ex = Expansion::from_order(&h, order);
        if connected && !ex.sets.iter().all(|a| h.index.edges_connected(a)) {
            return;
        }
        best = best.min(expansion_cost(&h, &ex).unwrap());
    });
    best
}

fn permute(v: &mut Vec<usize>, i: usize, f: &mut impl FnMut(&[usize])) {
    if i == v.len() {
        f(v);
        return;
    }
    for j in i..v.len() {
        v.swap(i, j);
        permute(v, i + 1, f);
        v.swap(i, j);
    }
}

fn unrooted(g: Graph) -> RootedGraph {
    RootedGraph::unrooted(g).unwrap()
}

#[test]
fn small_values() {
    for n in 2..7 {
        assert_eq!(cmp_of(&Graph::path(n)), 1, "P{n}");
    }
    assert_eq!(cmp_of(&Graph::complete(3)), 2);
    assert_eq!(cmp_of(&Graph::complete(4)), 3);
    assert_eq!(cmp_of(&Graph::star(3)), 2);
    assert_eq!(cmp_of(&Graph::cycle(5)), 2);
    assert_eq!(cmp_of(&Graph::complete_bipartite(2, 3)), 3);
    assert_eq!(cmp_of(&Graph::k23_plus()), 3);
    assert_eq!(cmp_of(&Graph::new(1)), 0);
    let k3 = RootedGraph::doubly_rooted(Graph::complete(3), 0).unwrap();
    assert_eq!(cmp_value(&k3).unwrap().value, 2);
    assert_eq!(mp_value(&unrooted(Graph::complete(3))).unwrap().value, 2);
    assert_eq!(cms_value(&Graph::complete(3)).unwrap().value, 2);
    assert_eq!(cms_value(&Graph::path(4)).unwrap().value, 1);
    assert_eq!(ms_value(&Graph::path(4)).unwrap().value, 1);
    assert_eq!(cmms_value(&unrooted(Graph::complete(4))).unwrap().value, 3);
}

#[test]
fn single_edge_strategy() {
    let h = unrooted(Graph::path(2)).enhance();
    let ex = Expansion::from_order(&h, &[h.index.edge_id(0, 1).unwrap()]);
    assert_eq!(expansion_to_strategy(&h, &ex).unwrap(), vec![Move::p(0), Move::s(0, 1)]);
}

#[test]
fn solver_matches_order_oracle() {
    let graphs = [
        Graph::path(4),
        Graph::cycle(4),
        Graph::complete(4),
        Graph::star(3),
        Graph::complete_bipartite(2, 3),
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]),
    ];
    for g in graphs {
        let n = g.order();
        let roots = [
            (Bits::EMPTY, Bits::EMPTY),
            (Bits::singleton(0), Bits::singleton(0)),
            (Bits::singleton(0), Bits::singleton(n - 1)),
        ];
        for (si, so) in roots {
            let rg = RootedGraph::new(g.clone(), si, so).unwrap();
            assert_eq!(
                cmp_value(&rg).unwrap().value,
                brute_order_value(&rg, true),
                "cmp {:?} {si:?} {so:?}",
                g.edges()
            );
            assert_eq!(mp_value(&rg).unwrap().value, brute_order_value(&rg, false), "mp {:?} {si:?} {so:?}", g.edges());
        }
    }
}

#[test]
fn witnesses_round_trip() {
    let graphs = [Graph::path(3), Graph::cycle(5), Graph::complete(4), Graph::star(4), Graph::k23_plus()];
    for g in graphs {
        for rg in [unrooted(g.clone()), RootedGraph::doubly_rooted(g.clone(), 0).unwrap()] {
            let h = rg.enhance();
            let r = cmp_value(&rg).unwrap();
            let Witness::Expansion(lists) = &r.witness else { panic!() };
            let ex = Expansion::from_edge_lists(&h.index, lists).unwrap();
            assert_eq!(expansion_cost(&h, &ex).unwrap(), r.value);
            let moves = expansion_to_strategy(&h, &ex).unwrap();
            let t = simulate_indexed(&h.index, &moves).unwrap();
            assert!(t.is_monotone() && t.is_connected() && t.is_rooted_complete(&h), "{:?}", g.edges());
            assert_eq!(t.width(), r.value, "{:?} {moves:?}", g.edges());
            let back = strategy_to_expansion(&h, &moves).unwrap();
            assert!(expansion_cost(&h, &back).unwrap() <= t.width());
        }
    }
}

#[test]
fn game_matches_expansions() {
    let graphs = [Graph::path(4), Graph::cycle(4), Graph::complete(4), Graph::star(3), Graph::complete_bipartite(2, 3)];
    for g in graphs {
        for rg in [unrooted(g.clone()), RootedGraph::doubly_rooted(g.clone(), 0).unwrap()] {
            assert_eq!(cmms_value(&rg).unwrap().value, cmp_value(&rg).unwrap().value, "{:?} {:?}", g.edges(), rg.s_in);
        }
    }
}

#[test]
fn disconnected_in_roots_rejected() {
    let rg = RootedGraph::new(Graph::path(3), [0, 2].into_iter().collect(), Bits::EMPTY).unwrap();
    assert!(cmp_value(&rg).is_err());
}

#[test]
fn budget_is_enforced() {
    let rg = unrooted(Graph::complete(5));
    assert!(matches!(solve(&rg, Param::Cmp, Some(1)), Err(gso_core::Error::BudgetExceeded)));
}

#[test]
fn pendant_departure_gap() {
    // The game slides off the pendant vertex 0 onto 4 while 1 is guarded,
    // cleaning two edges at once; every expansion pays the pendant surcharge.
    let g = Graph::from_edges(5, &[(0, 4), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
    let rg = RootedGraph::new(g, Bits::singleton(1), Bits::singleton(3)).unwrap();
    assert_eq!(cmms_value(&rg).unwrap().value, 2);
    assert_eq!(cmp_value(&rg).unwrap().value, 3);
    let q = GameQuery { monotone: true, connected: true, budget: None, no_pendant_departure: true };
    assert_eq!(game_value(&rg.enhance(), q).unwrap().0, 3);
}
