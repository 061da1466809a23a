use gso_core::obstruction::enumerate_up_to;
use gso_core::recognizer::*;
use gso_core::search::{cmp_decide, expansion_cost, expansion_to_strategy, simulate_indexed, Expansion};
use gso_core::{Graph, RootedGraph};

fn claw_at_leaf_triple() -> Graph {
    // Three copies of K_1,3 glued at a leaf.
    let mut g = Graph::new(10);
    for i in 0..3 {
        let c = 1 + 3 * i;
        g.add_edge(0, c);
        g.add_edge(c, c + 1);
        g.add_edge(c, c + 2);
    }
    g
}

/// Two K_1,3-at-leaf pieces joined through a path, forming a spine.
fn spine_example() -> Graph {
    let mut g = Graph::new(10);
    for &(a, b) in &[(0, 1), (1, 2), (1, 3), (4, 0), (4, 5), (5, 0), (5, 6), (6, 7), (6, 8), (6, 9)] {
        g.add_edge(a, b);
    }
    g
}

fn check_certificate(g: &Graph, d: &Decision) {
    let h = RootedGraph::unrooted(g.clone()).unwrap().enhance();
    let ex = Expansion::from_edge_lists(&h.index, d.expansion.as_ref().unwrap()).unwrap();
    assert!(expansion_cost(&h, &ex).unwrap() <= 2);
    let moves = expansion_to_strategy(&h, &ex).unwrap();
    let t = simulate_indexed(&h.index, &moves).unwrap();
    assert!(t.is_rooted_complete(&h) && t.is_monotone() && t.is_connected() && t.width() <= 2);
}

#[test]
fn spine_degrees() {
    let p5 = Graph::path(5);
    assert_eq!(spine_degree(&p5, 2), 0);
    assert_eq!(spine_degree(&claw_at_leaf_triple(), 0), 3);
    assert!(spine_structure(&claw_at_leaf_triple()).is_none());
    assert!(spine_structure(&Graph::cycle(6)).is_none());
}

#[test]
fn spine_is_recovered() {
    let g = spine_example();
    let s = spine_structure(&g).expect("spine");
    assert!(!s.central_cuts.is_empty());
    assert_eq!(s.extended_blocks.len(), s.central_cuts.len() + 1);
    assert!(s.partitions_edges(&g));
    let d = decide_cmms_le_2(&g).unwrap();
    let exact = cmp_decide(&RootedGraph::unrooted(g.clone()).unwrap(), 2).unwrap().is_some();
    assert_eq!(d.answer, exact);
}

#[test]
fn labels() {
    let c4 = Graph::cycle(4);
    let part = Part { vertices: vec![0, 1, 2, 3], s_in: vec![0], s_out: vec![2] };
    assert_eq!(label_block(&c4, &part), Label::Both);
    let k4 = Graph::complete(4);
    let part = Part { vertices: vec![0, 1, 2, 3], s_in: vec![0], s_out: vec![1] };
    assert_eq!(label_block(&k4, &part), Label::Unlabelable);
}

#[test]
fn simple_families() {
    assert!(!decide_cmms_le_2(&Graph::complete(4)).unwrap().answer);
    for n in 1..9 {
        let d = decide_cmms_le_2(&Graph::path(n)).unwrap();
        assert!(d.answer);
        check_certificate(&Graph::path(n), &d);
    }
    for n in 3..9 {
        let d = decide_cmms_le_2(&Graph::cycle(n)).unwrap();
        assert!(d.answer);
        check_certificate(&Graph::cycle(n), &d);
    }
}

#[test]
fn agrees_with_solver_up_to_seven() {
    let mut cov = Coverage::default();
    for level in enumerate_up_to(7) {
        for g in &level {
            let d = decide_cmms_le_2(g).unwrap();
            let exact = cmp_decide(&RootedGraph::unrooted(g.clone()).unwrap(), 2).unwrap().is_some();
            assert_eq!(d.answer, exact, "{:?}", g.edges());
            if d.answer {
                check_certificate(g, &d);
            }
            if let Some(s) = &d.spine {
                assert!(s.partitions_edges(g));
            }
            cov.record(&d);
        }
    }
    assert_eq!(cov.graphs, 996);
    assert!(cov.fan_centre + cov.spine > 0);
    eprintln!("{cov:?}");
}
