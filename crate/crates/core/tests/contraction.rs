use gso_core::contraction::*;
use gso_core::search::{cmp_of, cms_value, Param};
use gso_core::{Bits, Graph, RootedGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Exhaustive oracle over all set partitions of the host and all bijections
/// from parts to pattern vertices.
fn brute_related(h: &Graph, g: &Graph, relation: Relation) -> bool {
    let (n, m) = (g.order(), h.order());
    let mut labels = vec![0usize; n];
    fn parts(i: usize, max: usize, labels: &mut Vec<usize>, m: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if i == labels.len() {
            return max == m && f(labels);
        }
        for l in 0..=max.min(m - 1) {
            labels[i] = l;
            if parts(i + 1, max.max(l + 1), labels, m, f) {
                return true;
            }
        }
        false
    }
    if m == 0 || m > n {
        return false;
    }
    parts(0, 0, &mut labels, m, &mut |lab| {
        let mut perm: Vec<usize> = (0..m).collect();
        loop {
            let phi: Vec<usize> = lab.iter().map(|&l| perm[l]).collect();
            if (ContractionWitness { phi }).verify(h, g, relation) {
                return true;
            }
            if !next_perm(&mut perm) {
                return false;
            }
        }
    })
}

fn next_perm(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    loop {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        if g.is_connected() {
            return g;
        }
    }
}

#[test]
fn examples() {
    let k4 = Graph::complete(4);
    let w = is_graph_contraction(&Graph::complete(3), &k4, None).unwrap().unwrap();
    assert!(w.verify(&Graph::complete(3), &k4, Relation::Contraction));
    assert!(is_graph_contraction(&Graph::star(3), &k4, None).unwrap().is_none());
    let (k23, k23p) = (Graph::complete_bipartite(2, 3), Graph::k23_plus());
    assert!(is_graph_contraction(&k23, &k23p, None).unwrap().is_none());
    assert!(is_graph_contraction(&k23p, &k23p, None).unwrap().is_some());
    assert!(is_minor(&Graph::star(3), &k4, None).unwrap().is_some());
    assert!(is_minor(&k4, &k23, None).unwrap().is_none());
    assert_eq!(proper_contractions(&k4).len(), 1);
    assert_eq!(proper_contractions(&Graph::path(4)).len(), 1);
    assert_eq!(proper_contractions(&Graph::star(3)).len(), 1);
    assert!(proper_contractions(&Graph::new(3)).is_empty());
}

#[test]
fn family_containment() {
    let o1: Vec<RootedGraph> = [Graph::complete(4), Graph::complete_bipartite(2, 3), Graph::k23_plus()]
        .into_iter()
        .map(|g| RootedGraph::unrooted(g).unwrap())
        .collect();
    let k5 = RootedGraph::unrooted(Graph::complete(5)).unwrap();
    assert_eq!(contains_any(&k5, &o1, Relation::Minor, None).unwrap(), Some(0));
    let c6 = RootedGraph::unrooted(Graph::cycle(6)).unwrap();
    assert_eq!(contains_any(&c6, &o1, Relation::Contraction, None).unwrap(), None);
    assert_eq!(contains_any(&c6, &[], Relation::Contraction, None).unwrap(), None);
}

#[test]
fn obstruction_examples() {
    assert!(is_obstruction(&Graph::complete(3), Param::Cmp, 1, Relation::Contraction, None).unwrap());
    assert!(is_obstruction(&Graph::complete(4), Param::Cmp, 2, Relation::Contraction, None).unwrap());
    assert!(!is_obstruction(&Graph::cycle(4), Param::Cmp, 1, Relation::Contraction, None).unwrap());
}

#[test]
fn rooted_contraction_respects_roots() {
    let p3 = RootedGraph::new(Graph::path(3), Bits::singleton(0), Bits::EMPTY).unwrap();
    let p2_end = RootedGraph::new(Graph::path(2), Bits::singleton(0), Bits::EMPTY).unwrap();
    let p2_both = RootedGraph::new(Graph::path(2), Bits::singleton(0), Bits::singleton(1)).unwrap();
    assert!(is_contraction(&p2_end, &p3, None).unwrap().is_some());
    assert!(is_contraction(&p2_both, &p3, None).unwrap().is_none());
}

#[test]
fn agrees_with_partition_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..150 {
        let n = rng.gen_range(2..=6);
        let g = random_connected(&mut rng, n, 0.5);
        let m = rng.gen_range(1..=n);
        let h = random_connected(&mut rng, m, 0.6);
        for rel in [Relation::Contraction, Relation::Minor] {
            let fast = match rel {
                Relation::Contraction => is_graph_contraction(&h, &g, None),
                Relation::Minor => is_minor(&h, &g, None),
            }
            .unwrap();
            if let Some(w) = &fast {
                assert!(w.verify(&h, &g, rel));
            }
            assert_eq!(fast.is_some(), brute_related(&h, &g, rel), "{rel:?} {:?} in {:?}", h.edges(), g.edges());
        }
    }
}

#[test]
fn relation_laws() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let n = rng.gen_range(2..=6);
        let g = random_connected(&mut rng, n, 0.5);
        assert!(is_graph_contraction(&g, &g, None).unwrap().is_some());
        let mut h = g.clone();
        let mut chain = vec![g.clone()];
        for _ in 0..rng.gen_range(1..n) {
            let e = h.edges();
            let (u, v) = e[rng.gen_range(0..e.len())];
            h = h.contract_edge(u, v).unwrap();
            chain.push(h.clone());
        }
        assert!(is_graph_contraction(&h, &g, None).unwrap().is_some());
        assert!(is_minor(&h, &g, None).unwrap().is_some());
        let mid = &chain[chain.len() / 2];
        assert!(is_graph_contraction(mid, &g, None).unwrap().is_some());
        assert!(is_graph_contraction(&h, mid, None).unwrap().is_some());
    }
}

#[test]
fn contraction_never_raises_values() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..60 {
        let n = rng.gen_range(2..=6);
        let g = random_connected(&mut rng, n, 0.45);
        let (cg, cs) = (cmp_of(&g), cms_value(&g).unwrap().value);
        for c in proper_contractions(&g) {
            assert!(cmp_of(&c) <= cg);
            assert!(cms_value(&c).unwrap().value <= cs);
        }
    }
}

#[test]
fn budget_reported() {
    let r = is_graph_contraction(&Graph::path(2), &Graph::complete(7), Some(3));
    assert!(matches!(r, Err(gso_core::Error::BudgetExceeded)));
}
