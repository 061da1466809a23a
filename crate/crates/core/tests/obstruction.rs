use std::collections::HashSet;

use gso_core::canon::canonical_form;
use gso_core::contraction::Relation;
use gso_core::obstruction::*;
use gso_core::search::{cmp_value, Param};
use gso_core::{Graph, RootedGraph};

/// Labelled enumeration of all graphs on `n` vertices, deduplicated by a
/// brute-force certificate (lexicographically least adjacency over all relabellings).
fn brute_connected_count(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let perms = all_perms(n);
    let mut seen = HashSet::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        let g = Graph::from_edges(n, &edges);
        if !g.is_connected() {
            continue;
        }
        let cert = perms
            .iter()
            .map(|p| {
                let mut e: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (p[a].min(p[b]), p[a].max(p[b]))).collect();
                e.sort();
                e
            })
            .min()
            .unwrap();
        seen.insert(cert);
    }
    seen.len()
}

fn all_perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_perms(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

#[test]
fn enumeration_counts() {
    let levels = enumerate_up_to(7);
    let counts: Vec<usize> = levels.iter().map(Vec::len).collect();
    assert_eq!(counts, vec![1, 1, 2, 6, 21, 112, 853]);
    for n in 1..=5 {
        assert_eq!(counts[n - 1], brute_connected_count(n));
    }
    for level in &levels {
        let certs: HashSet<_> = level.iter().map(canonical_form).collect();
        assert_eq!(certs.len(), level.len());
        assert!(level.iter().all(Graph::is_connected));
    }
}

#[test]
fn mining_small_sets() {
    let r = mine_obstructions(6, Param::Cmp, 1, Relation::Contraction, None).unwrap();
    let got: HashSet<_> = r.obstructions.iter().map(canonical_form).collect();
    let want: HashSet<_> = [Graph::complete(3), Graph::star(3)].iter().map(canonical_form).collect();
    assert_eq!(got, want);
    let r = mine_obstructions(6, Param::Mp, 1, Relation::Minor, None).unwrap();
    assert_eq!(r.obstructions.len(), 2);
    assert!(mine_obstructions(1, Param::Cmp, 1, Relation::Contraction, None).unwrap().obstructions.is_empty());
}

#[test]
fn mining_width_two_small() {
    let r = mine_obstructions(5, Param::Cmp, 2, Relation::Contraction, None).unwrap();
    let got: HashSet<_> = r.obstructions.iter().map(canonical_form).collect();
    for g in [Graph::complete(4), Graph::complete_bipartite(2, 3), Graph::k23_plus()] {
        assert!(got.contains(&canonical_form(&g)));
    }
    assert_eq!(got.len(), 3);
}

#[test]
fn fan_examples() {
    let k3 = Graph::complete(3);
    assert!(fan_check_structural(&k3, 0) && fan_check_solver(&k3, 0));
    let claw = Graph::star(3);
    assert!(!fan_check_structural(&claw, 1));
    assert!(!fan_check_solver(&claw, 1));
    let p3 = Graph::path(3);
    assert!(fan_check_structural(&p3, 0) && fan_check_solver(&p3, 0));
    for v in 0..4 {
        assert!(!fan_check_solver(&Graph::complete(4), v));
    }
}

#[test]
fn structural_fans_are_solver_fans() {
    for level in enumerate_up_to(7) {
        for g in &level {
            for v in 0..g.order() {
                if fan_check_structural(g, v) {
                    assert!(fan_check_solver(g, v), "{:?} at {v}", g.edges());
                }
            }
        }
    }
}

#[test]
fn fan_base_has_five_members() {
    let base = derive_fan_base(7);
    assert_eq!(base.len(), 5);
    for rg in &base {
        assert_eq!(cmp_value(rg).unwrap().value, 3);
        assert!(rg.graph.order() <= 5);
    }
}

fn hub_family(size: usize) -> Vec<RootedGraph> {
    (0..size)
        .map(|i| {
            let leaves = i + 2;
            let mut g = Graph::new(leaves + 2);
            g.add_edge(0, 1);
            for l in 0..leaves {
                g.add_edge(1, l + 2);
            }
            RootedGraph::doubly_rooted(g, 0).unwrap()
        })
        .collect()
}

#[test]
fn glue_counts() {
    let base = derive_fan_base(7);
    assert_eq!(glue_family_at_root(&base, 3).unwrap().graphs.len(), 35);
    assert_eq!(glue_family_at_root(&hub_family(12), 2).unwrap().graphs.len(), 78);
    assert_eq!(glue_family_at_root(&hub_family(6), 2).unwrap().graphs.len(), 21);
    assert_eq!(glue_family_at_root(&hub_family(6), 1).unwrap().graphs.len(), 6);
    let unrooted = RootedGraph::unrooted(Graph::path(2)).unwrap();
    assert!(glue_family_at_root(&[unrooted], 2).is_err());
}

#[test]
fn branch_counts() {
    let f: Vec<String> = (1..=3).map(|k| branch_count(k, 5).to_string()).collect();
    assert_eq!(f, ["5", "15", "120"]);
    assert_eq!(three_branch_count(1, 5).to_string(), "35");
    assert_eq!(three_branch_count(2, 5).to_string(), "680");
    for k in 1..=6 {
        assert!(branch_bound_holds(k));
        assert!(three_branch_bound_holds(k));
    }
    let base = derive_fan_base(7);
    let (b2, dups) = branch_set(2, &base);
    assert_eq!((b2.len(), dups), (15, 0));
    for b in &b2 {
        assert_eq!(b.graph.degree(b.root), 1);
        assert_eq!(b.trunk_edges().len(), 1);
    }
    let (o1, dups) = three_branch_set(1, &base);
    assert_eq!((o1.len(), dups), (35, 0));
}

#[test]
fn branch_family_level_one() {
    let base = derive_fan_base(7);
    let r = verify_three_branch(1, &base, None).unwrap();
    assert!(r.all_pass(), "{r:#?}");
}
