//! Obstruction branches and the three-branch family built from them.

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::canon::canonical_form_coloured;
use crate::contraction::proper_contractions;
use crate::error::Result;
use crate::graph::Graph;
use crate::rooted::RootedGraph;
use crate::search::{decide_expansion, ExpansionQuery};

use super::fans::glue_at_root;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branch {
    pub graph: Graph,
    pub root: usize,
    /// The edge from the root to the glued vertex; level-1 branches have none.
    pub trunk: Option<(usize, usize)>,
    pub level: usize,
}

impl Branch {
    /// The trunk, or every root edge on level 1.
    pub fn trunk_edges(&self) -> Vec<(usize, usize)> {
        match self.trunk {
            Some(e) => vec![e],
            None => self.graph.neighbors(self.root).iter().map(|w| (self.root.min(w), self.root.max(w))).collect(),
        }
    }

    pub fn rooted(&self) -> RootedGraph {
        RootedGraph::doubly_rooted(self.graph.clone(), self.root).expect("branches are connected")
    }
}

pub fn base_branches(base: &[RootedGraph]) -> Vec<Branch> {
    base.iter()
        .map(|rg| Branch {
            graph: rg.graph.clone(),
            root: rg.s_in.union(&rg.s_out).first().expect("rooted member"),
            trunk: None,
            level: 1,
        })
        .collect()
}

/// Join two branches at their roots (vertex 1) and hang them from a new root 0.
fn join(a: &Branch, b: &Branch) -> Branch {
    let glued = glue_at_root(&[&a.rooted(), &b.rooted()]).expect("single roots");
    let n = glued.graph.order() + 1;
    let mut g = Graph::new(n);
    for (x, y) in glued.graph.edges() {
        g.add_edge(x + 1, y + 1);
    }
    g.add_edge(0, 1);
    Branch { graph: g, root: 0, trunk: Some((0, 1)), level: a.level + 1 }
}

/// Level-`k` branches over `base`, one per multiset, deduplicated up to rooted
/// isomorphism. Also returns the number of duplicates removed.
pub fn branch_set(k: usize, base: &[RootedGraph]) -> (Vec<Branch>, usize) {
    let mut cur = base_branches(base);
    let mut dups = 0;
    for _ in 1..k {
        let mut next = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for i in 0..cur.len() {
            for j in i..cur.len() {
                let b = join(&cur[i], &cur[j]);
                let r = b.rooted();
                if seen.insert(canonical_form_coloured(&r.graph, &r.colours())) {
                    next.push(b);
                } else {
                    dups += 1;
                }
            }
        }
        cur = next;
    }
    (cur, dups)
}

fn binom(n: &BigUint, k: u32) -> BigUint {
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for i in 0..k {
        num *= n - BigUint::from(i);
        den *= BigUint::from(i + 1);
    }
    num / den
}

/// `f(k) = C(f(k-1) + 1, 2)` with `f(1) = base_size`.
pub fn branch_count(k: usize, base_size: usize) -> BigUint {
    let mut f = BigUint::from(base_size);
    for _ in 1..k {
        f = binom(&(f + 1u32), 2);
    }
    f
}

/// `C(f(k) + 2, 3)`.
pub fn three_branch_count(k: usize, base_size: usize) -> BigUint {
    binom(&(branch_count(k, base_size) + 2u32), 3)
}

/// `f(k) >= 2 (5/2)^(2^(k-1))` for a five-member base, in integers.
pub fn branch_bound_holds(k: usize) -> bool {
    let e = 1u32 << (k - 1);
    branch_count(k, 5) * BigUint::from(2u32).pow(e) >= BigUint::from(2u32) * BigUint::from(5u32).pow(e)
}

/// The three-branch count is at least `(4/3) (5/2)^(3 * 2^(k-1))` for a
/// five-member base, in integers.
pub fn three_branch_bound_holds(k: usize) -> bool {
    let e = 3u32 << (k - 1);
    three_branch_count(k, 5) * 3u32 * BigUint::from(2u32).pow(e) >= BigUint::from(4u32) * BigUint::from(5u32).pow(e)
}

/// Three branches (with repetition) glued at their roots, deduplicated.
pub fn three_branch_set(k: usize, base: &[RootedGraph]) -> (Vec<Graph>, usize) {
    let (branches, _) = branch_set(k, base);
    let rooted: Vec<RootedGraph> = branches.iter().map(Branch::rooted).collect();
    let rep = super::fans::glue_family_at_root(&rooted, 3).expect("single roots");
    (rep.graphs.into_iter().map(|r| r.graph).collect(), rep.duplicates)
}

#[derive(Clone, Debug, Serialize)]
pub struct BranchCheck {
    pub branch: usize,
    /// No width-`k` search cleans the trunk first.
    pub trunk_first_infeasible: bool,
    /// Width `k + 2` with the root guarded throughout.
    pub root_guarded: bool,
    pub trunk_first: bool,
    pub trunk_last: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ThreeBranchCheck {
    pub graph: usize,
    /// `cmp(G) > k + 1`.
    pub exceeds: bool,
    /// Every single-edge contraction has value exactly `k + 1`.
    pub contractions_at_bound: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ThreeBranchReport {
    pub k: usize,
    pub branches: Vec<BranchCheck>,
    pub graphs: Vec<ThreeBranchCheck>,
    pub duplicates: usize,
}

impl ThreeBranchReport {
    pub fn all_pass(&self) -> bool {
        self.branches.iter().all(|b| b.trunk_first_infeasible && b.root_guarded && b.trunk_first && b.trunk_last)
            && self.graphs.iter().all(|g| g.exceeds && g.contractions_at_bound)
    }
}

fn decide(rg: &RootedGraph, k: usize, q: ExpansionQuery) -> Result<bool> {
    Ok(decide_expansion(&rg.enhance(), k, q)?.0.is_some())
}

fn value_is(g: &Graph, k: usize) -> Result<bool> {
    let rg = RootedGraph::unrooted(g.clone())?;
    let q = ExpansionQuery { connected: true, ..Default::default() };
    Ok(decide(&rg, k, q)? && (k == 0 || !decide(&rg, k - 1, q)?))
}

/// Constrained solves on every level-`k` branch and value checks on every
/// member of the three-branch family and its single-edge contractions.
pub fn verify_three_branch(k: usize, base: &[RootedGraph], budget: Option<u64>) -> Result<ThreeBranchReport> {
    let (branches, _) = branch_set(k, base);
    let branch_checks = branches
        .par_iter()
        .enumerate()
        .map(|(i, b)| {
            let plain = RootedGraph::unrooted(b.graph.clone())?;
            let h = plain.enhance();
            let trunk = h.index.edge_set(&b.trunk_edges())?;
            let first = ExpansionQuery { connected: true, first_in: Some(trunk), budget, ..Default::default() };
            let last = ExpansionQuery { connected: true, last_in: Some(trunk), budget, ..Default::default() };
            let guarded = ExpansionQuery { connected: true, budget, ..Default::default() };
            Ok(BranchCheck {
                branch: i,
                trunk_first_infeasible: !decide(&plain, k, first)?,
                root_guarded: decide(&b.rooted(), k + 2, guarded)?,
                trunk_first: decide(&plain, k + 1, first)?,
                trunk_last: decide(&plain, k + 1, last)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let (graphs, duplicates) = three_branch_set(k, base);
    let graph_checks = graphs
        .par_iter()
        .enumerate()
        .map(|(i, g)| {
            let rg = RootedGraph::unrooted(g.clone())?;
            let q = ExpansionQuery { connected: true, budget, ..Default::default() };
            let exceeds = !decide(&rg, k + 1, q)?;
            let mut at_bound = true;
            for c in proper_contractions(g) {
                if !value_is(&c, k + 1)? {
                    at_bound = false;
                    break;
                }
            }
            Ok(ThreeBranchCheck { graph: i, exceeds, contractions_at_bound: at_bound })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ThreeBranchReport { k, branches: branch_checks, graphs: graph_checks, duplicates })
}
