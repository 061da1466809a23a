//! Fans, root gluing, and derivation of the minimal non-fan family.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::Bits;
use crate::blocks::is_outerplanar;
use crate::canon::{canonical_form_coloured, canonical_graph, CanonicalForm};
use crate::contraction::proper_rooted_contractions;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rooted::RootedGraph;
use crate::search::cmp_decide;

use super::enumerate::enumerate_up_to;

/// Outerplanar, and every component of `g - v` is a path with an endpoint
/// adjacent to `v`.
pub fn fan_check_structural(g: &Graph, v: usize) -> bool {
    if !is_outerplanar(g) {
        return false;
    }
    let mut rest = g.vertices();
    rest.remove(v);
    let nv = g.neighbors(v);
    g.components_within(&rest).into_iter().all(|comp| {
        let (sub, _) = g.induced(&comp);
        if sub.size() + 1 != sub.order() || (0..sub.order()).any(|x| sub.degree(x) > 2) {
            return false;
        }
        comp.iter().any(|x| nv.contains(x) && g.neighbors(x).intersection(&comp).len() <= 1)
    })
}

/// `cmp(g, {v}, {v}) <= 2`.
pub fn fan_check_solver(g: &Graph, v: usize) -> bool {
    let rg = RootedGraph::doubly_rooted(g.clone(), v).expect("connected graph");
    cmp_decide(&rg, 2).expect("single root").is_some()
}

/// Doubly rooted graph in canonical labelling, with its certificate.
pub fn canonical_rooted(rg: &RootedGraph) -> (CanonicalForm, RootedGraph) {
    let colours = rg.colours();
    let (g, perm) = canonical_graph(&rg.graph, &colours);
    let map = |s: &Bits| s.iter().map(|x| perm[x]).collect::<Bits>();
    let out = RootedGraph { graph: g, s_in: map(&rg.s_in), s_out: map(&rg.s_out) };
    (canonical_form_coloured(&out.graph, &out.colours()), out)
}

/// Doubly rooted outerplanar graphs on at most `n_max` vertices that are not
/// fans (by the solver) while every rooted single-edge contraction is.
pub fn derive_fan_base(n_max: usize) -> Vec<RootedGraph> {
    let mut out = Vec::new();
    for level in enumerate_up_to(n_max) {
        let mut rooted: BTreeMap<CanonicalForm, RootedGraph> = BTreeMap::new();
        for g in level.iter().filter(|g| is_outerplanar(g)) {
            for v in 0..g.order() {
                let (c, r) = canonical_rooted(&RootedGraph::doubly_rooted(g.clone(), v).expect("connected"));
                rooted.entry(c).or_insert(r);
            }
        }
        let hits: Vec<RootedGraph> = rooted
            .into_values()
            .collect::<Vec<_>>()
            .into_par_iter()
            .filter(|rg| {
                cmp_decide(rg, 2).expect("single root").is_none()
                    && proper_rooted_contractions(rg).iter().all(|c| cmp_decide(c, 2).expect("single root").is_some())
            })
            .collect();
        out.extend(hits);
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct GlueReport {
    /// Number of size-`m` multisets of members.
    pub multisets: usize,
    /// Multisets whose glued graph repeated an earlier one.
    pub duplicates: usize,
    #[serde(skip)]
    pub graphs: Vec<RootedGraph>,
}

fn single_root(rg: &RootedGraph) -> Result<usize> {
    let roots = rg.s_in.union(&rg.s_out);
    if roots.len() != 1 {
        return Err(Error::GluePrecondition("member must be rooted on exactly one vertex".into()));
    }
    Ok(roots.first().unwrap())
}

/// Identify the roots of `members` into vertex 0; the result is doubly rooted there.
pub fn glue_at_root(members: &[&RootedGraph]) -> Result<RootedGraph> {
    let n = 1 + members.iter().map(|m| m.graph.order() - 1).sum::<usize>();
    let mut g = Graph::new(n);
    let mut next = 1;
    for m in members {
        let r = single_root(m)?;
        let map: Vec<usize> = (0..m.graph.order())
            .map(|x| {
                if x == r {
                    0
                } else {
                    next += 1;
                    next - 1
                }
            })
            .collect();
        for (a, b) in m.graph.edges() {
            g.add_edge(map[a], map[b]);
        }
    }
    RootedGraph::doubly_rooted(g, 0)
}

/// One glued graph per size-`m` multiset of members, deduplicated up to
/// rooted isomorphism, in multiset order.
pub fn glue_family_at_root(fam: &[RootedGraph], m: usize) -> Result<GlueReport> {
    if m == 0 {
        return Err(Error::GluePrecondition("multiset size must be positive".into()));
    }
    for rg in fam {
        single_root(rg)?;
    }
    let mut seen = std::collections::HashSet::new();
    let mut graphs = Vec::new();
    let mut multisets = 0;
    let mut idx = vec![0usize; m];
    if fam.is_empty() {
        return Ok(GlueReport { multisets: 0, duplicates: 0, graphs });
    }
    loop {
        multisets += 1;
        let members: Vec<&RootedGraph> = idx.iter().map(|&i| &fam[i]).collect();
        let glued = glue_at_root(&members)?;
        if seen.insert(canonical_form_coloured(&glued.graph, &glued.colours())) {
            graphs.push(glued);
        }
        // Next nondecreasing index sequence.
        let Some(p) = (0..m).rev().find(|&p| idx[p] + 1 < fam.len()) else { break };
        let v = idx[p] + 1;
        for x in &mut idx[p..] {
            *x = v;
        }
    }
    Ok(GlueReport { multisets, duplicates: multisets - graphs.len(), graphs })
}
