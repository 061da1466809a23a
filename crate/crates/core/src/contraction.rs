//! Contraction and minor containment, proper contractions, obstruction test.
//!
//! Containment is decided level by level: all contractions of the host with
//! one fewer vertex are generated, deduplicated by coloured canonical form,
//! until the order of the pattern is reached. Roots are vertex colours that
//! merge by union, so a rooted contraction maps root sets onto root sets.

use std::collections::HashSet;

use serde::Serialize;

use crate::canon::{canonical_form, canonical_form_coloured, isomorphism};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rooted::RootedGraph;
use crate::search::{value_at_most, Param};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Contraction,
    Minor,
}

impl std::str::FromStr for Relation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Relation> {
        match s {
            "contraction" => Ok(Relation::Contraction),
            "minor" => Ok(Relation::Minor),
            _ => Err(Error::Invalid(format!("unknown relation {s:?}"))),
        }
    }
}

/// `phi[v]` is the pattern vertex that host vertex `v` is mapped to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContractionWitness {
    pub phi: Vec<usize>,
}

impl ContractionWitness {
    /// Check surjectivity, connected fibers, and the edge condition (exact
    /// for contractions; only pattern edges required for minors).
    pub fn verify(&self, h: &Graph, g: &Graph, relation: Relation) -> bool {
        if self.phi.len() != g.order() || self.phi.iter().any(|&x| x >= h.order()) {
            return false;
        }
        let mut fibers = vec![crate::Bits::EMPTY; h.order()];
        for (v, &x) in self.phi.iter().enumerate() {
            fibers[x].insert(v);
        }
        if fibers.iter().any(|f| f.is_empty() || !g.is_connected_subset(f)) {
            return false;
        }
        let mut quotient = Graph::new(h.order());
        for (u, v) in g.edges() {
            if self.phi[u] != self.phi[v] {
                quotient.add_edge(self.phi[u], self.phi[v]);
            }
        }
        match relation {
            Relation::Contraction => quotient == *h,
            Relation::Minor => h.edges().into_iter().all(|(a, b)| quotient.has_edge(a, b)),
        }
    }
}

struct Node {
    graph: Graph,
    colours: Vec<u32>,
    /// Host vertex -> vertex of `graph`.
    map: Vec<usize>,
}

fn colour_count(colours: &[u32], bit: u32) -> usize {
    colours.iter().filter(|&&c| c & bit != 0).count()
}

/// Core search. Colours must be bitmasks; they merge by union.
fn search(
    h: &Graph,
    hc: &[u32],
    g: &Graph,
    gc: &[u32],
    relation: Relation,
    budget: Option<u64>,
    work: &mut u64,
) -> Result<Option<ContractionWitness>> {
    let (n, m) = (g.order(), h.order());
    if m > n || (m == 0) != (n == 0) || h.size() > g.size() {
        return Ok(None);
    }
    let comps = |x: &Graph| x.components().len();
    if relation == Relation::Contraction && comps(h) != comps(g) {
        return Ok(None);
    }
    if relation == Relation::Minor && !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let bits = [1u32, 2];
    let need: Vec<usize> = bits.iter().map(|&b| colour_count(hc, b)).collect();
    let mut level = vec![Node { graph: g.clone(), colours: gc.to_vec(), map: (0..n).collect() }];
    for _ in m..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for node in &level {
            for (u, v) in node.graph.edges() {
                *work += 1;
                if budget.is_some_and(|b| *work > b) {
                    return Err(Error::BudgetExceeded);
                }
                let (cg, cmap) = node.graph.contract_edge_map(u, v)?;
                if cg.size() < h.size() {
                    continue;
                }
                let mut colours = vec![0u32; cg.order()];
                for (x, &c) in node.colours.iter().enumerate() {
                    colours[cmap[x]] |= c;
                }
                if bits.iter().zip(&need).any(|(&b, &k)| colour_count(&colours, b) < k) {
                    continue;
                }
                if seen.insert(canonical_form_coloured(&cg, &colours)) {
                    let map = node.map.iter().map(|&x| cmap[x]).collect();
                    next.push(Node { graph: cg, colours, map });
                }
            }
        }
        level = next;
        if level.is_empty() {
            return Ok(None);
        }
    }
    for node in &level {
        *work += 1;
        let found = match relation {
            Relation::Contraction => isomorphism(h, hc, &node.graph, &node.colours),
            Relation::Minor => monomorphism(h, hc, &node.graph, &node.colours),
        };
        if let Some(f) = found {
            let mut inv = vec![0; m];
            for (x, &y) in f.iter().enumerate() {
                inv[y] = x;
            }
            return Ok(Some(ContractionWitness { phi: node.map.iter().map(|&y| inv[y]).collect() }));
        }
    }
    Ok(None)
}

/// Bijection `h -> q` with equal colours mapping edges to edges (same order).
fn monomorphism(h: &Graph, hc: &[u32], q: &Graph, qc: &[u32]) -> Option<Vec<usize>> {
    let m = h.order();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(h.degree(v)));
    let mut map = vec![usize::MAX; m];
    let mut used = vec![false; m];
    fn go(
        i: usize,
        order: &[usize],
        h: &Graph,
        hc: &[u32],
        q: &Graph,
        qc: &[u32],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        for x in 0..q.order() {
            if used[x] || qc[x] != hc[v] || q.degree(x) < h.degree(v) {
                continue;
            }
            if h.neighbors(v).iter().any(|w| map[w] != usize::MAX && !q.has_edge(x, map[w])) {
                continue;
            }
            map[v] = x;
            used[x] = true;
            if go(i + 1, order, h, hc, q, qc, map, used) {
                return true;
            }
            map[v] = usize::MAX;
            used[x] = false;
        }
        false
    }
    go(0, &order, h, hc, q, qc, &mut map, &mut used).then_some(map)
}

/// `h ≼ g` for rooted graphs: the witness also maps root sets onto root sets.
pub fn is_contraction(h: &RootedGraph, g: &RootedGraph, budget: Option<u64>) -> Result<Option<ContractionWitness>> {
    search(&h.graph, &h.colours(), &g.graph, &g.colours(), Relation::Contraction, budget, &mut 0)
}

/// `h ≼ g` for plain graphs (connectivity not required).
pub fn is_graph_contraction(h: &Graph, g: &Graph, budget: Option<u64>) -> Result<Option<ContractionWitness>> {
    search(h, &vec![0; h.order()], g, &vec![0; g.order()], Relation::Contraction, budget, &mut 0)
}

/// `h ≤ g`; `g` must be connected.
pub fn is_minor(h: &Graph, g: &Graph, budget: Option<u64>) -> Result<Option<ContractionWitness>> {
    search(h, &vec![0; h.order()], g, &vec![0; g.order()], Relation::Minor, budget, &mut 0)
}

pub fn related(h: &Graph, g: &Graph, relation: Relation, budget: Option<u64>) -> Result<bool> {
    Ok(match relation {
        Relation::Contraction => is_graph_contraction(h, g, budget)?,
        Relation::Minor => is_minor(h, g, budget)?,
    }
    .is_some())
}

/// Index of the first family member related to `g`. Roots are ignored for minors.
pub fn contains_any(
    g: &RootedGraph,
    family: &[RootedGraph],
    relation: Relation,
    budget: Option<u64>,
) -> Result<Option<usize>> {
    let mut work = 0;
    for (i, h) in family.iter().enumerate() {
        let hit = match relation {
            Relation::Contraction => {
                search(&h.graph, &h.colours(), &g.graph, &g.colours(), relation, budget, &mut work)?
            }
            Relation::Minor => {
                let (hc, gc) = (vec![0; h.graph.order()], vec![0; g.graph.order()]);
                search(&h.graph, &hc, &g.graph, &gc, relation, budget, &mut work)?
            }
        };
        if hit.is_some() {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// `{g/e}` deduplicated by canonical form, in canonical-form order.
pub fn proper_contractions(g: &Graph) -> Vec<Graph> {
    let mut out: Vec<_> = g
        .edges()
        .into_iter()
        .map(|(u, v)| {
            let c = g.contract_edge(u, v).expect("edge exists");
            (canonical_form(&c), c)
        })
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out.dedup_by(|a, b| a.0 == b.0);
    out.into_iter().map(|(_, c)| c).collect()
}

/// Single-edge rooted contractions, deduplicated up to rooted isomorphism.
pub fn proper_rooted_contractions(g: &RootedGraph) -> Vec<RootedGraph> {
    let mut out: Vec<_> = g
        .graph
        .edges()
        .into_iter()
        .map(|(u, v)| {
            let c = g.contract_edge(u, v).expect("edge exists");
            (canonical_form_coloured(&c.graph, &c.colours()), c)
        })
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out.dedup_by(|a, b| a.0 == b.0);
    out.into_iter().map(|(_, c)| c).collect()
}

/// `{g - e}` deduplicated by canonical form.
pub fn edge_deletions(g: &Graph) -> Vec<Graph> {
    let mut out: Vec<_> = g
        .edges()
        .into_iter()
        .map(|(u, v)| {
            let c = g.delete_edge(u, v).expect("edge exists");
            (canonical_form(&c), c)
        })
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out.dedup_by(|a, b| a.0 == b.0);
    out.into_iter().map(|(_, c)| c).collect()
}

/// `param(g) > k` while every single-step reduction (contraction, plus edge
/// deletion for minors) has `param <= k`.
pub fn is_obstruction(g: &Graph, param: Param, k: usize, relation: Relation, budget: Option<u64>) -> Result<bool> {
    if value_at_most(g, param, k, budget)? {
        return Ok(false);
    }
    for c in proper_contractions(g) {
        if !value_at_most(&c, param, k, budget)? {
            return Ok(false);
        }
    }
    if relation == Relation::Minor {
        for d in edge_deletions(g) {
            if !value_at_most(&d, param, k, budget)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
