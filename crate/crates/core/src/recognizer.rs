//! Decomposition-based decision of `cmp(G) <= 2` with a solver fallback.
//!
//! The fast path looks for either a vertex around which every piece is a
//! fan, or an ordered spine of central cut-vertices. Pieces are solved
//! separately, their edge orders concatenated, and the glued expansion is
//! accepted only if it validates at cost at most 2.

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::Bits;
use crate::error::Result;
use crate::graph::Graph;
use crate::obstruction::fan_check_solver;
use crate::rooted::RootedGraph;
use crate::search::{cmp_decide, expansion_cost, Expansion};

/// Components of `g - v`, each with `v` added back.
fn pieces_at(g: &Graph, v: usize) -> Vec<Bits> {
    let mut rest = g.vertices();
    rest.remove(v);
    g.components_within(&rest)
        .into_iter()
        .map(|mut c| {
            c.insert(v);
            c
        })
        .collect()
}

fn piece_is_fan(g: &Graph, piece: &Bits, v: usize) -> bool {
    let (sub, names) = g.induced(piece);
    let root = names.iter().position(|&x| x == v).expect("root in piece");
    fan_check_solver(&sub, root)
}

/// Number of pieces at `v` that are not fans when doubly rooted on `v`.
pub fn spine_degree(g: &Graph, v: usize) -> usize {
    pieces_at(g, v).iter().filter(|p| !piece_is_fan(g, p, v)).count()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Label {
    #[serde(rename = "<-")]
    Backward,
    #[serde(rename = "->")]
    Forward,
    #[serde(rename = "<->")]
    Both,
    #[serde(rename = "none")]
    Unlabelable,
}

impl Label {
    fn allows_forward(self) -> bool {
        matches!(self, Label::Forward | Label::Both)
    }
    fn allows_backward(self) -> bool {
        matches!(self, Label::Backward | Label::Both)
    }
}

/// A vertex set of the host with its in-roots and out-roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Part {
    pub vertices: Vec<usize>,
    pub s_in: Vec<usize>,
    pub s_out: Vec<usize>,
}

impl Part {
    fn new(vertices: Bits, s_in: Bits, s_out: Bits) -> Part {
        Part { vertices: vertices.to_vec(), s_in: s_in.to_vec(), s_out: s_out.to_vec() }
    }

    fn rooted(&self, g: &Graph) -> (RootedGraph, Vec<usize>) {
        let set: Bits = self.vertices.iter().copied().collect();
        let (sub, names) = g.induced(&set);
        let local = |s: &[usize]| s.iter().map(|x| names.iter().position(|y| y == x).unwrap()).collect::<Bits>();
        let rg = RootedGraph::new(sub, local(&self.s_in), local(&self.s_out)).expect("parts are connected");
        (rg, names)
    }

    fn rev(&self) -> Part {
        Part { vertices: self.vertices.clone(), s_in: self.s_out.clone(), s_out: self.s_in.clone() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SpineStructure {
    /// `c_1, ..., c_{r+1}`.
    pub central_cuts: Vec<usize>,
    /// `B_0*, B_1*, ..., B_{r+1}*`, oriented left to right.
    pub extended_blocks: Vec<Part>,
    /// `F_1, ..., F_{r+1}`; `None` where no fan hangs at the cut-vertex.
    pub fans: Vec<Option<Part>>,
    pub labels: Vec<Label>,
}

/// The ordered spine, or `None` when a structural precondition fails.
pub fn spine_structure(g: &Graph) -> Option<SpineStructure> {
    if !g.is_connected() || g.order() < 3 {
        return None;
    }
    let degree: Vec<usize> = (0..g.order()).into_par_iter().map(|v| spine_degree(g, v)).collect();
    if degree.iter().any(|&d| d > 2) {
        return None;
    }
    let central: Vec<usize> = (0..g.order()).filter(|&v| degree[v] == 2).collect();
    if central.is_empty() {
        return None;
    }
    let cset: Bits = central.iter().copied().collect();
    // Two central cut-vertices are consecutive when no third one separates them.
    let adjacent = |a: usize, b: usize| {
        let mut rest = g.vertices().difference(&cset);
        rest.insert(a);
        rest.insert(b);
        g.reach(a, &rest).contains(b)
    };
    let nbrs: Vec<Vec<usize>> =
        central.iter().map(|&a| central.iter().copied().filter(|&b| b != a && adjacent(a, b)).collect()).collect();
    if nbrs.iter().any(|n| n.len() > 2) {
        return None;
    }
    let start = if central.len() == 1 { 0 } else { nbrs.iter().position(|n| n.len() == 1)? };
    let mut order = vec![central[start]];
    let mut prev = usize::MAX;
    loop {
        let cur = *order.last().unwrap();
        let i = central.iter().position(|&x| x == cur).unwrap();
        let Some(&nx) = nbrs[i].iter().find(|&&x| x != prev) else { break };
        prev = cur;
        order.push(nx);
    }
    if order.len() != central.len() {
        return None;
    }
    let r = order.len() - 1;
    let mut blocks = Vec::new();
    let mut fans = Vec::new();
    // Left extremal piece: the non-fan piece at c_1 avoiding c_2 (or the first non-fan piece).
    let c1 = order[0];
    let non_fans = |c: usize| -> Vec<Bits> { pieces_at(g, c).into_iter().filter(|p| !piece_is_fan(g, p, c)).collect() };
    let left_pool = non_fans(c1);
    let left = if r == 0 { left_pool.first().copied()? } else { *left_pool.iter().find(|p| !p.contains(order[1]))? };
    blocks.push(Part::new(left, Bits::EMPTY, Bits::singleton(c1)));
    for i in 0..=r {
        let c = order[i];
        let pieces = pieces_at(g, c);
        let mut fan_set = Bits::EMPTY;
        let mut non_fan = 0;
        for p in &pieces {
            if piece_is_fan(g, p, c) {
                fan_set = fan_set.union(p);
            } else {
                non_fan += 1;
            }
        }
        if non_fan != 2 {
            return None;
        }
        fans.push((!fan_set.is_empty()).then(|| Part::new(fan_set, Bits::singleton(c), Bits::singleton(c))));
        if i < r {
            let d = order[i + 1];
            let pair: Bits = [c, d].into_iter().collect();
            let rest = g.vertices().difference(&pair);
            let mut set = pair;
            for comp in g.components_within(&rest) {
                let touches_c = comp.iter().any(|x| g.has_edge(x, c));
                let touches_d = comp.iter().any(|x| g.has_edge(x, d));
                if touches_c && touches_d {
                    set = set.union(&comp);
                }
            }
            if set.len() == 2 && !g.has_edge(c, d) {
                return None;
            }
            blocks.push(Part::new(set, Bits::singleton(c), Bits::singleton(d)));
        }
    }
    let cr = order[r];
    let right_pool = non_fans(cr);
    let right = if r == 0 {
        *right_pool.iter().find(|p| **p != left)?
    } else {
        *right_pool.iter().find(|p| !p.contains(order[r - 1]))?
    };
    blocks.push(Part::new(right, Bits::singleton(cr), Bits::EMPTY));
    let labels: Vec<Label> = blocks.par_iter().map(|b| label_block(g, b)).collect();
    let s = SpineStructure { central_cuts: order, extended_blocks: blocks, fans, labels };
    s.partitions_edges(g).then_some(s)
}

impl SpineStructure {
    /// Edge sets of the extended blocks and fans partition `E(g)`.
    pub fn partitions_edges(&self, g: &Graph) -> bool {
        let mut seen = std::collections::HashSet::new();
        let parts = self.extended_blocks.iter().chain(self.fans.iter().flatten());
        for p in parts {
            let set: Bits = p.vertices.iter().copied().collect();
            let (sub, names) = g.induced(&set);
            for (a, b) in sub.edges() {
                if !seen.insert((names[a], names[b])) {
                    return false;
                }
            }
        }
        seen.len() == g.size()
    }
}

fn cmp_le_2(g: &Graph, p: &Part) -> bool {
    let (rg, _) = p.rooted(g);
    rg.in_roots_connected() && cmp_decide(&rg, 2).map(|w| w.is_some()).unwrap_or(false)
}

/// Direction in which a part can be searched with width 2.
pub fn label_block(g: &Graph, part: &Part) -> Label {
    match (cmp_le_2(g, part), cmp_le_2(g, &part.rev())) {
        (true, true) => Label::Both,
        (true, false) => Label::Forward,
        (false, true) => Label::Backward,
        (false, false) => Label::Unlabelable,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    /// Every piece around one vertex is a fan.
    FanCentre,
    /// Consistently labelled spine.
    Spine,
    /// Exact solver.
    Fallback,
}

#[derive(Clone, Debug, Serialize)]
pub struct Decision {
    pub answer: bool,
    pub route: Route,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spine: Option<SpineStructure>,
    /// Glued expansion over the enhancement of `(g, ∅, ∅)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expansion: Option<Vec<Vec<(usize, usize)>>>,
}

/// Width-2 edge order of a part, in host vertex names.
fn part_order(g: &Graph, p: &Part) -> Option<Vec<(usize, usize)>> {
    let (rg, names) = p.rooted(g);
    let h = rg.enhance();
    let ex = cmp_decide(&rg, 2).ok()??;
    let inner = h.inner_edges();
    Some(
        ex.order()
            .into_iter()
            .filter(|&e| inner.contains(e))
            .map(|e| {
                let (a, b) = h.index.edges[e];
                (names[a].min(names[b]), names[a].max(names[b]))
            })
            .collect(),
    )
}

/// Accept a concatenated order only if its prefix expansion costs at most 2.
fn certify(g: &Graph, order: &[(usize, usize)]) -> Option<Vec<Vec<(usize, usize)>>> {
    let h = RootedGraph::unrooted(g.clone()).ok()?.enhance();
    let ids: Vec<usize> = order.iter().map(|&(a, b)| h.index.edge_id(a, b)).collect::<Option<_>>()?;
    let ex = Expansion::from_order(&h, &ids);
    let ok = crate::search::validate(&h, &ex).ok()?;
    (ok.connected && ok.monotone && expansion_cost(&h, &ex).ok()? <= 2).then(|| ex.edge_lists(&h.index))
}

fn fan_centre(g: &Graph) -> Option<Vec<Vec<(usize, usize)>>> {
    (0..g.order()).find_map(|v| {
        let pieces = pieces_at(g, v);
        if !pieces.iter().all(|p| piece_is_fan(g, p, v)) {
            return None;
        }
        let mut order = Vec::new();
        for p in pieces {
            order.extend(part_order(g, &Part::new(p, Bits::singleton(v), Bits::singleton(v)))?);
        }
        certify(g, &order)
    })
}

fn spine_route(g: &Graph, s: &SpineStructure) -> Option<Vec<Vec<(usize, usize)>>> {
    let forward = s.labels.iter().all(|l| l.allows_forward());
    let backward = s.labels.iter().all(|l| l.allows_backward());
    let mut seq: Vec<Part> = Vec::new();
    for (i, b) in s.extended_blocks.iter().enumerate() {
        seq.push(b.clone());
        if let Some(Some(f)) = s.fans.get(i) {
            seq.push(f.clone());
        }
    }
    let attempt = |parts: Vec<Part>| -> Option<Vec<Vec<(usize, usize)>>> {
        let mut order = Vec::new();
        for p in &parts {
            order.extend(part_order(g, p)?);
        }
        certify(g, &order)
    };
    if forward {
        if let Some(c) = attempt(seq.clone()) {
            return Some(c);
        }
    }
    if backward {
        return attempt(seq.iter().rev().map(Part::rev).collect());
    }
    None
}

/// `cmp(g, ∅, ∅) <= 2`, with a glued certificate when the fast path applies.
pub fn decide_cmms_le_2(g: &Graph) -> Result<Decision> {
    if g.size() == 0 {
        let h = RootedGraph::unrooted(g.clone())?.enhance();
        let ex = Expansion { sets: vec![Bits::EMPTY] };
        return Ok(Decision {
            answer: true,
            route: Route::FanCentre,
            spine: None,
            expansion: Some(ex.edge_lists(&h.index)),
        });
    }
    if let Some(ex) = fan_centre(g) {
        return Ok(Decision { answer: true, route: Route::FanCentre, spine: None, expansion: Some(ex) });
    }
    let spine = spine_structure(g);
    if let Some(s) = &spine {
        if let Some(ex) = spine_route(g, s) {
            return Ok(Decision { answer: true, route: Route::Spine, spine, expansion: Some(ex) });
        }
    }
    let rg = RootedGraph::unrooted(g.clone())?;
    let w = cmp_decide(&rg, 2)?;
    let expansion = w.map(|ex| ex.edge_lists(&rg.enhance().index));
    Ok(Decision { answer: expansion.is_some(), route: Route::Fallback, spine, expansion })
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Coverage {
    pub graphs: usize,
    pub fan_centre: usize,
    pub spine: usize,
    pub fallback_true: usize,
    pub fallback_false: usize,
}

impl Coverage {
    pub fn record(&mut self, d: &Decision) {
        self.graphs += 1;
        match (d.route, d.answer) {
            (Route::FanCentre, _) => self.fan_centre += 1,
            (Route::Spine, _) => self.spine += 1,
            (Route::Fallback, true) => self.fallback_true += 1,
            (Route::Fallback, false) => self.fallback_false += 1,
        }
    }
}
