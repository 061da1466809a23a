//! Expansions: sequences of edge sets over an enhanced graph, and their cost.

use serde::Serialize;

use crate::bitset::Bits;
use crate::error::{Error, Result};
use crate::graph::EdgeIndex;
use crate::rooted::Enhancement;

/// Ordered list `⟨A_1, ..., A_r⟩` of edge sets over an enhancement host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    pub sets: Vec<Bits>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExpansionFlags {
    pub monotone: bool,
    pub connected: bool,
}

impl Expansion {
    /// Prefix sequence `⟨E_in, E_in + e_1, E_in + e_1 + e_2, ...⟩`; edges of
    /// `order` already in `E_in` are skipped.
    pub fn from_order(h: &Enhancement, order: &[usize]) -> Expansion {
        let mut cur = h.e_in;
        let mut sets = vec![cur];
        for &e in order {
            if !cur.contains(e) {
                cur.insert(e);
                sets.push(cur);
            }
        }
        Expansion { sets }
    }

    /// For a monotone expansion, the edges in the order they are added.
    pub fn order(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for w in self.sets.windows(2) {
            out.extend(w[1].difference(&w[0]).iter());
        }
        out
    }

    /// Edge sets as vertex pairs of the host.
    pub fn edge_lists(&self, idx: &EdgeIndex) -> Vec<Vec<(usize, usize)>> {
        self.sets.iter().map(|s| idx.edge_list(s)).collect()
    }

    pub fn from_edge_lists(idx: &EdgeIndex, lists: &[Vec<(usize, usize)>]) -> Result<Expansion> {
        let sets = lists.iter().map(|l| idx.edge_set(l)).collect::<Result<Vec<_>>>()?;
        Ok(Expansion { sets })
    }

    /// Drop consecutive repeats.
    pub fn dedup(&self) -> Expansion {
        let mut sets = self.sets.clone();
        sets.dedup();
        Expansion { sets }
    }
}

/// Cost at a position: `|∂(cur)| + q`, where `added` is `A_i \ A_{i-1}`
/// (empty at the first position).
pub fn position_cost(idx: &EdgeIndex, added: &Bits, cur: &Bits) -> usize {
    let g = &idx.graph;
    let pendant = |e: usize| {
        let (u, v) = idx.edges[e];
        g.degree(u) <= 1 || g.degree(v) <= 1
    };
    let q = if cur.len() >= 2 {
        added.iter().any(pendant)
    } else if cur.len() == 1 {
        let (u, v) = idx.edges[cur.first().unwrap()];
        g.degree(u) <= 1 && g.degree(v) <= 1
    } else {
        false
    };
    idx.boundary(cur).len() + q as usize
}

/// Check conditions 1-4 and report the monotone (6) and connected (5) flags.
pub fn validate(h: &Enhancement, ex: &Expansion) -> Result<ExpansionFlags> {
    let r = ex.sets.len();
    if r == 0 {
        return Err(Error::InvalidExpansion("empty sequence".into()));
    }
    let all = h.index.all_edges();
    let allowed = all.difference(&h.e_out);
    for (i, a) in ex.sets.iter().enumerate() {
        if !a.is_subset(&all) {
            return Err(Error::InvalidExpansion(format!("A_{} contains a non-edge", i + 1)));
        }
        if i + 1 < r && !(h.e_in.is_subset(a) && a.is_subset(&allowed)) {
            return Err(Error::InvalidExpansion(format!(
                "condition 1 fails at A_{}: must contain E_in and avoid E_out",
                i + 1
            )));
        }
    }
    for i in 0..r.saturating_sub(1) {
        if ex.sets[i + 1].difference(&ex.sets[i]).len() > 1 {
            return Err(Error::InvalidExpansion(format!("condition 2 fails: A_{} adds more than one edge", i + 2)));
        }
    }
    if ex.sets[0] != h.e_in {
        return Err(Error::InvalidExpansion("condition 3 fails: A_1 != E_in".into()));
    }
    if ex.sets[r - 1] != allowed {
        return Err(Error::InvalidExpansion("condition 4 fails: A_r != E(G*) \\ E_out".into()));
    }
    let connected = ex.sets.iter().all(|a| h.index.edges_connected(a));
    let monotone = ex.sets.windows(2).all(|w| w[0].is_subset(&w[1]));
    Ok(ExpansionFlags { monotone, connected })
}

/// Per-position costs, positions `1..=r`.
pub fn position_costs(h: &Enhancement, ex: &Expansion) -> Vec<usize> {
    let mut out = Vec::with_capacity(ex.sets.len());
    for (i, a) in ex.sets.iter().enumerate() {
        let added = if i == 0 { Bits::EMPTY } else { a.difference(&ex.sets[i - 1]) };
        out.push(position_cost(&h.index, &added, a));
    }
    out
}

/// Cost of a valid expansion: the maximum position cost over all positions.
pub fn expansion_cost(h: &Enhancement, ex: &Expansion) -> Result<usize> {
    validate(h, ex)?;
    Ok(position_costs(h, ex).into_iter().max().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::rooted::RootedGraph;

    #[test]
    fn isolated_edge() {
        let h = RootedGraph::unrooted(Graph::path(2)).unwrap().enhance();
        let e = h.index.edge_id(0, 1).unwrap();
        let ex = Expansion { sets: vec![Bits::EMPTY, Bits::singleton(e)] };
        assert_eq!(expansion_cost(&h, &ex).unwrap(), 1);
    }

    #[test]
    fn claw_prefix() {
        let h = RootedGraph::unrooted(Graph::star(3)).unwrap().enhance();
        let order: Vec<usize> = [(0, 1), (0, 2), (0, 3)].iter().map(|&(a, b)| h.index.edge_id(a, b).unwrap()).collect();
        let ex = Expansion::from_order(&h, &order);
        assert_eq!(position_costs(&h, &ex), vec![0, 1, 2, 1]);
        assert_eq!(expansion_cost(&h, &ex).unwrap(), 2);
    }

    #[test]
    fn single_set() {
        let h = RootedGraph::unrooted(Graph::new(1)).unwrap().enhance();
        assert_eq!(expansion_cost(&h, &Expansion { sets: vec![Bits::EMPTY] }).unwrap(), 0);
        let h = RootedGraph::new(Graph::new(1), Bits::singleton(0), Bits::EMPTY).unwrap().enhance();
        assert_eq!(expansion_cost(&h, &Expansion { sets: vec![h.e_in] }).unwrap(), 1);
    }

    #[test]
    fn invalid_conditions() {
        let h = RootedGraph::unrooted(Graph::path(3)).unwrap().enhance();
        let all = h.index.all_edges();
        let err = expansion_cost(&h, &Expansion { sets: vec![Bits::EMPTY, all] }).unwrap_err();
        assert!(err.to_string().contains("condition 2"));
        let err = expansion_cost(&h, &Expansion { sets: vec![all] }).unwrap_err();
        assert!(err.to_string().contains("condition 3"));
    }
}
