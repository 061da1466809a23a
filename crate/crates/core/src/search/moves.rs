//! Move semantics of mixed searching and the trace simulator.

use serde::{Deserialize, Serialize};

use crate::bitset::Bits;
use crate::error::{Error, Result};
use crate::graph::{EdgeIndex, Graph};
use crate::rooted::Enhancement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "op")]
pub enum Move {
    /// Place a searcher on `v`.
    #[serde(rename = "p")]
    Place { v: usize },
    /// Remove a searcher from `v`.
    #[serde(rename = "r")]
    Remove { v: usize },
    /// Slide a searcher from `v` to `u` along the edge `{v, u}`.
    #[serde(rename = "s")]
    Slide { v: usize, u: usize },
}

impl Move {
    pub fn p(v: usize) -> Move {
        Move::Place { v }
    }
    pub fn r(v: usize) -> Move {
        Move::Remove { v }
    }
    pub fn s(v: usize, u: usize) -> Move {
        Move::Slide { v, u }
    }
}

impl std::fmt::Display for Move {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Move::Place { v } => write!(f, "p({v})"),
            Move::Remove { v } => write!(f, "r({v})"),
            Move::Slide { v, u } => write!(f, "s({v},{u})"),
        }
    }
}

/// State after one move. Step 0 is the initial state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    /// Searcher count per vertex.
    pub searchers: Vec<u32>,
    /// `E(S, i)`.
    pub clean: Bits,
    /// `E^(i)`: edges cleaned by this move that were not clean before it.
    pub newly: Bits,
    /// `Q_i = E(S, i-1) ∪ E^(i)`, before recontamination.
    pub pre_closure: Bits,
    /// Edge cleaned by sliding in this move, if any.
    pub sliding: Option<usize>,
    /// Some previously clean edge became contaminated.
    pub recontaminated: bool,
}

impl Step {
    pub fn occupied(&self) -> Bits {
        (0..self.searchers.len()).filter(|&v| self.searchers[v] > 0).collect()
    }

    pub fn count(&self) -> usize {
        self.searchers.iter().map(|&c| c as usize).sum()
    }
}

#[derive(Clone, Debug)]
pub struct Trace {
    pub index: EdgeIndex,
    pub moves: Vec<Move>,
    pub steps: Vec<Step>,
}

/// Remove from `q` every edge that has a path to an edge outside `q` whose
/// internal vertices are all unguarded.
pub fn recontaminate(idx: &EdgeIndex, q: &Bits, guarded: &Bits) -> Bits {
    let n = idx.graph.order();
    let all = idx.all_edges();
    let dirty = all.difference(q);
    let unguarded = Bits::full(n).difference(guarded);
    let mut seeds = Bits::EMPTY;
    for v in unguarded.iter() {
        if idx.incident[v].intersects(&dirty) {
            seeds.insert(v);
        }
    }
    let mut spread = seeds;
    let mut frontier = seeds;
    while !frontier.is_empty() {
        let mut next = Bits::EMPTY;
        for v in frontier.iter() {
            next |= idx.graph.neighbors(v);
        }
        next = next.intersection(&unguarded).difference(&spread);
        spread |= next;
        frontier = next;
    }
    let mut out = *q;
    for v in spread.iter() {
        out = out.difference(&idx.incident[v]);
    }
    out
}

/// Run `moves` on `g` from the all-contaminated state.
pub fn simulate(g: &Graph, moves: &[Move]) -> Result<Trace> {
    let idx = EdgeIndex::new(g.clone())?;
    simulate_indexed(&idx, moves)
}

pub fn simulate_indexed(idx: &EdgeIndex, moves: &[Move]) -> Result<Trace> {
    let n = idx.graph.order();
    let mut searchers = vec![0u32; n];
    let mut clean = Bits::EMPTY;
    let mut steps = vec![Step {
        searchers: searchers.clone(),
        clean,
        newly: Bits::EMPTY,
        pre_closure: Bits::EMPTY,
        sliding: None,
        recontaminated: false,
    }];
    for (i, &m) in moves.iter().enumerate() {
        let step = i + 1;
        let bad = |msg: String| Error::InvalidMove { step, msg };
        let check = |v: usize| if v < n { Ok(()) } else { Err(bad(format!("vertex {v} out of range"))) };
        let mut sliding = None;
        match m {
            Move::Place { v } => {
                check(v)?;
                searchers[v] += 1;
            }
            Move::Remove { v } => {
                check(v)?;
                if searchers[v] == 0 {
                    return Err(bad(format!("no searcher on {v}")));
                }
                searchers[v] -= 1;
            }
            Move::Slide { v, u } => {
                check(v)?;
                check(u)?;
                if searchers[v] == 0 {
                    return Err(bad(format!("no searcher on {v}")));
                }
                let e = idx.edge_id(v, u).ok_or_else(|| bad(format!("{{{v},{u}}} is not an edge")))?;
                searchers[v] -= 1;
                searchers[u] += 1;
                sliding = Some(e);
            }
        }
        let occupied: Bits = (0..n).filter(|&v| searchers[v] > 0).collect();
        let mut cleaned = idx.edges_within(&occupied);
        if let Some(e) = sliding {
            cleaned.insert(e);
        }
        let newly = cleaned.difference(&clean);
        let q = clean.union(&newly);
        let next = recontaminate(idx, &q, &occupied);
        let recontaminated = !clean.is_subset(&next);
        steps.push(Step { searchers: searchers.clone(), clean: next, newly, pre_closure: q, sliding, recontaminated });
        clean = next;
    }
    Ok(Trace { index: idx.clone(), moves: moves.to_vec(), steps })
}

impl Trace {
    /// Maximum number of searchers on the graph.
    pub fn width(&self) -> usize {
        self.steps.iter().map(Step::count).max().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        let all = self.index.all_edges();
        self.steps.iter().any(|s| s.clean == all)
    }

    pub fn is_monotone(&self) -> bool {
        self.steps.windows(2).all(|w| w[0].clean.is_subset(&w[1].clean))
    }

    pub fn is_connected(&self) -> bool {
        self.steps.iter().all(|s| self.index.edges_connected(&s.clean))
    }

    pub fn clean_sets(&self) -> Vec<Bits> {
        self.steps.iter().map(|s| s.clean).collect()
    }

    /// Completeness for a rooted graph, checked on a trace over its enhancement:
    /// no out-edge is ever clean, the target `E(G*) \ E_out` is reached, and the
    /// search passes a state whose clean set contains the in-edges and lies
    /// inside `G*[S_in ∪ {u_in}]` while the boundary of the in-edges is
    /// guarded, before which it stays inside that subgraph.
    pub fn is_rooted_complete(&self, h: &Enhancement) -> bool {
        if self.steps.iter().any(|s| s.clean.intersects(&h.e_out)) {
            return false;
        }
        let target = h.target();
        if !self.steps.iter().any(|s| s.clean == target) {
            return false;
        }
        entry_ok(h, self.steps.iter().map(|s| (s.clean, s.occupied())))
    }
}

/// Edges of `G*[S_in ∪ {u_in}]`.
pub fn entry_zone(h: &Enhancement) -> Bits {
    let mut vs = h.s_in;
    vs.insert(h.u_in);
    h.index.edges_within(&vs)
}

fn entry_ok(h: &Enhancement, states: impl Iterator<Item = (Bits, Bits)>) -> bool {
    let zone = entry_zone(h);
    let guard = h.index.boundary(&h.e_in);
    for (e, occ) in states {
        if !e.is_subset(&zone) {
            return false;
        }
        if h.e_in.is_subset(&e) && guard.is_subset(&occ) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(t: &Trace, list: &[(usize, usize)]) -> Bits {
        t.index.edge_set(list).unwrap()
    }

    #[test]
    fn triangle_trace() {
        let t = simulate(&Graph::complete(3), &[Move::p(0), Move::p(1), Move::s(0, 2)]).unwrap();
        let sets = t.clean_sets();
        assert_eq!(sets[1], Bits::EMPTY);
        assert_eq!(sets[2], ids(&t, &[(0, 1)]));
        assert_eq!(sets[3], ids(&t, &[(0, 1), (0, 2), (1, 2)]));
        assert!(t.is_complete() && t.is_monotone() && t.is_connected());
        assert_eq!(t.width(), 2);
    }

    #[test]
    fn path_recontamination() {
        let t = simulate(&Graph::path(3), &[Move::p(0), Move::s(0, 1), Move::r(1)]).unwrap();
        assert_eq!(t.steps[2].clean, ids(&t, &[(0, 1)]));
        assert!(t.steps[3].clean.is_empty());
        assert!(t.steps[3].recontaminated);
        assert!(!t.is_monotone());
    }

    #[test]
    fn empty_moves() {
        let t = simulate(&Graph::path(2), &[]).unwrap();
        assert_eq!(t.steps.len(), 1);
        assert!(!t.is_complete());
        assert!(simulate(&Graph::new(1), &[]).unwrap().is_complete());
    }

    #[test]
    fn ill_formed() {
        let e = simulate(&Graph::path(3), &[Move::p(0), Move::s(0, 2)]).unwrap_err();
        assert!(matches!(e, Error::InvalidMove { step: 2, .. }));
        let e = simulate(&Graph::path(3), &[Move::r(1)]).unwrap_err();
        assert!(matches!(e, Error::InvalidMove { step: 1, .. }));
    }

    #[test]
    fn move_json() {
        let s = serde_json::to_string(&Move::s(1, 2)).unwrap();
        assert_eq!(s, r#"{"op":"s","v":1,"u":2}"#);
        let m: Move = serde_json::from_str(r#"{"op":"p","v":4}"#).unwrap();
        assert_eq!(m, Move::p(4));
    }
}
