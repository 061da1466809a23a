//! Direct search over game states (clean edge set, occupied vertices).

use std::collections::{HashMap, VecDeque};

use crate::bitset::Bits;
use crate::error::{Error, Result};
use crate::rooted::Enhancement;
use crate::search::moves::{entry_zone, recontaminate, Move};

#[derive(Clone, Copy, Debug, Default)]
pub struct GameQuery {
    /// Forbid moves after which a previously clean edge is contaminated.
    pub monotone: bool,
    /// The clean set must induce a connected subgraph after every move.
    pub connected: bool,
    pub budget: Option<u64>,
    /// Forbid sliding a searcher off a degree-one vertex of the original graph.
    pub no_pendant_departure: bool,
}

type State = (Bits, Bits, bool);

/// Breadth-first search for a strategy with at most `k` searchers that is
/// complete for the rooted graph behind `h`. Searchers never enter `u_out`,
/// so out-edges stay contaminated. Returns the move list and the number of
/// visited states.
pub fn decide_game(h: &Enhancement, k: usize, q: GameQuery) -> Result<(Option<Vec<Move>>, u64)> {
    let idx = &h.index;
    let target = h.target();
    let zone = entry_zone(h);
    let guard = idx.boundary(&h.e_in);
    let mut usable = Bits::full(h.n);
    if !h.s_in.is_empty() {
        usable.insert(h.u_in);
    }
    // Until the search passes a clean set between `E_in` and the entry zone
    // with the boundary of `E_in` guarded, the clean set must stay inside the
    // entry zone. The flag records passage.
    let entered = |e: &Bits, o: &Bits| h.e_in.is_subset(e) && e.is_subset(&zone) && guard.is_subset(o);
    let start: State = (Bits::EMPTY, Bits::EMPTY, entered(&Bits::EMPTY, &Bits::EMPTY));
    let mut parent: HashMap<State, (State, Move)> = HashMap::new();
    parent.insert(start, (start, Move::p(0)));
    let mut queue = VecDeque::from([start]);
    let mut visited: u64 = 0;
    let goal = |s: &State| s.2 && s.0 == target;
    if goal(&start) {
        return Ok((Some(vec![]), 1));
    }
    while let Some(s) = queue.pop_front() {
        visited += 1;
        if let Some(b) = q.budget {
            if visited > b {
                return Err(Error::BudgetExceeded);
            }
        }
        let (clean, occ, was) = s;
        let mut moves: Vec<Move> = Vec::new();
        if occ.len() < k {
            moves.extend(usable.difference(&occ).iter().map(Move::p));
        }
        moves.extend(occ.iter().map(Move::r));
        for v in occ.iter() {
            if q.no_pendant_departure && v < h.u_in && idx.graph.degree(v) == 1 {
                continue;
            }
            for u in idx.graph.neighbors(v).intersection(&usable).difference(&occ).iter() {
                moves.push(Move::s(v, u));
            }
        }
        for m in moves {
            let mut next_occ = occ;
            let mut cleaned;
            match m {
                Move::Place { v } => {
                    next_occ.insert(v);
                    cleaned = edges_to(idx, v, &occ);
                }
                Move::Remove { v } => {
                    next_occ.remove(v);
                    cleaned = Bits::EMPTY;
                }
                Move::Slide { v, u } => {
                    next_occ.remove(v);
                    next_occ.insert(u);
                    cleaned = edges_to(idx, u, &next_occ);
                    cleaned.insert(idx.edge_id(v, u).unwrap());
                }
            }
            let qset = clean.union(&cleaned);
            let next_clean = recontaminate(idx, &qset, &next_occ);
            if q.monotone && !clean.is_subset(&next_clean) {
                continue;
            }
            if q.connected && !idx.edges_connected(&next_clean) {
                continue;
            }
            if !was && !next_clean.is_subset(&zone) {
                continue;
            }
            let now = was || entered(&next_clean, &next_occ);
            let ns = (next_clean, next_occ, now);
            if parent.contains_key(&ns) {
                continue;
            }
            parent.insert(ns, (s, m));
            if goal(&ns) {
                let mut out = vec![m];
                let mut cur = s;
                while cur != start {
                    let (p, pm) = parent[&cur];
                    out.push(pm);
                    cur = p;
                }
                out.reverse();
                return Ok((Some(out), visited));
            }
            queue.push_back(ns);
        }
    }
    Ok((None, visited))
}

/// Edges between `v` and the vertices of `occ`.
fn edges_to(idx: &crate::graph::EdgeIndex, v: usize, occ: &Bits) -> Bits {
    let mut out = Bits::EMPTY;
    for w in idx.graph.neighbors(v).intersection(occ).iter() {
        out.insert(idx.edge_id(v, w).unwrap());
    }
    out
}

/// Smallest number of searchers admitting a strategy, with the strategy.
pub fn game_value(h: &Enhancement, q: GameQuery) -> Result<(usize, Vec<Move>, u64)> {
    let mut total = 0;
    for k in 0..=h.host().order() {
        let (w, s) = decide_game(h, k, q)?;
        total += s;
        if let Some(w) = w {
            return Ok((k, w, total));
        }
    }
    Err(Error::Invalid("no complete strategy found".into()))
}
