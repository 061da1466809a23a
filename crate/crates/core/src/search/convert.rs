//! Translations between monotone connected strategies and expansions.

use crate::bitset::Bits;
use crate::error::{Error, Result};
use crate::rooted::Enhancement;
use crate::search::expansion::{validate, Expansion};
use crate::search::moves::{simulate_indexed, Move};

/// Apply the normalisation rule until every set after which the vertex set
/// grows already contains all edges among its vertices.
pub fn normalise(h: &Enhancement, ex: &Expansion) -> Expansion {
    let idx = &h.index;
    let mut sets = ex.dedup().sets;
    let mut i = 0;
    while i + 1 < sets.len() {
        let vi = idx.vertices_of(&sets[i]);
        let grows = vi != idx.vertices_of(&sets[i + 1]);
        let missing = idx.edges_within(&vi).difference(&sets[i]);
        if grows && !missing.is_empty() {
            let base = sets[i];
            let mut inserted = Vec::new();
            let mut cur = base;
            for e in missing.iter() {
                cur.insert(e);
                inserted.push(cur);
            }
            let tail: Vec<Bits> = sets[i + 1..].iter().map(|a| a.union(&missing)).collect();
            sets.truncate(i + 1);
            sets.extend(inserted);
            sets.extend(tail);
            sets.dedup();
        }
        i += 1;
    }
    Expansion { sets }
}

/// Build an `(S_in, S_out)`-complete monotone connected strategy on the
/// enhancement from a monotone connected expansion.
pub fn expansion_to_strategy(h: &Enhancement, ex: &Expansion) -> Result<Vec<Move>> {
    let flags = validate(h, ex)?;
    if !flags.monotone {
        return Err(Error::InvalidExpansion("expansion is not monotone".into()));
    }
    if !flags.connected {
        return Err(Error::InvalidExpansion("expansion is not connected".into()));
    }
    let idx = &h.index;
    let sets = normalise(h, ex).sets;
    let r = sets.len();
    let mut moves = Vec::new();
    let mut occ = vec![0u32; idx.graph.order()];
    let roots = h.s_in.to_vec();
    for _ in &roots {
        moves.push(Move::p(h.u_in));
    }
    for &v in &roots {
        moves.push(Move::s(h.u_in, v));
        occ[v] += 1;
    }
    // Positions where a new vertex appears.
    let growth: Vec<usize> = (1..r).filter(|&l| idx.vertices_of(&sets[l]) != idx.vertices_of(&sets[l - 1])).collect();
    let group_end = |g: usize| if g + 1 < growth.len() { growth[g + 1] - 1 } else { r - 1 };
    let tidy = |end: usize, occ: &mut Vec<u32>, moves: &mut Vec<Move>| {
        let keep = idx.boundary(&sets[end]);
        for v in 0..occ.len() {
            while occ[v] > 0 && !keep.contains(v) {
                occ[v] -= 1;
                moves.push(Move::r(v));
            }
        }
    };
    let first_end = growth.first().map_or(r - 1, |&l| l - 1);
    tidy(first_end, &mut occ, &mut moves);
    for (g, &l) in growth.iter().enumerate() {
        let before = idx.vertices_of(&sets[l - 1]);
        let added = sets[l].difference(&sets[l - 1]);
        let e = added.first().expect("growth position adds an edge");
        let (a, b) = idx.edges[e];
        let here = idx.boundary(&sets[l]);
        if !before.contains(a) && !before.contains(b) {
            match (here.contains(a), here.contains(b)) {
                (true, true) => {
                    moves.extend([Move::p(a), Move::p(b)]);
                    occ[a] += 1;
                    occ[b] += 1;
                }
                (true, false) => {
                    moves.extend([Move::p(b), Move::s(b, a)]);
                    occ[a] += 1;
                }
                (false, true) => {
                    moves.extend([Move::p(a), Move::s(a, b)]);
                    occ[b] += 1;
                }
                (false, false) => {
                    moves.extend([Move::p(a), Move::s(a, b)]);
                    occ[b] += 1;
                }
            }
        } else {
            let (u, v) = if before.contains(a) { (b, a) } else { (a, b) };
            if here.contains(v) {
                moves.push(Move::p(u));
            } else {
                moves.push(Move::s(v, u));
                occ[v] -= 1;
            }
            occ[u] += 1;
        }
        if group_end(g) + 1 < r {
            tidy(group_end(g), &mut occ, &mut moves);
        }
    }
    Ok(moves)
}

/// Read off a monotone connected expansion from a strategy on the enhancement.
/// Within each move the sliding edge comes first; in-edges are moved to the front.
pub fn strategy_to_expansion(h: &Enhancement, moves: &[Move]) -> Result<Expansion> {
    let t = simulate_indexed(&h.index, moves)?;
    if !t.is_monotone() {
        return Err(Error::BadStrategy("monotone".into()));
    }
    if !t.is_connected() {
        return Err(Error::BadStrategy("connected".into()));
    }
    if !t.is_rooted_complete(h) {
        return Err(Error::BadStrategy("complete for the given roots".into()));
    }
    let mut order = Vec::new();
    for w in t.steps.windows(2) {
        let new = w[1].clean.difference(&w[0].clean);
        if let Some(s) = w[1].sliding.filter(|&s| new.contains(s)) {
            order.push(s);
        }
        order.extend(new.iter().filter(|&e| Some(e) != w[1].sliding));
    }
    let target = h.target();
    let order: Vec<usize> = order.into_iter().filter(|&e| target.contains(e)).collect();
    Ok(Expansion::from_order(h, &order))
}
