//! Exact search for cheap monotone expansions (`cmp`, `mp`).

use std::collections::HashSet;

use crate::bitset::Bits;
use crate::error::{Error, Result};
use crate::rooted::Enhancement;
use crate::search::expansion::{position_cost, Expansion};

/// Options for the expansion search.
#[derive(Clone, Copy, Debug, Default)]
pub struct ExpansionQuery {
    /// Require every set to induce a connected subgraph.
    pub connected: bool,
    /// The first added edge must lie in this set.
    pub first_in: Option<Bits>,
    /// The last added edge must lie in this set.
    pub last_in: Option<Bits>,
    /// Give up after this many expanded states.
    pub budget: Option<u64>,
}

struct Ctx<'a> {
    h: &'a Enhancement,
    k: usize,
    q: ExpansionQuery,
    target: Bits,
    failed: HashSet<Bits>,
    states: u64,
}

impl Ctx<'_> {
    /// Edges with both endpoints already covered; adding them never raises
    /// the cost and never hurts later positions.
    fn absorb(&self, a: &Bits, path: &mut Vec<Bits>) -> Bits {
        let idx = &self.h.index;
        let mut cur = *a;
        let inside = idx.edges_within(&idx.vertices_of(&cur)).intersection(&self.target).difference(&cur);
        for e in inside.iter() {
            if let Some(l) = self.q.last_in {
                if l.contains(e) || cur.len() + 1 == self.target.len() {
                    continue;
                }
            }
            let mut next = cur;
            next.insert(e);
            if position_cost(idx, &Bits::singleton(e), &next) > self.k {
                break;
            }
            cur = next;
            path.push(cur);
        }
        cur
    }

    fn dfs(&mut self, a: Bits, path: &mut Vec<Bits>) -> Result<bool> {
        if a == self.target {
            return Ok(true);
        }
        if self.failed.contains(&a) {
            return Ok(false);
        }
        self.states += 1;
        if let Some(b) = self.q.budget {
            if self.states > b {
                return Err(Error::BudgetExceeded);
            }
        }
        let idx = &self.h.index;
        let covered = idx.vertices_of(&a);
        let first_step = a == self.h.e_in;
        let mut cands: Vec<(usize, usize)> = Vec::new();
        for e in self.target.difference(&a).iter() {
            let (u, v) = idx.edges[e];
            if self.q.connected && !a.is_empty() && !covered.contains(u) && !covered.contains(v) {
                continue;
            }
            if first_step {
                if let Some(f) = self.q.first_in {
                    if !f.contains(e) {
                        continue;
                    }
                }
            }
            let mut next = a;
            next.insert(e);
            if next == self.target {
                if let Some(l) = self.q.last_in {
                    if !l.contains(e) {
                        continue;
                    }
                }
            }
            let c = position_cost(idx, &Bits::singleton(e), &next);
            if c <= self.k {
                cands.push((c, e));
            }
        }
        cands.sort_unstable();
        for (_, e) in cands {
            let mut next = a;
            next.insert(e);
            let mark = path.len();
            path.push(next);
            let next = self.absorb(&next, path);
            if self.dfs(next, path)? {
                return Ok(true);
            }
            path.truncate(mark);
        }
        self.failed.insert(a);
        Ok(false)
    }
}

/// Decide whether a monotone (optionally connected) expansion of cost at most
/// `k` exists; returns the witness and the number of expanded states.
pub fn decide_expansion(h: &Enhancement, k: usize, q: ExpansionQuery) -> Result<(Option<Expansion>, u64)> {
    let start = h.e_in;
    if position_cost(&h.index, &Bits::EMPTY, &start) > k {
        return Ok((None, 0));
    }
    let mut ctx = Ctx { h, k, q, target: h.target(), failed: HashSet::new(), states: 0 };
    let mut path = vec![start];
    let found = if q.first_in.is_some() {
        ctx.dfs(start, &mut path)?
    } else {
        let a = ctx.absorb(&start, &mut path);
        ctx.dfs(a, &mut path)?
    };
    let states = ctx.states;
    Ok((found.then_some(Expansion { sets: path }), states))
}

/// Smallest `k` admitting an expansion, with its witness.
pub fn expansion_value(h: &Enhancement, q: ExpansionQuery) -> Result<(usize, Expansion, u64)> {
    let mut total = 0;
    let cap = h.host().order() + 2;
    for k in 0..=cap {
        let (w, s) = decide_expansion(h, k, q)?;
        total += s;
        if let Some(w) = w {
            return Ok((k, w, total));
        }
    }
    Err(Error::Invalid("no expansion satisfies the constraints".into()))
}
