//! Mixed search semantics and exact search numbers.

pub mod convert;
pub mod expansion;
pub mod game;
pub mod moves;
pub mod solver;

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rooted::RootedGraph;

pub use convert::{expansion_to_strategy, normalise, strategy_to_expansion};
pub use expansion::{expansion_cost, position_costs, validate, Expansion, ExpansionFlags};
pub use game::{decide_game, game_value, GameQuery};
pub use moves::{recontaminate, simulate, simulate_indexed, Move, Step, Trace};
pub use solver::{decide_expansion, expansion_value, ExpansionQuery};

/// Search parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Param {
    /// Monotone mixed search (direct game search).
    Ms,
    /// Connected mixed search, recontamination allowed (direct game search).
    Cms,
    /// Connected monotone mixed search (direct game search).
    Cmms,
    /// Connected monotone expansions.
    Cmp,
    /// Monotone expansions.
    Mp,
}

impl std::str::FromStr for Param {
    type Err = Error;
    fn from_str(s: &str) -> Result<Param> {
        Ok(match s {
            "ms" => Param::Ms,
            "cms" => Param::Cms,
            "cmms" => Param::Cmms,
            "cmp" => Param::Cmp,
            "mp" => Param::Mp,
            _ => return Err(Error::Invalid(format!("unknown parameter {s:?}"))),
        })
    }
}

impl std::fmt::Display for Param {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Param::Ms => "ms",
            Param::Cms => "cms",
            Param::Cmms => "cmms",
            Param::Cmp => "cmp",
            Param::Mp => "mp",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Witness {
    /// Edge sets over the enhancement (`u_in = n`, `u_out = n + 1`).
    Expansion(Vec<Vec<(usize, usize)>>),
    /// Moves over the enhancement.
    Strategy(Vec<Move>),
}

#[derive(Clone, Debug, Serialize)]
pub struct SolveResult {
    pub value: usize,
    pub witness: Witness,
    pub states: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

fn check_roots(rg: &RootedGraph) -> Result<()> {
    if rg.in_roots_connected() {
        Ok(())
    } else {
        Err(Error::RootsDisconnected)
    }
}

/// A monotone connected expansion of cost at most `k`, if one exists.
pub fn cmp_decide(rg: &RootedGraph, k: usize) -> Result<Option<Expansion>> {
    check_roots(rg)?;
    let q = ExpansionQuery { connected: true, ..Default::default() };
    Ok(decide_expansion(&rg.enhance(), k, q)?.0)
}

pub fn cmp_value(rg: &RootedGraph) -> Result<SolveResult> {
    check_roots(rg)?;
    expansion_result(rg, ExpansionQuery { connected: true, ..Default::default() })
}

pub fn mp_decide(rg: &RootedGraph, k: usize) -> Result<Option<Expansion>> {
    Ok(decide_expansion(&rg.enhance(), k, ExpansionQuery::default())?.0)
}

pub fn mp_value(rg: &RootedGraph) -> Result<SolveResult> {
    expansion_result(rg, ExpansionQuery::default())
}

fn expansion_result(rg: &RootedGraph, q: ExpansionQuery) -> Result<SolveResult> {
    let t = Instant::now();
    let h = rg.enhance();
    let (value, ex, states) = expansion_value(&h, q)?;
    Ok(SolveResult { value, witness: Witness::Expansion(ex.edge_lists(&h.index)), states, elapsed: t.elapsed() })
}

fn game_result(rg: &RootedGraph, q: GameQuery) -> Result<SolveResult> {
    let t = Instant::now();
    let (value, moves, states) = game_value(&rg.enhance(), q)?;
    Ok(SolveResult { value, witness: Witness::Strategy(moves), states, elapsed: t.elapsed() })
}

/// Connected strategy with at most `k` searchers, recontamination allowed.
pub fn cms_decide(g: &Graph, k: usize) -> Result<Option<Vec<Move>>> {
    let rg = RootedGraph::unrooted(g.clone())?;
    let q = GameQuery { monotone: false, connected: true, budget: None, ..Default::default() };
    Ok(decide_game(&rg.enhance(), k, q)?.0)
}

pub fn cms_value(g: &Graph) -> Result<SolveResult> {
    game_result(
        &RootedGraph::unrooted(g.clone())?,
        GameQuery { monotone: false, connected: true, budget: None, ..Default::default() },
    )
}

/// Connected monotone search number by direct game search.
pub fn cmms_value(rg: &RootedGraph) -> Result<SolveResult> {
    check_roots(rg)?;
    game_result(rg, GameQuery { monotone: true, connected: true, budget: None, ..Default::default() })
}

pub fn cmms_decide(rg: &RootedGraph, k: usize) -> Result<Option<Vec<Move>>> {
    check_roots(rg)?;
    let q = GameQuery { monotone: true, connected: true, budget: None, ..Default::default() };
    Ok(decide_game(&rg.enhance(), k, q)?.0)
}

pub fn ms_value(g: &Graph) -> Result<SolveResult> {
    game_result(
        &RootedGraph::unrooted(g.clone())?,
        GameQuery { monotone: true, connected: false, budget: None, ..Default::default() },
    )
}

/// Value of `param` on a rooted graph. `cms` and `ms` ignore roots.
pub fn solve(rg: &RootedGraph, param: Param, budget: Option<u64>) -> Result<SolveResult> {
    let t = Instant::now();
    let mut r = match param {
        Param::Cmp | Param::Mp => {
            if param == Param::Cmp {
                check_roots(rg)?;
            }
            let h = rg.enhance();
            let q = ExpansionQuery { connected: param == Param::Cmp, budget, ..Default::default() };
            let (value, ex, states) = expansion_value(&h, q)?;
            SolveResult { value, witness: Witness::Expansion(ex.edge_lists(&h.index)), states, elapsed: t.elapsed() }
        }
        Param::Cmms | Param::Cms | Param::Ms => {
            let target = if param == Param::Cmms { rg.clone() } else { RootedGraph::unrooted(rg.graph.clone())? };
            if param == Param::Cmms {
                check_roots(rg)?;
            }
            let q = GameQuery {
                monotone: param != Param::Cms,
                connected: param != Param::Ms,
                budget,
                ..Default::default()
            };
            let (value, moves, states) = game_value(&target.enhance(), q)?;
            SolveResult { value, witness: Witness::Strategy(moves), states, elapsed: t.elapsed() }
        }
    };
    r.elapsed = t.elapsed();
    Ok(r)
}

/// `cmp(G, ∅, ∅) <= k` for a plain graph.
pub fn cmp_at_most(g: &Graph, k: usize) -> bool {
    let rg = RootedGraph::unrooted(g.clone()).expect("connected graph");
    cmp_decide(&rg, k).expect("roots are empty").is_some()
}

/// `cmp(G, ∅, ∅)` for a plain connected graph.
pub fn cmp_of(g: &Graph) -> usize {
    cmp_value(&RootedGraph::unrooted(g.clone()).expect("connected graph")).expect("roots are empty").value
}

/// `param(g) <= k` for a plain graph; on a disconnected graph the value is
/// the maximum over its components.
pub fn value_at_most(g: &Graph, param: Param, k: usize, budget: Option<u64>) -> Result<bool> {
    for comp in g.components() {
        let (sub, _) = g.induced(&comp);
        let h = RootedGraph::unrooted(sub)?.enhance();
        let ok = match param {
            Param::Cmp | Param::Mp => {
                let q = ExpansionQuery { connected: param == Param::Cmp, budget, ..Default::default() };
                decide_expansion(&h, k, q)?.0.is_some()
            }
            Param::Cmms | Param::Cms | Param::Ms => {
                let q = GameQuery {
                    monotone: param != Param::Cms,
                    connected: param != Param::Ms,
                    budget,
                    ..Default::default()
                };
                decide_game(&h, k, q)?.0.is_some()
            }
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}
