//! Exhaustive mining of minimal obstructions.

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::canonical_form;
use crate::contraction::{contains_any, is_obstruction, Relation};
use crate::error::Result;
use crate::graph::Graph;
use crate::rooted::RootedGraph;
use crate::search::Param;

use super::enumerate::enumerate_up_to;

#[derive(Clone, Debug, Serialize)]
pub struct LevelStats {
    pub n: usize,
    pub candidates: usize,
    pub pruned: usize,
    pub solved: usize,
    pub found: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct MineReport {
    pub param: Param,
    pub k: usize,
    pub relation: Relation,
    /// Completeness is guaranteed for orders up to this bound only.
    pub n_max: usize,
    #[serde(skip)]
    pub obstructions: Vec<Graph>,
    pub levels: Vec<LevelStats>,
}

/// All obstructions on at most `n_max` vertices, in order of size then
/// canonical form.
pub fn mine_obstructions(
    n_max: usize,
    param: Param,
    k: usize,
    relation: Relation,
    budget: Option<u64>,
) -> Result<MineReport> {
    mine_from(enumerate_up_to(n_max), n_max, param, k, relation, budget)
}

/// Same as [`mine_obstructions`] over a supplied list of graphs per order
/// (e.g. ingested from graph6 files).
pub fn mine_from(
    by_order: Vec<Vec<Graph>>,
    n_max: usize,
    param: Param,
    k: usize,
    relation: Relation,
    budget: Option<u64>,
) -> Result<MineReport> {
    let mut found: Vec<Graph> = Vec::new();
    let mut levels = Vec::new();
    for (i, graphs) in by_order.into_iter().enumerate() {
        let known: Vec<RootedGraph> =
            found.iter().map(|g| RootedGraph::unrooted(g.clone()).expect("connected")).collect();
        let results: Vec<Result<(bool, bool)>> = graphs
            .par_iter()
            .map(|g| {
                let rg = RootedGraph::unrooted(g.clone())?;
                if contains_any(&rg, &known, relation, budget)?.is_some() {
                    return Ok((true, false));
                }
                Ok((false, is_obstruction(g, param, k, relation, budget)?))
            })
            .collect();
        let mut stats = LevelStats { n: i + 1, candidates: graphs.len(), pruned: 0, solved: 0, found: 0 };
        let mut new: Vec<Graph> = Vec::new();
        for (g, r) in graphs.into_iter().zip(results) {
            let (pruned, hit) = r?;
            if pruned {
                stats.pruned += 1;
                continue;
            }
            stats.solved += 1;
            if hit {
                new.push(g);
            }
        }
        new.sort_by_cached_key(canonical_form);
        stats.found = new.len();
        found.extend(new);
        levels.push(stats);
    }
    Ok(MineReport { param, k, relation, n_max, obstructions: found, levels })
}
