//! Acceptance criteria 1-11, one report line each. Runs without the libtest
//! harness so the lines are always shown.
//!
//! `GSO_CORPUS=FILE` replaces the n <= 8 enumeration for criterion 8 with a
//! graph6 corpus; `GSO_FAMILIES=DIR` supplies the member files for criterion 10.

use std::path::PathBuf;
use std::time::Instant;

use gso_core::obstruction::{enumerate_up_to, read_graph6_file};
use gso_core::verify::*;
use gso_core::Graph;

const SEED: u64 = 20240601;

/// Criteria that fail for a documented reason; any change to this set is an error.
/// 3: the game can slide a searcher off a pendant vertex onto a fresh vertex,
/// which no one-edge-at-a-time expansion prices below the pendant surcharge.
const KNOWN_FAILURES: &[u32] = &[3];

fn recognizer_corpus() -> (Vec<Graph>, usize) {
    if let Ok(path) = std::env::var("GSO_CORPUS") {
        let graphs = read_graph6_file(&PathBuf::from(path)).expect("corpus");
        let n = graphs.iter().map(Graph::order).max().unwrap_or(0);
        return (graphs, n);
    }
    (enumerate_up_to(8).into_iter().flatten().collect(), 8)
}

type Run = Box<dyn Fn() -> gso_core::Result<Check>>;

fn main() {
    let families = std::env::var("GSO_FAMILIES").ok().map(PathBuf::from);
    let runs: Vec<(u32, Run)> = vec![
        (1, Box::new(criterion_1)),
        (2, Box::new(criterion_2)),
        (3, Box::new(|| criterion_3(6, 100, SEED))),
        (4, Box::new(|| criterion_4(7))),
        (5, Box::new(criterion_5)),
        (6, Box::new(criterion_6)),
        (7, Box::new(criterion_7)),
        (
            8,
            Box::new(|| {
                let (graphs, n) = recognizer_corpus();
                criterion_8(&graphs, n)
            }),
        ),
        (9, Box::new(|| criterion_9(500, SEED))),
        (10, Box::new(move || criterion_10(families.as_deref()))),
        (11, Box::new(criterion_11)),
    ];
    let mut checks = Vec::new();
    for (id, run) in runs {
        let t = Instant::now();
        let c = run().unwrap_or_else(|e| panic!("criterion {id} errored: {e}"));
        println!("{}  [{:.1}s]", c.line(), t.elapsed().as_secs_f64());
        checks.push(c);
    }
    let failed: Vec<u32> = checks.iter().filter(|c| c.outcome == Outcome::Fail).map(|c| c.id).collect();
    if failed != KNOWN_FAILURES {
        eprintln!("failed criteria {failed:?} differ from the documented set {KNOWN_FAILURES:?}");
        std::process::exit(1);
    }
    println!("acceptance: failures match the documented set {KNOWN_FAILURES:?}");
}
