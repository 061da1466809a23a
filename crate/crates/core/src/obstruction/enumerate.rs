//! Connected graphs up to isomorphism, by vertex augmentation.
//!
//! Every connected graph on `n + 1` vertices has a vertex whose removal
//! leaves it connected, so attaching a new vertex to every nonempty subset
//! of every connected graph on `n` vertices reaches all classes.

use std::collections::BTreeMap;
use std::io::BufRead;
use std::path::Path;

use rayon::prelude::*;

use crate::canon::{canonical_form, canonical_graph, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;

/// Canonical representatives of the connected graphs of order `n`, sorted by
/// canonical form.
pub fn enumerate_connected_graphs(n: usize) -> Vec<Graph> {
    enumerate_up_to(n).pop().unwrap_or_default()
}

/// `out[i]` holds the connected graphs of order `i + 1`.
pub fn enumerate_up_to(n_max: usize) -> Vec<Vec<Graph>> {
    let mut out: Vec<Vec<Graph>> = Vec::new();
    if n_max == 0 {
        return out;
    }
    out.push(vec![Graph::new(1)]);
    for n in 1..n_max {
        let prev = &out[n - 1];
        let found: BTreeMap<CanonicalForm, Graph> = prev
            .par_iter()
            .flat_map_iter(|g| {
                (1u64..(1 << n)).map(move |mask| {
                    let mut h = Graph::new(n + 1);
                    for (u, v) in g.edges() {
                        h.add_edge(u, v);
                    }
                    for v in 0..n {
                        if mask >> v & 1 == 1 {
                            h.add_edge(v, n);
                        }
                    }
                    let (c, _) = canonical_graph(&h, &vec![0; n + 1]);
                    (canonical_form(&c), c)
                })
            })
            .collect();
        out.push(found.into_values().collect());
    }
    out
}

/// Graphs from a graph6 file, one per line; blank lines and a header are allowed.
pub fn read_graph6_file(path: &Path) -> Result<Vec<Graph>> {
    let f = std::fs::File::open(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
    let mut out = Vec::new();
    for (i, line) in std::io::BufReader::new(f).lines().enumerate() {
        let line = line.map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
        if line.trim().is_empty() {
            continue;
        }
        let g = graph6::decode(line.trim()).map_err(|e| match e {
            Error::Parse { offset, msg } => Error::Parse { offset, msg: format!("line {}: {msg}", i + 1) },
            other => other,
        })?;
        out.push(g);
    }
    Ok(out)
}
