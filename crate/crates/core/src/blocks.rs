//! Blocks, cut vertices and outerplanar structure.

use serde::Serialize;

use crate::bitset::Bits;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BlockClass {
    Hair,
    Bridge,
    Cycle,
    Essential,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CutWeight {
    Light,
    Heavy,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Face {
    /// Boundary vertices in cyclic order.
    pub cycle: Vec<usize>,
    /// Chords on the boundary of this face.
    pub chords: Vec<(usize, usize)>,
    /// At most one chord on the boundary.
    pub haploid: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OuterplanarData {
    /// The unique Hamiltonian cycle, in order.
    pub outer_cycle: Vec<usize>,
    pub chords: Vec<(usize, usize)>,
    pub faces: Vec<Face>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    pub class: BlockClass,
    /// Present for 2-connected outerplanar blocks with at least three vertices.
    pub outerplanar: Option<OuterplanarData>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<(usize, CutWeight)>,
}

impl BlockDecomposition {
    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.cut_vertices.iter().any(|c| c.0 == v)
    }

    /// Indices of blocks containing `v`.
    pub fn blocks_at(&self, v: usize) -> Vec<usize> {
        (0..self.blocks.len()).filter(|&i| self.blocks[i].vertices.contains(&v)).collect()
    }
}

/// Edge sets of the biconnected components, each sorted; blocks ordered by smallest edge.
pub fn biconnected_components(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.order();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut stack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent, remaining neighbours)
        let mut frames: Vec<(usize, usize, Vec<usize>)> = vec![(root, usize::MAX, g.neighbors(root).to_vec())];
        while let Some(frame) = frames.last_mut() {
            let (v, parent) = (frame.0, frame.1);
            if let Some(w) = frame.2.pop() {
                if disc[w] == usize::MAX {
                    stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    frames.push((w, v, g.neighbors(w).to_vec()));
                } else if w != parent && disc[w] < disc[v] {
                    stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                frames.pop();
                if let Some(up) = frames.last() {
                    let u = up.0;
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut comp = Vec::new();
                        while let Some(e) = stack.pop() {
                            comp.push((e.0.min(e.1), e.0.max(e.1)));
                            if e == (u, v) {
                                break;
                            }
                        }
                        comp.sort_unstable();
                        out.push(comp);
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// Block decomposition with classes, cut-vertex weights, and face data for
/// 2-connected outerplanar blocks.
pub fn blocks_and_cuts(g: &Graph) -> Result<BlockDecomposition> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.size() == 0 {
        return Err(Error::Invalid("graph has no edges".into()));
    }
    let comps = biconnected_components(g);
    let mut blocks = Vec::new();
    for edges in comps {
        let vs: Bits = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        let vertices = vs.to_vec();
        let class = if edges.len() == 1 {
            let ones = vertices.iter().filter(|&&v| g.degree(v) == 1).count();
            if ones == 1 {
                BlockClass::Hair
            } else {
                BlockClass::Bridge
            }
        } else if edges.len() == vertices.len() {
            BlockClass::Cycle
        } else {
            BlockClass::Essential
        };
        let outerplanar = if vertices.len() >= 3 {
            let (sub, map) = g.induced(&vs);
            outer_cycle_2connected(&sub).map(|cyc| {
                let cyc: Vec<usize> = cyc.into_iter().map(|v| map[v]).collect();
                face_data(&edges, cyc)
            })
        } else {
            None
        };
        blocks.push(Block { vertices, edges, class, outerplanar });
    }
    let mut cut_vertices = Vec::new();
    for v in 0..g.order() {
        let at: Vec<&Block> = blocks.iter().filter(|b| b.vertices.contains(&v)).collect();
        if at.len() >= 2 {
            let hairs = at.iter().filter(|b| b.class == BlockClass::Hair).count();
            let w = if hairs == 1 && at.len() == 2 { CutWeight::Light } else { CutWeight::Heavy };
            cut_vertices.push((v, w));
        }
    }
    Ok(BlockDecomposition { blocks, cut_vertices })
}

fn face_data(edges: &[(usize, usize)], cycle: Vec<usize>) -> OuterplanarData {
    let k = cycle.len();
    let norm = |a: usize, b: usize| (a.min(b), a.max(b));
    let outer: Vec<(usize, usize)> = (0..k).map(|i| norm(cycle[i], cycle[(i + 1) % k])).collect();
    let chords: Vec<(usize, usize)> = edges.iter().copied().filter(|e| !outer.contains(e)).collect();
    let mut faces = Vec::new();
    split_faces(&cycle, &chords, &mut faces);
    OuterplanarData { outer_cycle: cycle, chords, faces }
}

/// Recursively split a polygon (vertex list in cyclic order) along chords.
fn split_faces(poly: &[usize], chords: &[(usize, usize)], out: &mut Vec<Face>) {
    let k = poly.len();
    let pos = |x: usize| poly.iter().position(|&y| y == x);
    for &(a, b) in chords {
        let (Some(i), Some(j)) = (pos(a), pos(b)) else { continue };
        let (i, j) = (i.min(j), i.max(j));
        if j - i < 2 || (i == 0 && j == k - 1) {
            continue;
        }
        split_faces(&poly[i..=j], chords, out);
        let mut other: Vec<usize> = poly[j..].to_vec();
        other.extend_from_slice(&poly[..=i]);
        split_faces(&other, chords, out);
        return;
    }
    let on: Vec<(usize, usize)> = (0..k)
        .map(|i| (poly[i].min(poly[(i + 1) % k]), poly[i].max(poly[(i + 1) % k])))
        .filter(|e| chords.contains(e))
        .collect();
    let haploid = on.len() <= 1;
    out.push(Face { cycle: poly.to_vec(), chords: on, haploid });
}

/// Hamiltonian cycle of a 2-connected outerplanar graph, or `None` if the
/// graph is not outerplanar. Works by repeatedly removing a degree-2 vertex
/// and joining its neighbours by an edge that must then lie on the outer cycle.
pub fn outer_cycle_2connected(g: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    if n < 3 {
        return None;
    }
    let mut h = g.clone();
    let mut alive = g.vertices();
    let mut must_outer = vec![Bits::EMPTY; n];
    let mut removed: Vec<(usize, usize, usize)> = Vec::new();
    while alive.len() > 3 {
        let v = alive.iter().find(|&v| h.degree(v) == 2)?;
        let nb = h.neighbors(v).to_vec();
        let (a, b) = (nb[0], nb[1]);
        if h.has_edge(a, b) && must_outer[a].contains(b) {
            return None;
        }
        h.remove_edge(v, a);
        h.remove_edge(v, b);
        alive.remove(v);
        if !h.has_edge(a, b) {
            h.add_edge(a, b);
        }
        must_outer[a].insert(b);
        must_outer[b].insert(a);
        removed.push((v, a, b));
    }
    if alive.len() != 3 || alive.iter().any(|v| h.degree(v) != 2) {
        return None;
    }
    let mut cycle = alive.to_vec();
    while let Some((v, a, b)) = removed.pop() {
        let k = cycle.len();
        let i = cycle.iter().position(|&x| x == a)?;
        if cycle[(i + 1) % k] == b {
            cycle.insert(i + 1, v);
        } else if cycle[(i + k - 1) % k] == b {
            cycle.insert(i, v);
        } else {
            return None;
        }
    }
    Some(cycle)
}

/// Whether `g` embeds in the plane with every vertex on the outer face.
pub fn is_outerplanar(g: &Graph) -> bool {
    for comp in biconnected_components(g) {
        if comp.len() < 3 {
            continue;
        }
        let vs: Bits = comp.iter().flat_map(|&(u, v)| [u, v]).collect();
        let (sub, _) = g.induced(&vs);
        if outer_cycle_2connected(&sub).is_none() {
            return false;
        }
    }
    true
}
