//! Canonical labelling by colour refinement plus individualisation, with
//! automorphism pruning. Vertex colours give rooted/coloured variants.

use crate::bitset::Bits;
use crate::graph::Graph;

/// Isomorphism-invariant certificate: equal iff the (coloured) graphs are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalForm(pub Vec<u8>);

impl CanonicalForm {
    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

type Cells = Vec<Vec<usize>>;

struct Search<'a> {
    g: &'a Graph,
    colours: &'a [u32],
    best: Option<(Vec<u8>, Vec<usize>, Vec<usize>)>,
    first: Option<(Vec<u8>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

fn refine(g: &Graph, cells: &mut Cells) {
    'outer: loop {
        for s in 0..cells.len() {
            let w: Bits = cells[s].iter().copied().collect();
            for x in 0..cells.len() {
                if cells[x].len() == 1 {
                    continue;
                }
                let mut keyed: Vec<(usize, usize)> =
                    cells[x].iter().map(|&v| (g.neighbors(v).intersection(&w).len(), v)).collect();
                if keyed.iter().all(|k| k.0 == keyed[0].0) {
                    continue;
                }
                keyed.sort_unstable();
                let mut parts: Cells = Vec::new();
                let mut last = usize::MAX;
                for (k, v) in keyed {
                    if k != last {
                        parts.push(Vec::new());
                        last = k;
                    }
                    parts.last_mut().unwrap().push(v);
                }
                cells.splice(x..=x, parts);
                continue 'outer;
            }
        }
        return;
    }
}

impl Search<'_> {
    fn code(&self, lab: &[usize]) -> Vec<u8> {
        let n = lab.len();
        let mut out = Vec::with_capacity(4 + 4 * n + n * n / 16 + 1);
        out.extend((n as u32).to_be_bytes());
        for &v in lab {
            out.extend(self.colours[v].to_be_bytes());
        }
        let mut acc = 0u8;
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                acc = acc << 1 | self.g.has_edge(lab[i], lab[j]) as u8;
                k += 1;
                if k == 8 {
                    out.push(acc);
                    acc = 0;
                    k = 0;
                }
            }
        }
        if k > 0 {
            out.push(acc << (8 - k));
        }
        out
    }

    fn same_orbit(&self, a: usize, b: usize, prefix: &[usize]) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for gamma in &self.autos {
            if prefix.iter().any(|&v| gamma[v] != v) {
                continue;
            }
            for v in 0..n {
                let (x, y) = (find(&mut parent, v), find(&mut parent, gamma[v]));
                if x != y {
                    parent[x] = y;
                }
            }
        }
        find(&mut parent, a) == find(&mut parent, b)
    }

    /// Returns `Some(level)` when the caller should abandon subtrees down to `level`.
    fn dfs(&mut self, mut cells: Cells, prefix: &mut Vec<usize>) -> Option<usize> {
        refine(self.g, &mut cells);
        if cells.iter().all(|c| c.len() == 1) {
            let lab: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            return self.leaf(lab, prefix);
        }
        let t = cells.iter().position(|c| c.len() > 1).unwrap();
        let target = cells[t].clone();
        let depth = prefix.len();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &target {
            if tried.iter().any(|&w| self.same_orbit(v, w, prefix)) {
                continue;
            }
            tried.push(v);
            let mut next = cells.clone();
            let rest: Vec<usize> = target.iter().copied().filter(|&x| x != v).collect();
            next.splice(t..=t, [vec![v], rest]);
            prefix.push(v);
            let r = self.dfs(next, prefix);
            prefix.pop();
            if let Some(level) = r {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, lab: Vec<usize>, prefix: &[usize]) -> Option<usize> {
        let code = self.code(&lab);
        let n = lab.len();
        if self.first.is_none() {
            self.first = Some((code.clone(), prefix.to_vec()));
            self.best = Some((code, lab, prefix.to_vec()));
            return None;
        }
        let (best_code, best_lab, best_path) = self.best.as_ref().unwrap();
        let mut against: Option<(Vec<usize>, &Vec<usize>)> = None;
        if code == *best_code {
            let mut gamma = vec![0; n];
            for i in 0..n {
                gamma[best_lab[i]] = lab[i];
            }
            against = Some((gamma, best_path));
        }
        if let Some((gamma, path)) = against {
            let common = path.iter().zip(prefix).take_while(|(a, b)| a == b).count();
            if gamma.iter().enumerate().any(|(v, &w)| v != w) {
                self.autos.push(gamma);
            }
            return Some(common);
        }
        if code < *best_code {
            self.best = Some((code, lab, prefix.to_vec()));
        }
        None
    }
}

/// Canonical certificate and labelling. `lab[i]` is the vertex placed at position `i`.
pub fn canonical_labelling(g: &Graph, colours: &[u32]) -> (CanonicalForm, Vec<usize>) {
    let n = g.order();
    assert_eq!(colours.len(), n);
    let mut initial: Cells = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (colours[v], v));
    for v in order {
        match initial.last_mut() {
            Some(c) if colours[c[0]] == colours[v] => c.push(v),
            _ => initial.push(vec![v]),
        }
    }
    let mut s = Search { g, colours, best: None, first: None, autos: Vec::new() };
    if n == 0 {
        let code = s.code(&[]);
        return (CanonicalForm(code), vec![]);
    }
    s.dfs(initial, &mut Vec::new());
    let (code, lab, _) = s.best.unwrap();
    (CanonicalForm(code), lab)
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labelling(g, &vec![0; g.order()]).0
}

pub fn canonical_form_coloured(g: &Graph, colours: &[u32]) -> CanonicalForm {
    canonical_labelling(g, colours).0
}

/// The canonical relabelling of `g`, plus the map old vertex -> new vertex.
pub fn canonical_graph(g: &Graph, colours: &[u32]) -> (Graph, Vec<usize>) {
    let (_, lab) = canonical_labelling(g, colours);
    let mut perm = vec![0; g.order()];
    for (i, &v) in lab.iter().enumerate() {
        perm[v] = i;
    }
    (g.relabel(&perm), perm)
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order() && g.size() == h.size() && canonical_form(g) == canonical_form(h)
}

/// An isomorphism `g -> h` respecting colours, if one exists.
pub fn isomorphism(g: &Graph, gc: &[u32], h: &Graph, hc: &[u32]) -> Option<Vec<usize>> {
    if g.order() != h.order() {
        return None;
    }
    let (cg, lg) = canonical_labelling(g, gc);
    let (ch, lh) = canonical_labelling(h, hc);
    if cg != ch {
        return None;
    }
    let mut map = vec![0; g.order()];
    for i in 0..lg.len() {
        map[lg[i]] = lh[i];
    }
    Some(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        let p4 = Graph::path(4);
        let q = p4.relabel(&[2, 0, 3, 1]);
        assert_eq!(canonical_form(&p4), canonical_form(&q));
        assert_ne!(canonical_form(&p4), canonical_form(&Graph::star(3)));
        assert!(is_isomorphic(&Graph::cycle(5), &Graph::cycle(5).relabel(&[4, 2, 0, 3, 1])));
    }

    #[test]
    fn colours_matter() {
        let p3 = Graph::path(3);
        let end = canonical_form_coloured(&p3, &[1, 0, 0]);
        let mid = canonical_form_coloured(&p3, &[0, 1, 0]);
        let other_end = canonical_form_coloured(&p3, &[0, 0, 1]);
        assert_ne!(end, mid);
        assert_eq!(end, other_end);
    }

    #[test]
    fn symmetric_graphs_finish() {
        for n in [8, 12, 20] {
            let k = Graph::complete(n);
            assert_eq!(canonical_graph(&k, &vec![0; n]).0, k);
            let s = Graph::star(n);
            assert!(is_isomorphic(&s, &s.relabel(&(0..=n).rev().collect::<Vec<_>>())));
        }
        let q = Graph::complete_bipartite(6, 6);
        assert!(is_isomorphic(&q, &q.relabel(&(0..12).map(|i| (i * 5) % 12).collect::<Vec<_>>())));
    }

    #[test]
    fn isomorphism_maps_edges() {
        let g = Graph::k23_plus();
        let h = g.relabel(&[3, 1, 4, 0, 2]);
        let m = isomorphism(&g, &[0; 5], &h, &[0; 5]).unwrap();
        for (u, v) in g.edges() {
            assert!(h.has_edge(m[u], m[v]));
        }
    }
}
