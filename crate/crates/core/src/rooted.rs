//! Rooted graph triples, their enhancement, and gluing.

use crate::bitset::Bits;
use crate::error::{Error, Result};
use crate::graph::{EdgeIndex, Graph};

/// A connected graph with an in-root set and an out-root set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootedGraph {
    pub graph: Graph,
    pub s_in: Bits,
    pub s_out: Bits,
}

impl RootedGraph {
    pub fn new(graph: Graph, s_in: Bits, s_out: Bits) -> Result<Self> {
        let all = graph.vertices();
        if !s_in.is_subset(&all) || !s_out.is_subset(&all) {
            let bad = s_in.union(&s_out).difference(&all).first().unwrap();
            return Err(Error::NoSuchVertex(bad));
        }
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(RootedGraph { graph, s_in, s_out })
    }

    /// `(G, ∅, ∅)`.
    pub fn unrooted(graph: Graph) -> Result<Self> {
        Self::new(graph, Bits::EMPTY, Bits::EMPTY)
    }

    /// `(G, {v}, {v})`.
    pub fn doubly_rooted(graph: Graph, v: usize) -> Result<Self> {
        Self::new(graph, Bits::singleton(v), Bits::singleton(v))
    }

    /// Swap the two root sets.
    pub fn rev(&self) -> Self {
        RootedGraph { graph: self.graph.clone(), s_in: self.s_out, s_out: self.s_in }
    }

    pub fn in_roots_connected(&self) -> bool {
        self.graph.is_connected_subset(&self.s_in)
    }

    /// Contract an edge; the merged vertex is a root iff an endpoint was.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Self> {
        let (graph, map) = self.graph.contract_edge_map(u, v)?;
        Ok(RootedGraph {
            graph,
            s_in: self.s_in.iter().map(|x| map[x]).collect(),
            s_out: self.s_out.iter().map(|x| map[x]).collect(),
        })
    }

    /// Vertex colours encoding root membership, for rooted isomorphism.
    pub fn colours(&self) -> Vec<u32> {
        (0..self.graph.order()).map(|v| self.s_in.contains(v) as u32 | (self.s_out.contains(v) as u32) << 1).collect()
    }

    pub fn enhance(&self) -> Enhancement {
        Enhancement::new(self)
    }
}

/// `G` plus the apex vertices `u_in = n` and `u_out = n + 1` joined to the root sets.
#[derive(Clone, Debug)]
pub struct Enhancement {
    pub index: EdgeIndex,
    /// Order of the original graph.
    pub n: usize,
    pub u_in: usize,
    pub u_out: usize,
    pub e_in: Bits,
    pub e_out: Bits,
    pub s_in: Bits,
    pub s_out: Bits,
}

impl Enhancement {
    pub fn new(rg: &RootedGraph) -> Self {
        let n = rg.graph.order();
        let (u_in, u_out) = (n, n + 1);
        let mut host = Graph::new(n + 2);
        for (a, b) in rg.graph.edges() {
            host.add_edge(a, b);
        }
        for v in rg.s_in.iter() {
            host.add_edge(v, u_in);
        }
        for v in rg.s_out.iter() {
            host.add_edge(v, u_out);
        }
        let index = EdgeIndex::new(host).expect("enhanced graph exceeds edge capacity");
        let e_in = index.incident[u_in];
        let e_out = index.incident[u_out];
        Enhancement { index, n, u_in, u_out, e_in, e_out, s_in: rg.s_in, s_out: rg.s_out }
    }

    pub fn host(&self) -> &Graph {
        &self.index.graph
    }

    /// `E(G*) \ E_out`, the final set of every expansion.
    pub fn target(&self) -> Bits {
        self.index.all_edges().difference(&self.e_out)
    }

    /// Edges of the original graph, as ids in the host.
    pub fn inner_edges(&self) -> Bits {
        self.index.all_edges().difference(&self.e_in).difference(&self.e_out)
    }
}

/// A rooted graph whose vertices carry names from a shared universe, so that
/// several pieces can be glued along common vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub rooted: RootedGraph,
    /// `names[v]` is the universe name of local vertex `v`; strictly increasing.
    pub names: Vec<usize>,
}

impl Piece {
    /// Subgraph of `host` formed by `edges`, plus any isolated vertices listed in the roots.
    pub fn from_edges(host: &Graph, edges: &[(usize, usize)], s_in: &[usize], s_out: &[usize]) -> Result<Piece> {
        let mut vs: Bits = s_in.iter().chain(s_out).copied().collect();
        for &(u, v) in edges {
            if !host.has_edge(u, v) {
                return Err(Error::NoSuchEdge(u, v));
            }
            vs.insert(u);
            vs.insert(v);
        }
        let names: Vec<usize> = vs.iter().collect();
        let local = |x: usize| names.binary_search(&x).unwrap();
        let mut g = Graph::new(names.len());
        for &(u, v) in edges {
            g.add_edge(local(u), local(v));
        }
        let rooted =
            RootedGraph::new(g, s_in.iter().map(|&x| local(x)).collect(), s_out.iter().map(|&x| local(x)).collect())?;
        Ok(Piece { rooted, names })
    }

    /// Piece whose names are its own vertex ids.
    pub fn identity(rooted: RootedGraph) -> Piece {
        let names = (0..rooted.graph.order()).collect();
        Piece { rooted, names }
    }

    pub fn name_set(&self, local: &Bits) -> Bits {
        local.iter().map(|v| self.names[v]).collect()
    }

    pub fn named_edges(&self) -> Vec<(usize, usize)> {
        self.rooted.graph.edges().into_iter().map(|(u, v)| (self.names[u], self.names[v])).collect()
    }

    pub fn rev(&self) -> Piece {
        Piece { rooted: self.rooted.rev(), names: self.names.clone() }
    }
}

/// `glue(G_1, ..., G_r)`: union of the pieces, in-rooted as the first and
/// out-rooted as the last. Consecutive pieces must meet exactly in the
/// out-roots of the first, which must equal the in-roots of the second, and
/// no edge may occur in two pieces.
pub fn glue(parts: &[Piece]) -> Result<Piece> {
    if parts.is_empty() {
        return Err(Error::GluePrecondition("no parts".into()));
    }
    for (i, w) in parts.windows(2).enumerate() {
        let (a, b) = (&w[0], &w[1]);
        let va: Bits = a.names.iter().copied().collect();
        let vb: Bits = b.names.iter().copied().collect();
        let out_a = a.name_set(&a.rooted.s_out);
        let in_b = b.name_set(&b.rooted.s_in);
        if va.intersection(&vb) != out_a || out_a != in_b {
            return Err(Error::GluePrecondition(format!(
                "parts {} and {} overlap in {:?}, out-roots {:?}, in-roots {:?}",
                i,
                i + 1,
                va.intersection(&vb),
                out_a,
                in_b
            )));
        }
    }
    let mut names = Bits::EMPTY;
    let mut all_edges: Vec<(usize, usize)> = Vec::new();
    for p in parts {
        names |= p.names.iter().copied().collect::<Bits>();
        for (u, v) in p.named_edges() {
            let e = (u.min(v), u.max(v));
            all_edges.push(e);
        }
    }
    let total = all_edges.len();
    all_edges.sort_unstable();
    all_edges.dedup();
    if all_edges.len() != total {
        return Err(Error::GluePrecondition("parts share an edge".into()));
    }
    let names: Vec<usize> = names.iter().collect();
    let local = |x: usize| names.binary_search(&x).unwrap();
    let mut g = Graph::new(names.len());
    for &(u, v) in &all_edges {
        g.add_edge(local(u), local(v));
    }
    let first = &parts[0];
    let last = &parts[parts.len() - 1];
    let s_in = first.name_set(&first.rooted.s_in).iter().map(local).collect();
    let s_out = last.name_set(&last.rooted.s_out).iter().map(local).collect();
    let rooted = RootedGraph::new(g, s_in, s_out)?;
    Ok(Piece { rooted, names })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn glue_two_paths() {
        let a = Piece::from_edges(&Graph::path(3), &[(0, 1)], &[0], &[1]).unwrap();
        let b = Piece::from_edges(&Graph::path(3), &[(1, 2)], &[1], &[2]).unwrap();
        let g = glue(&[a.clone(), b]).unwrap();
        assert_eq!(g.rooted.graph, Graph::path(3));
        assert_eq!(g.rooted.s_in.to_vec(), vec![0]);
        assert_eq!(g.rooted.s_out.to_vec(), vec![2]);
        assert_eq!(glue(std::slice::from_ref(&a)).unwrap(), a);
    }

    #[test]
    fn glue_rejects_bad_overlap() {
        let a = Piece::from_edges(&Graph::path(3), &[(0, 1)], &[0], &[0]).unwrap();
        let b = Piece::from_edges(&Graph::path(3), &[(1, 2)], &[1], &[2]).unwrap();
        assert!(matches!(glue(&[a, b]), Err(Error::GluePrecondition(_))));
    }

    #[test]
    fn enhancement_shapes() {
        let rg = RootedGraph::new(Graph::path(2), Bits::singleton(0), Bits::singleton(1)).unwrap();
        let h = rg.enhance();
        assert_eq!(h.host().neighbors(h.u_in).to_vec(), vec![0]);
        assert_eq!(h.host().neighbors(h.u_out).to_vec(), vec![1]);
        assert_eq!((h.e_in.len(), h.e_out.len()), (1, 1));
        let h = RootedGraph::unrooted(Graph::complete(3)).unwrap().enhance();
        assert!(h.e_in.is_empty() && h.e_out.is_empty());
        assert_eq!(h.host().degree(h.u_in), 0);
        let h = RootedGraph::doubly_rooted(Graph::complete(3), 2).unwrap().enhance();
        assert_eq!(h.host().neighbors(h.u_in).to_vec(), vec![2]);
        assert_eq!(h.host().neighbors(h.u_out).to_vec(), vec![2]);
    }

    #[test]
    fn rooted_contraction() {
        let rg = RootedGraph::new(Graph::path(2), Bits::singleton(0), Bits::singleton(1)).unwrap();
        let c = rg.contract_edge(0, 1).unwrap();
        assert_eq!(c.graph.order(), 1);
        assert_eq!((c.s_in.to_vec(), c.s_out.to_vec()), (vec![0], vec![0]));
        let rg = RootedGraph::doubly_rooted(Graph::complete(3), 0).unwrap();
        let c = rg.contract_edge(1, 2).unwrap();
        assert_eq!((c.s_in.to_vec(), c.s_out.to_vec()), (vec![0], vec![0]));
        let rg = RootedGraph::new(Graph::path(3), Bits::singleton(0), Bits::singleton(2)).unwrap();
        let c = rg.contract_edge(0, 1).unwrap();
        assert_eq!(c.graph, Graph::path(2));
        assert_eq!((c.s_in.to_vec(), c.s_out.to_vec()), (vec![0], vec![1]));
    }

    #[test]
    fn rev_involution() {
        let rg = RootedGraph::new(Graph::path(3), Bits::EMPTY, Bits::singleton(1)).unwrap();
        assert_eq!(rg.rev().rev(), rg);
        assert_eq!(rg.rev().s_in.to_vec(), vec![1]);
        let d = RootedGraph::doubly_rooted(Graph::path(3), 1).unwrap();
        assert_eq!(d.rev(), d);
    }
}
