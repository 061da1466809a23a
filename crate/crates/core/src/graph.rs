//! Small simple undirected graphs.

use crate::bitset::{Bits, CAPACITY};
use crate::error::{Error, Result};

/// Simple undirected graph on vertices `0..n` stored as adjacency bit rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Bits>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        assert!(n <= CAPACITY, "at most {CAPACITY} vertices supported");
        Graph { n, adj: vec![Bits::EMPTY; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        Self::try_from_edges(n, edges).expect("invalid edge list")
    }

    pub fn try_from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > CAPACITY {
            return Err(Error::Capacity(format!("{n} vertices")));
        }
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::NoSuchVertex(u));
            }
            if v >= n {
                return Err(Error::NoSuchVertex(v));
            }
            if u == v {
                return Err(Error::Invalid(format!("loop at {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Path with `n` vertices.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 1..n {
            g.add_edge(u - 1, u);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge(0, n - 1);
        }
        g
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        let mut g = Graph::new(leaves + 1);
        for v in 1..=leaves {
            g.add_edge(0, v);
        }
        g
    }

    /// Complete bipartite graph; the first side is `0..a`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::new(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// `K_{2,3}` plus the edge joining its two degree-3 vertices (0 and 1).
    pub fn k23_plus() -> Self {
        let mut g = Graph::complete_bipartite(2, 3);
        g.add_edge(0, 1);
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> Bits {
        Bits::full(self.n)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> Bits {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: &Bits) -> Bits {
        let mut seen = Bits::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = Bits::EMPTY;
            for v in frontier.iter() {
                next |= self.adj[v];
            }
            next = next.intersection(within).difference(&seen);
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Whether `G[set]` is connected; the empty set counts as connected.
    pub fn is_connected_subset(&self, set: &Bits) -> bool {
        match set.first() {
            None => true,
            Some(s) => self.reach(s, set) == *set,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_subset(&self.vertices())
    }

    /// Vertex sets of the connected components of `G[within]`, ordered by smallest vertex.
    pub fn components_within(&self, within: &Bits) -> Vec<Bits> {
        let mut left = *within;
        let mut out = Vec::new();
        while let Some(s) = left.first() {
            let c = self.reach(s, &left);
            left = left.difference(&c);
            out.push(c);
        }
        out
    }

    pub fn components(&self) -> Vec<Bits> {
        self.components_within(&self.vertices())
    }

    /// Induced subgraph on `set`; returns the graph and the map new id -> old id.
    pub fn induced(&self, set: &Bits) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = set.iter().collect();
        let mut pos = vec![usize::MAX; self.n];
        for (i, &o) in old.iter().enumerate() {
            pos[o] = i;
        }
        let mut g = Graph::new(old.len());
        for (i, &o) in old.iter().enumerate() {
            for w in self.adj[o].intersection(set).iter() {
                if pos[w] > i {
                    g.add_edge(i, pos[w]);
                }
            }
        }
        (g, old)
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::new(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Contract edge `{u, v}`. The merged vertex takes the smaller id and the
    /// vertices above the larger id shift down by one. Also returns the map old id -> new id.
    pub fn contract_edge_map(&self, u: usize, v: usize) -> Result<(Graph, Vec<usize>)> {
        if !self.has_edge(u, v) {
            return Err(Error::NoSuchEdge(u, v));
        }
        let (lo, hi) = if u < v { (u, v) } else { (v, u) };
        let map: Vec<usize> = (0..self.n)
            .map(|w| match w.cmp(&hi) {
                std::cmp::Ordering::Less => w,
                std::cmp::Ordering::Equal => lo,
                std::cmp::Ordering::Greater => w - 1,
            })
            .collect();
        let mut g = Graph::new(self.n - 1);
        for (a, b) in self.edges() {
            let (x, y) = (map[a], map[b]);
            if x != y {
                g.add_edge(x, y);
            }
        }
        Ok((g, map))
    }

    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.contract_edge_map(u, v).map(|(g, _)| g)
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NoSuchEdge(u, v));
        }
        let mut g = self.clone();
        g.remove_edge(u, v);
        Ok(g)
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::new(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n);
        }
        g
    }

    /// Vertices of degree at most one.
    pub fn pendant_vertices(&self) -> Bits {
        (0..self.n).filter(|&v| self.degree(v) <= 1).collect()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, {:?})", self.n, self.edges())
    }
}

/// A graph together with a fixed numbering of its edges, so that edge sets
/// can be handled as bit sets.
#[derive(Clone, Debug)]
pub struct EdgeIndex {
    pub graph: Graph,
    pub edges: Vec<(usize, usize)>,
    /// Per vertex, the set of incident edge ids.
    pub incident: Vec<Bits>,
    id: Vec<Vec<u16>>,
}

const NONE: u16 = u16::MAX;

impl EdgeIndex {
    pub fn new(graph: Graph) -> Result<Self> {
        let edges = graph.edges();
        if edges.len() > CAPACITY {
            return Err(Error::Capacity(format!("{} edges", edges.len())));
        }
        let n = graph.order();
        let mut incident = vec![Bits::EMPTY; n];
        let mut id = vec![vec![NONE; n]; n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            incident[u].insert(i);
            incident[v].insert(i);
            id[u][v] = i as u16;
            id[v][u] = i as u16;
        }
        Ok(EdgeIndex { graph, edges, incident, id })
    }

    #[inline]
    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.id.len() || v >= self.id.len() {
            return None;
        }
        let i = self.id[u][v];
        (i != NONE).then_some(i as usize)
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn all_edges(&self) -> Bits {
        Bits::full(self.edges.len())
    }

    /// `V(F)`: endpoints of the edges in `f`.
    pub fn vertices_of(&self, f: &Bits) -> Bits {
        let mut out = Bits::EMPTY;
        for e in f.iter() {
            let (u, v) = self.edges[e];
            out.insert(u);
            out.insert(v);
        }
        out
    }

    /// Vertices incident both to an edge of `f` and to an edge outside `f`.
    pub fn boundary(&self, f: &Bits) -> Bits {
        let mut out = Bits::EMPTY;
        for (v, inc) in self.incident.iter().enumerate() {
            if inc.intersects(f) && !inc.is_subset(f) {
                out.insert(v);
            }
        }
        out
    }

    /// Whether the edge-induced subgraph `G[f]` is connected (empty counts as connected).
    pub fn edges_connected(&self, f: &Bits) -> bool {
        let Some(e0) = f.first() else { return true };
        let mut seen = Bits::singleton(e0);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = Bits::EMPTY;
            for e in frontier.iter() {
                let (u, v) = self.edges[e];
                next |= self.incident[u];
                next |= self.incident[v];
            }
            next = next.intersection(f).difference(&seen);
            seen |= next;
            frontier = next;
        }
        seen == *f
    }

    /// Edge set with both endpoints in `vs`.
    pub fn edges_within(&self, vs: &Bits) -> Bits {
        let mut out = Bits::EMPTY;
        for v in vs.iter() {
            for e in self.incident[v].iter() {
                let (a, b) = self.edges[e];
                if vs.contains(a) && vs.contains(b) {
                    out.insert(e);
                }
            }
        }
        out
    }

    pub fn edge_list(&self, f: &Bits) -> Vec<(usize, usize)> {
        f.iter().map(|e| self.edges[e]).collect()
    }

    pub fn edge_set(&self, list: &[(usize, usize)]) -> Result<Bits> {
        let mut out = Bits::EMPTY;
        for &(u, v) in list {
            out.insert(self.edge_id(u, v).ok_or(Error::NoSuchEdge(u, v))?);
        }
        Ok(out)
    }
}

/// `∂(F)` for an explicit edge list over `g`.
pub fn boundary(g: &Graph, f: &[(usize, usize)]) -> Result<Bits> {
    let idx = EdgeIndex::new(g.clone())?;
    let set = idx.edge_set(f)?;
    Ok(idx.boundary(&set))
}
