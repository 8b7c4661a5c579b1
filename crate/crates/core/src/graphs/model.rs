use std::fmt;

use crate::error::{Error, Result};

/// Vertex sets are carried as bitmasks, which caps the order.
pub const MAX_VERTICES: usize = 62;

pub(crate) fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::SizeLimit {
            what: "vertex count",
            got: n,
            limit: MAX_VERTICES,
        });
    }
    Ok(())
}

pub(crate) fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Self { n, adj: vec![0; n] })
    }

    /// Builds a graph from 0-based edges, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n {
            return Err(Error::UnknownVertex(u));
        }
        if v >= self.n {
            return Err(Error::UnknownVertex(v));
        }
        if u == v {
            return Err(Error::InvalidParameter(format!("loop at vertex {}", u + 1)));
        }
        if self.has_edge(u, v) {
            return Err(Error::InvalidParameter(format!(
                "duplicate edge {}-{}",
                u + 1,
                v + 1
            )));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[v])
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| bits(self.adj[u] >> (u + 1) << (u + 1)).map(move |v| (u, v)))
            .collect()
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        let mut g = self.clone();
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        Ok(g)
    }

    /// `G - S`: the graph induced on the vertices outside `removed`,
    /// relabelled in increasing order.
    pub fn delete_vertices(&self, removed: u64) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|v| removed >> v & 1 == 0).collect();
        let mut g = Graph {
            n: keep.len(),
            adj: vec![0; keep.len()],
        };
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate() {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1 << j;
                }
            }
        }
        g
    }

    /// Two-colouring by breadth-first search.
    pub fn is_bipartite(&self) -> bool {
        let mut colour = vec![u8::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        for s in 0..self.n {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if colour[w] == u8::MAX {
                        colour[w] = 1 - colour[u];
                        queue.push_back(w);
                    } else if colour[w] == colour[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen.count_ones() as usize == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.size() == self.n - 1 && self.is_connected()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().into_iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}-{}", u + 1, v + 1)?;
        }
        write!(f, "])")
    }
}

/// Loop-free digraph on `0..n`; antiparallel arc pairs are allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out: Vec<u64>,
}

impl Digraph {
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Self { n, out: vec![0; n] })
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut d = Self::empty(n)?;
        for &(u, v) in arcs {
            d.insert_arc(u, v)?;
        }
        Ok(d)
    }

    pub(crate) fn insert_arc(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n {
            return Err(Error::UnknownVertex(u));
        }
        if v >= self.n {
            return Err(Error::UnknownVertex(v));
        }
        if u == v {
            return Err(Error::InvalidParameter(format!("loop at vertex {}", u + 1)));
        }
        if self.has_arc(u, v) {
            return Err(Error::InvalidParameter(format!(
                "duplicate arc {}->{}",
                u + 1,
                v + 1
            )));
        }
        self.out[u] |= 1 << v;
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.out.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.out[u] >> v & 1 == 1
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].count_ones() as usize
    }

    pub fn out_mask(&self, v: usize) -> u64 {
        self.out[v]
    }

    pub fn successors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.out[v])
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| bits(self.out[u]).map(move |v| (u, v)))
            .collect()
    }

    pub fn has_digon(&self) -> bool {
        self.arcs().iter().any(|&(u, v)| self.has_arc(v, u))
    }

    pub fn delete_arc(&self, u: usize, v: usize) -> Result<Digraph> {
        if !self.has_arc(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        let mut d = self.clone();
        d.out[u] &= !(1 << v);
        Ok(d)
    }

    /// Replaces every edge by a digon.
    pub fn symmetric(g: &Graph) -> Digraph {
        Digraph {
            n: g.order(),
            out: (0..g.order()).map(|v| g.neighbor_mask(v)).collect(),
        }
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}, arcs=[", self.n)?;
        for (i, (u, v)) in self.arcs().into_iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}->{}", u + 1, v + 1)?;
        }
        write!(f, "])")
    }
}

/// Either kind of input structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyGraph {
    Undirected(Graph),
    Directed(Digraph),
}

impl AnyGraph {
    pub fn order(&self) -> usize {
        match self {
            AnyGraph::Undirected(g) => g.order(),
            AnyGraph::Directed(d) => d.order(),
        }
    }

    pub fn is_directed(&self) -> bool {
        matches!(self, AnyGraph::Directed(_))
    }
}

impl From<Graph> for AnyGraph {
    fn from(g: Graph) -> Self {
        AnyGraph::Undirected(g)
    }
}

impl From<Digraph> for AnyGraph {
    fn from(d: Digraph) -> Self {
        AnyGraph::Directed(d)
    }
}
