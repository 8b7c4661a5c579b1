//! Simple-cycle enumeration anchored at a vertex, an edge or an arc.
//!
//! Plain depth-first search over simple paths. Undirected cycles through an
//! anchor `v` are reported in one orientation only: a closed path
//! `v, a, .., b, v` is kept when `a < b`.

use std::fmt;

use crate::error::{Error, Result};

use super::model::{Digraph, Graph};

/// A simple cycle, listed as a vertex sequence starting at its anchor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycleRecord {
    vertices: Vec<usize>,
    mask: u64,
}

impl CycleRecord {
    fn new(vertices: Vec<usize>) -> Self {
        let mask = vertices.iter().fold(0u64, |m, &v| m | 1 << v);
        Self { vertices, mask }
    }

    /// Traversal order, starting at the anchor.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn vertex_mask(&self) -> u64 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.mask >> v & 1 == 1
    }
}

impl fmt::Debug for CycleRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one_based: Vec<usize> = self.vertices.iter().map(|v| v + 1).collect();
        write!(f, "Cycle{one_based:?}")
    }
}

/// Depth-first extension of `path` (ending at its last vertex) towards
/// `target`; `next` gives the successor mask of a vertex.
fn extend_paths(
    next: &dyn Fn(usize) -> u64,
    target: usize,
    path: &mut Vec<usize>,
    visited: u64,
    emit: &mut dyn FnMut(&[usize]),
) {
    let last = *path.last().unwrap();
    let succ = next(last);
    if succ >> target & 1 == 1 {
        emit(path);
    }
    let mut open = succ & !visited & !(1 << target);
    while open != 0 {
        let w = open.trailing_zeros() as usize;
        open &= open - 1;
        path.push(w);
        extend_paths(next, target, path, visited | 1 << w, emit);
        path.pop();
    }
}

/// Every simple cycle of length at least 3 through `v`, each listed once.
pub fn cycles_through_vertex(g: &Graph, v: usize) -> Result<Vec<CycleRecord>> {
    if v >= g.order() {
        return Err(Error::UnknownVertex(v));
    }
    let mut out = Vec::new();
    let next = |u: usize| g.neighbor_mask(u);
    for a in g.neighbors(v) {
        let mut path = vec![v, a];
        extend_paths(&next, v, &mut path, 1 << v | 1 << a, &mut |p| {
            if p.len() >= 3 && p[1] < p[p.len() - 1] {
                out.push(CycleRecord::new(p.to_vec()));
            }
        });
    }
    Ok(out)
}

/// Every simple cycle of length at least 3 that uses the edge `uv`. Each
/// record starts `u, v, ..`.
pub fn cycles_through_edge(g: &Graph, u: usize, v: usize) -> Result<Vec<CycleRecord>> {
    if !g.has_edge(u, v) {
        return Err(Error::MissingEdge(u, v));
    }
    let mut out = Vec::new();
    // paths v -> .. -> u avoiding the edge itself
    let next = |w: usize| {
        let m = g.neighbor_mask(w);
        if w == v {
            m & !(1 << u)
        } else {
            m
        }
    };
    let mut path = vec![v];
    extend_paths(&next, u, &mut path, 1 << v | 1 << u, &mut |p| {
        if p.len() >= 2 {
            let mut cyc = Vec::with_capacity(p.len() + 1);
            cyc.push(u);
            cyc.extend_from_slice(p);
            out.push(CycleRecord::new(cyc));
        }
    });
    Ok(out)
}

/// Every consistently directed simple cycle through `v`, digons included.
pub fn dicycles_through_vertex(d: &Digraph, v: usize) -> Result<Vec<CycleRecord>> {
    if v >= d.order() {
        return Err(Error::UnknownVertex(v));
    }
    let mut out = Vec::new();
    let next = |u: usize| d.out_mask(u);
    for a in d.successors(v) {
        let mut path = vec![v, a];
        extend_paths(&next, v, &mut path, 1 << v | 1 << a, &mut |p| {
            out.push(CycleRecord::new(p.to_vec()));
        });
    }
    Ok(out)
}

/// Every consistently directed simple cycle using the arc `tail -> head`.
/// Each record starts `tail, head, ..`.
pub fn dicycles_through_arc(d: &Digraph, tail: usize, head: usize) -> Result<Vec<CycleRecord>> {
    if !d.has_arc(tail, head) {
        return Err(Error::MissingEdge(tail, head));
    }
    let mut out = Vec::new();
    let next = |u: usize| d.out_mask(u);
    let mut path = vec![tail, head];
    extend_paths(&next, tail, &mut path, 1 << tail | 1 << head, &mut |p| {
        out.push(CycleRecord::new(p.to_vec()));
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        Graph::from_edges(n, &e).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn tree_has_no_cycles() {
        let t = Graph::from_edges(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        for v in 0..4 {
            assert!(cycles_through_vertex(&t, v).unwrap().is_empty());
        }
        assert!(cycles_through_edge(&t, 0, 1).unwrap().is_empty());
    }

    #[test]
    fn c5_single_cycle() {
        let c5 = cycle(5);
        for v in 0..5 {
            let cs = cycles_through_vertex(&c5, v).unwrap();
            assert_eq!(cs.len(), 1);
            assert_eq!(cs[0].len(), 5);
        }
        let c4 = cycle(4);
        let cs = cycles_through_edge(&c4, 1, 2).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].len(), 4);
    }

    #[test]
    fn k4_counts() {
        let k4 = complete(4);
        for v in 0..4 {
            let cs = cycles_through_vertex(&k4, v).unwrap();
            assert_eq!(cs.len(), 6);
            assert_eq!(cs.iter().filter(|c| c.len() == 3).count(), 3);
        }
        for (u, v) in k4.edges() {
            let cs = cycles_through_edge(&k4, u, v).unwrap();
            assert_eq!(cs.len(), 4);
            assert_eq!(cs.iter().filter(|c| c.len() == 3).count(), 2);
            assert!(cs.iter().all(|c| c.contains(u) && c.contains(v)));
        }
    }

    #[test]
    fn edge_argument_errors() {
        let p = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(cycles_through_edge(&p, 0, 2), Err(Error::MissingEdge(0, 2)));
        assert_eq!(cycles_through_vertex(&p, 3), Err(Error::UnknownVertex(3)));
    }

    #[test]
    fn directed_examples() {
        let tri = Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let cs = dicycles_through_vertex(&tri, 0).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].vertices(), &[0, 1, 2]);

        let digon = Digraph::from_arcs(2, &[(0, 1), (1, 0)]).unwrap();
        let cs = dicycles_through_vertex(&digon, 0).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].len(), 2);
        assert_eq!(dicycles_through_arc(&digon, 1, 0).unwrap().len(), 1);

        let dag = Digraph::from_arcs(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        for v in 0..3 {
            assert!(dicycles_through_vertex(&dag, v).unwrap().is_empty());
        }
        assert!(dicycles_through_arc(&dag, 2, 0).is_err());
    }

    #[test]
    fn complete_digraph_counts() {
        // through a fixed vertex of the complete digraph on 4 vertices:
        // 3 digons, 6 directed triangles, 6 directed 4-cycles
        let d = Digraph::symmetric(&complete(4));
        let cs = dicycles_through_vertex(&d, 0).unwrap();
        assert_eq!(cs.len(), 15);
    }
}
