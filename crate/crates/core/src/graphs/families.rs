//! Standard families and exhaustive/random generators for small graphs.

use std::collections::BTreeSet;

use rand::Rng;

use crate::error::Result;

use super::model::{Digraph, Graph};

pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return path(n);
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

pub fn star(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Graph::from_edges(n, &edges)
}

pub fn directed_cycle(n: usize) -> Result<Digraph> {
    let arcs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Digraph::from_arcs(n, &arcs)
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Each ordered pair becomes an arc independently with probability `p`.
pub fn random_digraph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Digraph> {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                arcs.push((u, v));
            }
        }
    }
    Digraph::from_arcs(n, &arcs)
}

fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    pairs
}

/// Number of labelled graphs on `n` vertices, `2^(n choose 2)`.
pub fn labelled_graph_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// The labelled graph on `n` vertices whose edge set is encoded by `code`
/// over the lexicographically ordered vertex pairs.
pub fn labelled_graph(n: usize, code: u64) -> Graph {
    let edges: Vec<_> = vertex_pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| code >> i & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Graph::from_edges(n, &edges).expect("pairs are distinct and in range")
}

pub fn all_labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    (0..labelled_graph_count(n)).map(move |c| labelled_graph(n, c))
}

pub fn labelled_digraph_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1))
}

pub fn labelled_digraph(n: usize, code: u64) -> Digraph {
    let arcs: Vec<_> = (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .enumerate()
        .filter(|(i, _)| code >> i & 1 == 1)
        .map(|(_, a)| a)
        .collect();
    Digraph::from_arcs(n, &arcs).expect("arcs are distinct and in range")
}

pub fn all_labelled_digraphs(n: usize) -> impl Iterator<Item = Digraph> {
    (0..labelled_digraph_count(n)).map(move |c| labelled_digraph(n, c))
}

/// Rooted canonical code (AHU): `(` children codes sorted `)`.
fn rooted_code(g: &Graph, v: usize, parent: Option<usize>) -> String {
    let mut kids: Vec<String> = g
        .neighbors(v)
        .filter(|&w| Some(w) != parent)
        .map(|w| rooted_code(g, w, Some(v)))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

fn tree_centers(t: &Graph) -> Vec<usize> {
    let n = t.order();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut leaves: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= leaves.len();
        let mut next = Vec::new();
        for &l in &leaves {
            deg[l] = 0;
            for w in t.neighbors(l) {
                if deg[w] > 0 {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        leaves = next;
    }
    leaves
}

/// Isomorphism-invariant code of a tree.
pub fn tree_code(t: &Graph) -> String {
    tree_centers(t)
        .into_iter()
        .map(|c| rooted_code(t, c, None))
        .min()
        .unwrap_or_default()
}

/// One representative of every isomorphism class of trees on `n` vertices,
/// grown by attaching a leaf to every vertex of every tree on `n - 1`.
pub fn trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut current = vec![Graph::empty(1)?];
    for m in 2..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for t in &current {
            for v in 0..t.order() {
                let mut edges = t.edges();
                edges.push((v, m - 1));
                let grown = Graph::from_edges(m, &edges)?;
                if seen.insert(tree_code(&grown)) {
                    next.push(grown);
                }
            }
        }
        current = next;
    }
    Ok(current)
}
