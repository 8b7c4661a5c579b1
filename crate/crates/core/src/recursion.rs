//! Deletion recursions for hook immanantal polynomials `Φ_k(H_S, x)` and
//! hook immanants `d_k(H_S)` of `H = beta * D + gamma * A`.
//!
//! Every permutation contributing to `d_k(x I - H_S)` is split by the cycle
//! containing a pivot vertex `v`:
//!
//! * `v` fixed: the diagonal entry `x - beta * d(v)` times
//!   `Φ_{k-1} + Φ_k` on `S ∪ {v}`;
//! * `v` on a permutation cycle with vertex set `C` of length `l`: weight
//!   `gamma^l` times `(-1)^l Φ_{k-l} - Φ_k` on `S ∪ C`.
//!
//! For graphs the cycles through `v` are its edges (`l = 2`) and its simple
//! cycles of length at least 3 counted twice, once per orientation. For
//! digraphs they are the consistently directed cycles through `v`, digons
//! included, each counted once. Degrees always refer to the full graph:
//! `H_S` is a principal submatrix, not the matrix of `G - S`.
//!
//! When a cycle uses up every remaining vertex the order drops to zero and
//! the rim-hook splitting leaves the residual value `(-1)^(k-1)` for
//! `k >= 1` (see [`crate::symgroup::split_character`]). That value is the
//! base case of the recursion.

use std::collections::HashMap;
use std::sync::Arc;

use crate::algebra::{Poly, Rational};
use crate::error::{Error, Result};
use crate::graphs::{
    bits, cycles_through_edge, cycles_through_vertex, dicycles_through_arc,
    dicycles_through_vertex, AnyGraph, Digraph, Graph, MatrixParams, Preset,
};

/// What the recursion computes. The two instances differ only by the sign
/// bookkeeping of `d_k(H) = (-1)^n Φ_k(H, 0)`.
pub trait RecursionValue: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    /// Value on the empty vertex set for hook index `k`.
    fn residual(k: i64) -> Self;
    /// Contribution of a fixed pivot with diagonal `beta_deg`.
    fn fixed_point(beta_deg: &Rational, inner: &Self) -> Self;
    /// Contribution of deleting one diagonal entry equal to `-c` from
    /// `x I - H`; drops the order by one.
    fn diagonal_shift(c: &Rational, inner: &Self) -> Self;
    /// `weight` times the split of an `l`-cycle into arm and leg terms.
    fn cycle_term(len: usize, weight: &Rational, arm: &Self, leg: &Self) -> Self;
    fn scaled(&self, c: &Rational) -> Self;
    fn plus(&self, other: &Self) -> Self;
}

impl RecursionValue for Poly {
    fn zero() -> Self {
        Poly::zero()
    }

    fn residual(k: i64) -> Self {
        if k >= 1 {
            Poly::constant(Rational::sign_power(k - 1))
        } else {
            Poly::zero()
        }
    }

    fn fixed_point(beta_deg: &Rational, inner: &Self) -> Self {
        &Poly::x_minus(beta_deg) * inner
    }

    fn diagonal_shift(c: &Rational, inner: &Self) -> Self {
        inner.scale(&-c)
    }

    fn cycle_term(len: usize, weight: &Rational, arm: &Self, leg: &Self) -> Self {
        let mut out = arm.scale(&(weight * Rational::sign_power(len as i64)));
        out.add_scaled(leg, &-weight);
        out
    }

    fn scaled(&self, c: &Rational) -> Self {
        self.scale(c)
    }

    fn plus(&self, other: &Self) -> Self {
        self + other
    }
}

impl RecursionValue for Rational {
    fn zero() -> Self {
        Rational::zero()
    }

    fn residual(k: i64) -> Self {
        if k >= 1 {
            Rational::sign_power(k - 1)
        } else {
            Rational::zero()
        }
    }

    fn fixed_point(beta_deg: &Rational, inner: &Self) -> Self {
        beta_deg * inner
    }

    fn diagonal_shift(c: &Rational, inner: &Self) -> Self {
        c * inner
    }

    fn cycle_term(len: usize, weight: &Rational, arm: &Self, leg: &Self) -> Self {
        weight * (arm - Rational::sign_power(len as i64) * leg)
    }

    fn scaled(&self, c: &Rational) -> Self {
        self * c
    }

    fn plus(&self, other: &Self) -> Self {
        self + other
    }
}

/// A permutation cycle available to a pivot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PivotCycle {
    pub mask: u64,
    pub len: usize,
    /// Number of permutation cycles on this vertex sequence: 2 for an
    /// undirected cycle of length at least 3, otherwise 1.
    pub multiplicity: u32,
}

/// Coefficients of `Φ_k`, `Φ_{k-1}`, `Φ_{k-2}` on `H_uv(G)` in the edge
/// recursion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeQuadratic {
    pub k: Rational,
    pub k_minus_1: Rational,
    pub k_minus_2: Rational,
}

impl EdgeQuadratic {
    /// `(beta^2 - gamma^2, 2 beta^2, beta^2 + gamma^2)`.
    pub fn from_params(p: &MatrixParams) -> Self {
        let b2 = &p.beta * &p.beta;
        let g2 = &p.gamma * &p.gamma;
        Self {
            k: &b2 - &g2,
            k_minus_1: Rational::from(2) * &b2,
            k_minus_2: b2 + g2,
        }
    }

    /// The `A_alpha` specialisation with the `Φ_{k-2}` coefficient printed
    /// as `2 alpha^2 + 2 alpha + 1`. Only used to test that variant.
    pub fn printed_a_alpha(alpha: &Rational) -> Self {
        let a2 = alpha * alpha;
        let two = Rational::from(2);
        Self {
            k: &two * alpha - Rational::one(),
            k_minus_1: &two * &a2,
            k_minus_2: &two * &a2 + &two * alpha + Rational::one(),
        }
    }
}

/// One evaluation over a fixed graph and parameter pair. Owns the memo
/// table of subproblems `(removed vertex set, k)`.
pub struct EvalContext<V> {
    graph: AnyGraph,
    params: MatrixParams,
    memo: HashMap<(u64, i64), V>,
    use_memo: bool,
    pivot_cycles: Vec<Option<Arc<Vec<PivotCycle>>>>,
    calls: u64,
}

pub type PolyContext = EvalContext<Poly>;
pub type ImmanantContext = EvalContext<Rational>;

impl<V: RecursionValue> EvalContext<V> {
    pub fn new(graph: impl Into<AnyGraph>, params: MatrixParams) -> Self {
        let graph = graph.into();
        let n = graph.order();
        Self {
            graph,
            params,
            memo: HashMap::new(),
            use_memo: true,
            pivot_cycles: vec![None; n],
            calls: 0,
        }
    }

    /// Same as [`EvalContext::new`] but recomputes every subproblem.
    pub fn without_memo(graph: impl Into<AnyGraph>, params: MatrixParams) -> Self {
        let mut ctx = Self::new(graph, params);
        ctx.use_memo = false;
        ctx
    }

    fn fresh(&self, graph: AnyGraph) -> Self {
        let mut ctx = Self::new(graph, self.params.clone());
        ctx.use_memo = self.use_memo;
        ctx
    }

    pub fn graph(&self) -> &AnyGraph {
        &self.graph
    }

    pub fn params(&self) -> &MatrixParams {
        &self.params
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    /// Number of subproblems evaluated so far (memo hits excluded).
    pub fn evaluations(&self) -> u64 {
        self.calls
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    fn full_mask(&self) -> u64 {
        if self.order() == 64 {
            u64::MAX
        } else {
            (1u64 << self.order()) - 1
        }
    }

    fn diag_degree(&self, v: usize) -> usize {
        match &self.graph {
            AnyGraph::Undirected(g) => g.degree(v),
            AnyGraph::Directed(d) => d.out_degree(v),
        }
    }

    /// Permutation cycles of length at least 2 through `v` in the full graph.
    pub fn pivot_cycles(&mut self, v: usize) -> Arc<Vec<PivotCycle>> {
        if let Some(c) = &self.pivot_cycles[v] {
            return Arc::clone(c);
        }
        let list = match &self.graph {
            AnyGraph::Undirected(g) => undirected_pivot_cycles(g, v),
            AnyGraph::Directed(d) => directed_pivot_cycles(d, v),
        };
        let list = Arc::new(list);
        self.pivot_cycles[v] = Some(Arc::clone(&list));
        list
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order() {
            return Err(Error::UnknownVertex(v));
        }
        Ok(())
    }

    /// Value on the principal submatrix `H_removed`, pivoting on the
    /// smallest surviving vertex.
    pub fn general(&mut self, removed: u64, k: i64) -> V {
        let removed = removed & self.full_mask();
        let order = self.order() - removed.count_ones() as usize;
        if order == 0 {
            return V::residual(k);
        }
        if k < 1 || k > order as i64 {
            return V::zero();
        }
        if self.use_memo {
            if let Some(v) = self.memo.get(&(removed, k)) {
                return v.clone();
            }
        }
        let pivot = (!removed).trailing_zeros() as usize;
        let value = self.expand(removed, pivot, k);
        if self.use_memo {
            let prev = self.memo.insert((removed, k), value.clone());
            debug_assert!(prev.is_none());
        }
        value
    }

    /// One expansion step on `H_removed` around `pivot`.
    fn expand(&mut self, removed: u64, pivot: usize, k: i64) -> V {
        self.calls += 1;
        let with_pivot = removed | 1 << pivot;
        let inner = self
            .general(with_pivot, k - 1)
            .plus(&self.general(with_pivot, k));
        let beta_deg = &self.params.beta * Rational::from(self.diag_degree(pivot));
        let mut total = V::fixed_point(&beta_deg, &inner);
        let gamma = self.params.gamma.clone();
        for pc in self.pivot_cycles(pivot).iter() {
            if pc.mask & removed != 0 {
                continue;
            }
            let rest = removed | pc.mask;
            let weight = gamma.pow(pc.len as u32) * Rational::from(pc.multiplicity as i64);
            let arm = self.general(rest, k - pc.len as i64);
            let leg = self.general(rest, k);
            total = total.plus(&V::cycle_term(pc.len, &weight, &arm, &leg));
        }
        total
    }

    /// Vertex recursion on the whole matrix with a caller-chosen pivot.
    pub fn vertex(&mut self, v: usize, k: i64) -> Result<V> {
        self.check_vertex(v)?;
        if k < 1 || k > self.order() as i64 {
            return Ok(V::zero());
        }
        Ok(self.expand(0, v, k))
    }

    /// Edge (or arc `u -> v`) recursion on the whole matrix.
    pub fn edge(&mut self, u: usize, v: usize, k: i64) -> Result<V> {
        let quad = EdgeQuadratic::from_params(&self.params);
        self.edge_with(u, v, k, &quad)
    }

    /// Edge recursion with explicit coefficients for the `H_uv(G)` terms.
    /// Arcs have no such terms and ignore `quad`.
    pub fn edge_with(&mut self, u: usize, v: usize, k: i64, quad: &EdgeQuadratic) -> Result<V> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        match self.graph.clone() {
            AnyGraph::Undirected(g) => {
                let minus = g.delete_edge(u, v)?;
                if k < 1 || k > self.order() as i64 {
                    return Ok(V::zero());
                }
                let cycles = cycles_through_edge(&g, u, v)?;
                let mut sub = self.fresh(minus.into());
                let beta = self.params.beta.clone();
                let mut total = sub.general(0, k);
                for end in [v, u] {
                    let inner = sub.general(1 << end, k).plus(&sub.general(1 << end, k - 1));
                    total = total.plus(&V::diagonal_shift(&beta, &inner));
                }
                let uv = 1u64 << u | 1 << v;
                total = total
                    .plus(&self.general(uv, k).scaled(&quad.k))
                    .plus(&self.general(uv, k - 1).scaled(&quad.k_minus_1))
                    .plus(&self.general(uv, k - 2).scaled(&quad.k_minus_2));
                let two = Rational::from(2);
                for c in &cycles {
                    let l = c.len();
                    let weight = &two * self.params.gamma.pow(l as u32);
                    let arm = self.general(c.vertex_mask(), k - l as i64);
                    let leg = self.general(c.vertex_mask(), k);
                    total = total.plus(&V::cycle_term(l, &weight, &arm, &leg));
                }
                Ok(total)
            }
            AnyGraph::Directed(d) => {
                let minus = d.delete_arc(u, v)?;
                if k < 1 || k > self.order() as i64 {
                    return Ok(V::zero());
                }
                let cycles = dicycles_through_arc(&d, u, v)?;
                let mut sub = self.fresh(minus.into());
                let beta = self.params.beta.clone();
                let inner = sub.general(1 << u, k).plus(&sub.general(1 << u, k - 1));
                let mut total = sub.general(0, k).plus(&V::diagonal_shift(&beta, &inner));
                for c in &cycles {
                    let l = c.len();
                    let weight = self.params.gamma.pow(l as u32);
                    let arm = self.general(c.vertex_mask(), k - l as i64);
                    let leg = self.general(c.vertex_mask(), k);
                    total = total.plus(&V::cycle_term(l, &weight, &arm, &leg));
                }
                Ok(total)
            }
        }
    }

    /// Vertices of `removed`, for diagnostics.
    pub fn describe(removed: u64) -> Vec<usize> {
        bits(removed).map(|v| v + 1).collect()
    }
}

fn undirected_pivot_cycles(g: &Graph, v: usize) -> Vec<PivotCycle> {
    let mut out: Vec<PivotCycle> = g
        .neighbors(v)
        .map(|u| PivotCycle {
            mask: 1 << u | 1 << v,
            len: 2,
            multiplicity: 1,
        })
        .collect();
    out.extend(
        cycles_through_vertex(g, v)
            .expect("pivot is a vertex")
            .into_iter()
            .map(|c| PivotCycle {
                mask: c.vertex_mask(),
                len: c.len(),
                multiplicity: 2,
            }),
    );
    out
}

fn directed_pivot_cycles(d: &Digraph, v: usize) -> Vec<PivotCycle> {
    dicycles_through_vertex(d, v)
        .expect("pivot is a vertex")
        .into_iter()
        .map(|c| PivotCycle {
            mask: c.vertex_mask(),
            len: c.len(),
            multiplicity: 1,
        })
        .collect()
}

fn vertex_set_mask(ctx_order: usize, removed: &[usize]) -> Result<u64> {
    removed.iter().try_fold(0u64, |m, &v| {
        if v >= ctx_order {
            Err(Error::UnknownVertex(v))
        } else {
            Ok(m | 1 << v)
        }
    })
}

/// `Φ_k(H_S(G), x)` for the principal submatrix without the vertices in
/// `removed`. With every vertex removed this is the residual base value
/// `(-1)^(k-1)` for `k >= 1`.
pub fn phi_general(ctx: &mut PolyContext, removed: &[usize], k: i64) -> Result<Poly> {
    let mask = vertex_set_mask(ctx.order(), removed)?;
    Ok(ctx.general(mask, k))
}

/// `Φ_k(H(G), x)` expanded around the given vertex.
pub fn phi_vertex(ctx: &mut PolyContext, v: usize, k: i64) -> Result<Poly> {
    ctx.vertex(v, k)
}

/// `Φ_k(H(G), x)` through deletion of the edge `uv` (arc `u -> v`).
pub fn phi_edge(ctx: &mut PolyContext, u: usize, v: usize, k: i64) -> Result<Poly> {
    ctx.edge(u, v, k)
}

/// `d_k(H_S(G))` computed natively over the rationals.
pub fn dk_general(ctx: &mut ImmanantContext, removed: &[usize], k: i64) -> Result<Rational> {
    let mask = vertex_set_mask(ctx.order(), removed)?;
    Ok(ctx.general(mask, k))
}

pub fn dk_vertex(ctx: &mut ImmanantContext, v: usize, k: i64) -> Result<Rational> {
    ctx.vertex(v, k)
}

pub fn dk_edge(ctx: &mut ImmanantContext, u: usize, v: usize, k: i64) -> Result<Rational> {
    ctx.edge(u, v, k)
}

/// `Φ_k` of a named matrix (Laplacian, signless Laplacian, adjacency,
/// `A_alpha`).
pub fn preset_poly(g: &AnyGraph, preset: &Preset, k: i64) -> Result<Poly> {
    let params = preset.params()?;
    if *preset == Preset::Adjacency {
        // with beta = 0 principal submatrices are adjacency matrices of
        // vertex-deleted graphs
        debug_assert!((0..g.order()).all(|v| adjacency_deletion_identity(g, 1 << v)));
    }
    let mut ctx = PolyContext::new(g.clone(), params);
    Ok(ctx.general(0, k))
}

/// Whether `A_S(G) = A(G - S)` entrywise.
pub fn adjacency_deletion_identity(g: &AnyGraph, removed: u64) -> bool {
    use crate::graphs::build_h;
    let p = MatrixParams::adjacency();
    let removed_list: Vec<usize> = bits(removed).collect();
    let Ok(sub) = build_h(g, &p).principal_submatrix(&removed_list) else {
        return false;
    };
    let deleted: AnyGraph = match g {
        AnyGraph::Undirected(g) => g.delete_vertices(removed).into(),
        AnyGraph::Directed(d) => {
            let keep: Vec<usize> = (0..d.order()).filter(|v| removed >> v & 1 == 0).collect();
            let arcs: Vec<(usize, usize)> = d
                .arcs()
                .into_iter()
                .filter(|(a, b)| keep.contains(a) && keep.contains(b))
                .map(|(a, b)| {
                    let pa = keep.iter().position(|&x| x == a).unwrap();
                    let pb = keep.iter().position(|&x| x == b).unwrap();
                    (pa, pb)
                })
                .collect();
            match Digraph::from_arcs(keep.len(), &arcs) {
                Ok(d) => d.into(),
                Err(_) => return false,
            }
        }
    };
    sub.rows() == build_h(&deleted, &p).rows()
}
