use std::fmt;

use crate::algebra::Rational;
use crate::error::{Error, Result};

use super::model::{AnyGraph, Digraph, Graph};

/// Coefficients of `H = beta * D + gamma * A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatrixParams {
    pub beta: Rational,
    pub gamma: Rational,
}

impl MatrixParams {
    pub fn new(beta: Rational, gamma: Rational) -> Self {
        Self { beta, gamma }
    }

    pub fn from_ints(beta: i64, gamma: i64) -> Self {
        Self::new(beta.into(), gamma.into())
    }

    pub fn laplacian() -> Self {
        Self::from_ints(1, -1)
    }

    pub fn signless() -> Self {
        Self::from_ints(1, 1)
    }

    pub fn adjacency() -> Self {
        Self::from_ints(0, 1)
    }

    /// `A_alpha = alpha * D + (1 - alpha) * A`, defined for `0 <= alpha <= 1`.
    pub fn a_alpha(alpha: &Rational) -> Result<Self> {
        if alpha.is_negative() || alpha > &Rational::one() {
            return Err(Error::InvalidParameter(format!(
                "alpha must lie in [0, 1], got {alpha}"
            )));
        }
        Ok(Self::new(alpha.clone(), Rational::one() - alpha))
    }
}

impl fmt::Display for MatrixParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(beta={}, gamma={})", self.beta, self.gamma)
    }
}

/// Named parameterisations of `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Preset {
    Laplacian,
    Signless,
    Adjacency,
    AAlpha(Rational),
}

impl Preset {
    pub fn params(&self) -> Result<MatrixParams> {
        match self {
            Preset::Laplacian => Ok(MatrixParams::laplacian()),
            Preset::Signless => Ok(MatrixParams::signless()),
            Preset::Adjacency => Ok(MatrixParams::adjacency()),
            Preset::AAlpha(a) => MatrixParams::a_alpha(a),
        }
    }
}

/// Dense square rational matrix whose rows and columns are tagged with the
/// original vertex they came from.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    order: usize,
    entries: Vec<Rational>,
    labels: Vec<usize>,
}

impl RationalMatrix {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return Err(Error::InvalidParameter("matrix is not square".into()));
        }
        Ok(Self {
            order,
            entries: rows.into_iter().flatten().collect(),
            labels: (0..order).collect(),
        })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from(x)).collect())
                .collect(),
        )
    }

    pub fn zeros(order: usize) -> Self {
        Self {
            order,
            entries: vec![Rational::zero(); order * order],
            labels: (0..order).collect(),
        }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.order + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.entries[i * self.order + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        (0..self.order).map(|i| self.row(i).to_vec()).collect()
    }

    /// Deletes the rows and columns of the given original vertices. Diagonal
    /// entries are kept as they are, so they still reflect degrees in the
    /// original graph.
    pub fn principal_submatrix(&self, removed: &[usize]) -> Result<RationalMatrix> {
        for &r in removed {
            if !self.labels.contains(&r) {
                return Err(Error::UnknownVertex(r));
            }
        }
        let keep: Vec<usize> = (0..self.order)
            .filter(|&i| !removed.contains(&self.labels[i]))
            .collect();
        let order = keep.len();
        let mut entries = Vec::with_capacity(order * order);
        for &i in &keep {
            for &j in &keep {
                entries.push(self.get(i, j).clone());
            }
        }
        Ok(RationalMatrix {
            order,
            entries,
            labels: keep.iter().map(|&i| self.labels[i]).collect(),
        })
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.order {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

pub fn build_h_graph(g: &Graph, p: &MatrixParams) -> RationalMatrix {
    let n = g.order();
    let mut m = RationalMatrix::zeros(n);
    for v in 0..n {
        m.set(v, v, &p.beta * Rational::from(g.degree(v)));
        for u in g.neighbors(v) {
            m.set(v, u, p.gamma.clone());
        }
    }
    m
}

pub fn build_h_digraph(d: &Digraph, p: &MatrixParams) -> RationalMatrix {
    let n = d.order();
    let mut m = RationalMatrix::zeros(n);
    for v in 0..n {
        m.set(v, v, &p.beta * Rational::from(d.out_degree(v)));
        for u in d.successors(v) {
            m.set(v, u, p.gamma.clone());
        }
    }
    m
}

/// `H = beta * D + gamma * A`, with out-degrees for digraphs.
pub fn build_h(g: &AnyGraph, p: &MatrixParams) -> RationalMatrix {
    match g {
        AnyGraph::Undirected(g) => build_h_graph(g, p),
        AnyGraph::Directed(d) => build_h_digraph(d, p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2() -> Graph {
        Graph::from_edges(2, &[(0, 1)]).unwrap()
    }

    #[test]
    fn laplacian_of_k2() {
        let m = build_h_graph(&k2(), &MatrixParams::laplacian());
        assert_eq!(
            m,
            RationalMatrix::from_int_rows(&[&[1, -1], &[-1, 1]]).unwrap()
        );
        let a = build_h_graph(&k2(), &MatrixParams::adjacency());
        assert_eq!(
            a,
            RationalMatrix::from_int_rows(&[&[0, 1], &[1, 0]]).unwrap()
        );
    }

    #[test]
    fn directed_path_signless() {
        let d = Digraph::from_arcs(2, &[(0, 1)]).unwrap();
        let m = build_h_digraph(&d, &MatrixParams::signless());
        assert_eq!(
            m,
            RationalMatrix::from_int_rows(&[&[1, 1], &[0, 0]]).unwrap()
        );
    }

    #[test]
    fn submatrix_keeps_original_degree() {
        let m = build_h_graph(&k2(), &MatrixParams::laplacian());
        let s = m.principal_submatrix(&[1]).unwrap();
        assert_eq!(s.order(), 1);
        assert_eq!(s.get(0, 0), &Rational::one());
        assert_eq!(s.labels(), &[0]);
        assert_eq!(m.principal_submatrix(&[]).unwrap(), m);
        let none = m.principal_submatrix(&[0, 1]).unwrap();
        assert_eq!(none.order(), 0);
        assert_eq!(m.principal_submatrix(&[5]), Err(Error::UnknownVertex(5)));
        assert_eq!(s.principal_submatrix(&[1]), Err(Error::UnknownVertex(1)));
    }

    #[test]
    fn a_alpha_range() {
        assert!(MatrixParams::a_alpha(&Rational::new(1, 2).unwrap()).is_ok());
        assert!(MatrixParams::a_alpha(&Rational::from(2)).is_err());
        assert!(MatrixParams::a_alpha(&Rational::from(-1)).is_err());
        let p = MatrixParams::a_alpha(&Rational::new(1, 3).unwrap()).unwrap();
        assert_eq!(p.gamma, Rational::new(2, 3).unwrap());
    }
}
