//! Exact hook immanants and hook immanantal polynomials of graph matrices
//! `H = beta * D + gamma * A`.
//!
//! The hook character `chi_k` of `S_n` belongs to the partition
//! `(k, 1^(n-k))`; `chi_1` is the sign character and `chi_n` the trivial one.
//! For a square matrix `B`
//!
//! ```text
//! d_k(B) = sum over sigma in S_n of chi_k(sigma) * prod_i B[i][sigma(i)]
//! Φ_k(B, x) = d_k(x I - B)
//! ```
//!
//! so `d_1` is the determinant and `d_n` the permanent. [`immanant`] holds
//! the permutation-sum oracle, [`recursion`] the vertex and edge deletion
//! recursions that avoid the `n!` sum.

pub mod algebra;
mod error;
pub mod exec;
pub mod graphs;
pub mod immanant;
pub mod recursion;
pub mod symgroup;
pub mod verify;

pub use algebra::{Poly, Rational};
pub use error::{Error, Result};
pub use exec::Exec;
