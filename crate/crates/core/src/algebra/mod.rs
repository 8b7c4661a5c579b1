//! Exact rational scalars and dense univariate polynomials over them.

mod poly;
mod rational;

pub use poly::Poly;
pub use rational::Rational;
