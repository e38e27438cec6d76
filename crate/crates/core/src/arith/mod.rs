//! Exact scalar and univariate arithmetic.

pub mod alg;
pub mod factor;
pub mod poly;
pub mod rational;

pub use alg::{alg_zero_test, dynamic, Alg, AlgebraicValue, Context, Split, ZeroDecision};
pub use factor::factor_rational;
pub use poly::{poly_gcd, squarefree_decompose, UniPoly};
pub use rational::Rational;
