//! Exact integer and rational arithmetic: the scalar type, factorization,
//! squarefree decomposition and exact square detection.

mod factor;
mod rational;

pub use factor::{factor, factor_integer, is_prime, is_square, squarefree_part, Factorization};
pub use rational::Rational;
