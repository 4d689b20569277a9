//! Exact linear algebra over prime fields and canonical subspace arithmetic.

mod enumerate;
mod field;
mod map;
mod matrix;
mod subspace;

pub use enumerate::{gaussian_binomial, q_integer};
pub use field::Fp;
pub use map::{graph, LinearMap};
pub use matrix::{rank, rref, solve_row_combination, Matrix};
pub use subspace::{canonical_complement, project, sum_all, Subspace};

/// A vector of GF(p)^n as residues.
pub type Vector = Vec<u8>;

/// Standard basis vector `e_{i+1}` (0-based index `i`).
pub fn unit(n: usize, i: usize) -> Vector {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}
