//! Enumeration of subspaces over a finite field.
//!
//! Subspaces of a space `V` of dimension `m` are in bijection with reduced
//! row echelon `j x m` matrices; we walk pivot patterns and free entries,
//! push each matrix through the canonical basis of `V` and sort the results
//! so that output order is the lexicographic order of canonical bases.

use super::{canonical_complement, Fp, Matrix, Subspace};
use crate::error::{Error, Result};

/// Number of `k`-dimensional subspaces of an `n`-dimensional space over a
/// field with `q` elements.
pub fn gaussian_binomial(n: usize, k: usize, q: u32) -> u128 {
    if k > n {
        return 0;
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= q.pow((n - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
    }
    num / den
}

/// Number of lines in an `m`-dimensional space, `[m]_q`.
pub fn q_integer(m: usize, q: u32) -> u128 {
    gaussian_binomial(m, 1, q)
}

/// Every RREF `j x m` matrix over `f` (without zero rows).
fn rref_matrices(m: usize, j: usize, f: Fp) -> Vec<Matrix> {
    let mut out = Vec::new();
    let mut pivots = Vec::with_capacity(j);
    pivot_sets(m, j, 0, &mut pivots, &mut |piv| {
        let mut free = Vec::new();
        for (r, &pc) in piv.iter().enumerate() {
            for c in pc + 1..m {
                if !piv.contains(&c) {
                    free.push((r, c));
                }
            }
        }
        let cells = Subspace::full(free.len(), f);
        for assignment in cells.vectors() {
            let mut mat = Matrix::zeros(j, m);
            for (r, &pc) in piv.iter().enumerate() {
                mat.set(r, pc, 1);
            }
            for (&(r, c), &v) in free.iter().zip(&assignment) {
                mat.set(r, c, v);
            }
            out.push(mat);
        }
    });
    out
}

fn pivot_sets(m: usize, j: usize, start: usize, cur: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
    if cur.len() == j {
        emit(cur);
        return;
    }
    let remaining = j - cur.len();
    for c in start..=m.saturating_sub(remaining) {
        if m < remaining {
            break;
        }
        cur.push(c);
        pivot_sets(m, j, c + 1, cur, emit);
        cur.pop();
    }
}

impl Subspace {
    /// All `j`-dimensional subspaces of `self`, each exactly once, sorted by
    /// canonical basis matrix.
    pub fn subspaces(&self, j: usize) -> Result<Vec<Subspace>> {
        if j > self.dim() {
            return Err(Error::BadDimension {
                dim: j,
                available: self.dim(),
            });
        }
        let f = self.field();
        let mut out: Vec<Subspace> = rref_matrices(self.dim(), j, f)
            .into_iter()
            .map(|coords| Subspace::from_matrix(&coords.mul(self.basis(), f), f))
            .collect();
        out.sort();
        Ok(out)
    }

    /// All `j`-dimensional subspaces `S` with `lower ⊆ S ⊆ self`, sorted.
    pub fn subspaces_containing(&self, lower: &Subspace, j: usize) -> Result<Vec<Subspace>> {
        if !self.contains(lower)? {
            return Err(Error::NotContained);
        }
        if j < lower.dim() || j > self.dim() {
            return Err(Error::BadDimension {
                dim: j,
                available: self.dim(),
            });
        }
        let complement = canonical_complement(lower, self)?;
        let mut out: Vec<Subspace> = complement
            .subspaces(j - lower.dim())?
            .into_iter()
            .map(|s| lower.sum(&s))
            .collect::<Result<_>>()?;
        out.sort();
        Ok(out)
    }

    /// Number of subspaces `subspaces_containing` would return.
    pub fn count_between(lower_dim: usize, upper_dim: usize, j: usize, q: u32) -> u128 {
        if j < lower_dim || j > upper_dim {
            return 0;
        }
        gaussian_binomial(upper_dim - lower_dim, j - lower_dim, q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_binomials() {
        assert_eq!(gaussian_binomial(4, 2, 2), 35);
        assert_eq!(gaussian_binomial(2, 1, 2), 3);
        assert_eq!(gaussian_binomial(5, 3, 2), 155);
        assert_eq!(gaussian_binomial(3, 0, 7), 1);
        assert_eq!(gaussian_binomial(3, 4, 7), 0);
        assert_eq!(q_integer(3, 3), 13);
    }

    #[test]
    fn enumerate_small_cases() {
        let f = Fp::new(2).unwrap();
        let zero_only = Subspace::full(3, f).subspaces(0).unwrap();
        assert_eq!(zero_only, vec![Subspace::zero(3, f)]);
        assert_eq!(Subspace::full(2, f).subspaces(1).unwrap().len(), 3);
        assert_eq!(Subspace::full(4, f).subspaces(2).unwrap().len(), 35);
        assert!(Subspace::full(2, f).subspaces(3).is_err());
    }

    #[test]
    fn enumeration_is_sorted_and_inside() {
        let f = Fp::new(3).unwrap();
        let v = Subspace::span(&[vec![1, 1, 0, 0], vec![0, 0, 1, 2], vec![0, 1, 0, 1]], 4, f).unwrap();
        let subs = v.subspaces(2).unwrap();
        assert_eq!(subs.len() as u128, gaussian_binomial(3, 2, 3));
        assert!(subs.windows(2).all(|w| w[0] < w[1]));
        assert!(subs.iter().all(|s| v.contains(s).unwrap() && s.dim() == 2));
    }

    #[test]
    fn between_counts() {
        let f = Fp::new(2).unwrap();
        let lower = Subspace::coordinate(5, f, [0]);
        let upper = Subspace::coordinate(5, f, [0, 1, 2, 3]);
        let mids = upper.subspaces_containing(&lower, 2).unwrap();
        assert_eq!(mids.len() as u128, Subspace::count_between(1, 4, 2, 2));
        assert!(mids.iter().all(|m| m.contains(&lower).unwrap()));
        let outside = Subspace::coordinate(5, f, [4]);
        assert!(upper.subspaces_containing(&outside, 2).is_err());
    }
}
