use std::fmt;

use super::matrix::{rref, solve_row_combination, Matrix};
use super::{Fp, Vector};
use crate::error::{Error, Result};

/// A linear subspace of GF(p)^n held in canonical form: its basis is the
/// reduced row echelon form with zero rows removed. Two subspaces are equal
/// exactly when their canonical bases are identical, so `Eq`, `Hash` and
/// `Ord` are structural.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    field: Fp,
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize, field: Fp) -> Self {
        Subspace {
            field,
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize, field: Fp) -> Self {
        Subspace {
            field,
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of standard basis vectors with the given 0-based indices.
    pub fn coordinate(ambient: usize, field: Fp, indices: impl IntoIterator<Item = usize>) -> Self {
        let vectors: Vec<Vector> = indices
            .into_iter()
            .map(|i| {
                let mut v = vec![0; ambient];
                v[i] = 1;
                v
            })
            .collect();
        Self::span_unchecked(&vectors, ambient, field)
    }

    pub fn span<V: AsRef<[u8]>>(vectors: &[V], ambient: usize, field: Fp) -> Result<Self> {
        for v in vectors {
            let len = v.as_ref().len();
            if len != ambient {
                return Err(Error::LengthMismatch {
                    expected: ambient,
                    got: len,
                });
            }
        }
        Ok(Self::span_unchecked(vectors, ambient, field))
    }

    pub(crate) fn span_unchecked<V: AsRef<[u8]>>(vectors: &[V], ambient: usize, field: Fp) -> Self {
        let m = Matrix::from_rows(ambient, vectors);
        Self::from_matrix(&m, field)
    }

    /// Row space of `m`.
    pub fn from_matrix(m: &Matrix, field: Fp) -> Self {
        let (basis, pivots) = rref(m, field);
        Subspace {
            field,
            ambient: m.cols(),
            basis,
            pivots,
        }
    }

    #[inline]
    pub fn field(&self) -> Fp {
        self.field
    }

    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = &[u8]> + '_ {
        self.basis.row_iter()
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.field != other.field || self.ambient != other.ambient {
            return Err(Error::AmbientMismatch);
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let rows: Vec<&[u8]> = self.basis_rows().chain(other.basis_rows()).collect();
        Ok(Self::span_unchecked(&rows, self.ambient, self.field))
    }

    /// Intersection by the Zassenhaus construction: reduce `[a | a]` stacked
    /// on `[b | 0]`; rows with vanishing left half span `a ∩ b`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let n = self.ambient;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(n, self.field));
        }
        let mut m = Matrix::zeros(self.dim() + other.dim(), 2 * n);
        for (i, row) in self.basis_rows().enumerate() {
            for c in 0..n {
                m.set(i, c, row[c]);
                m.set(i, n + c, row[c]);
            }
        }
        for (i, row) in other.basis_rows().enumerate() {
            for c in 0..n {
                m.set(self.dim() + i, c, row[c]);
            }
        }
        let (red, pivots) = rref(&m, self.field);
        let rows: Vec<Vector> = pivots
            .iter()
            .enumerate()
            .filter(|(_, &p)| p >= n)
            .map(|(i, _)| red.row(i)[n..].to_vec())
            .collect();
        Ok(Self::span_unchecked(&rows, n, self.field))
    }

    /// True when `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_compatible(other)?;
        if other.dim() > self.dim() {
            return Ok(false);
        }
        Ok(other.basis_rows().all(|r| self.contains_vector_unchecked(r)))
    }

    pub fn contains_vector(&self, v: &[u8]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::LengthMismatch {
                expected: self.ambient,
                got: v.len(),
            });
        }
        Ok(self.contains_vector_unchecked(v))
    }

    fn contains_vector_unchecked(&self, v: &[u8]) -> bool {
        let f = self.field;
        let mut w = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = w[p];
            if c == 0 {
                continue;
            }
            let neg = f.neg(c);
            let row = self.basis.row(i);
            for j in p..self.ambient {
                w[j] = f.axpy(w[j], neg, row[j]);
            }
        }
        w.iter().all(|&x| x == 0)
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is not in
    /// the subspace. The coordinate on basis row `i` is `v[pivot_i]`.
    pub fn coordinates(&self, v: &[u8]) -> Option<Vector> {
        if v.len() != self.ambient || !self.contains_vector_unchecked(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p]).collect())
    }

    /// The vector with the given coordinates in the canonical basis.
    pub fn combine(&self, coeffs: &[u8]) -> Vector {
        assert_eq!(coeffs.len(), self.dim());
        let f = self.field;
        let mut out = vec![0; self.ambient];
        for (row, &c) in self.basis_rows().zip(coeffs) {
            if c == 0 {
                continue;
            }
            for (o, &x) in out.iter_mut().zip(row) {
                *o = f.axpy(*o, c, x);
            }
        }
        out
    }

    /// All `p^dim` vectors of the subspace, in lexicographic order of their
    /// coordinate tuples.
    pub fn vectors(&self) -> impl Iterator<Item = Vector> + '_ {
        let p = self.field.p() as u8;
        let d = self.dim();
        let total = (self.field.p() as u64).pow(d as u32);
        let mut coeffs = vec![0u8; d];
        (0..total).map(move |idx| {
            if idx > 0 {
                for c in coeffs.iter_mut().rev() {
                    *c += 1;
                    if *c == p {
                        *c = 0;
                    } else {
                        break;
                    }
                }
            }
            self.combine(&coeffs)
        })
    }

    /// Image of this subspace under the projection onto `onto` along `along`.
    pub fn project(&self, onto: &Subspace, along: &Subspace) -> Result<Subspace> {
        let images = self
            .basis_rows()
            .map(|r| project(r, onto, along))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::span_unchecked(&images, self.ambient, self.field))
    }

    pub fn rows_vec(&self) -> Vec<Vec<u8>> {
        self.basis.to_rows()
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, r) in self.basis_rows().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            for x in r {
                write!(f, "{x}")?;
            }
        }
        write!(f, ">/{}^{}", self.field, self.ambient)
    }
}

/// Deterministic complement of `inner` inside `outer`: the canonical basis
/// rows of `outer` whose indices are not pivots of `inner` written in
/// `outer`-coordinates.
pub fn canonical_complement(inner: &Subspace, outer: &Subspace) -> Result<Subspace> {
    inner.check_compatible(outer)?;
    let coords: Vec<Vector> = inner
        .basis_rows()
        .map(|r| outer.coordinates(r).ok_or(Error::NotContained))
        .collect::<Result<_>>()?;
    let coord_space = Subspace::span_unchecked(&coords, outer.dim(), outer.field);
    let taken = coord_space.pivots();
    let rows: Vec<&[u8]> = outer
        .basis_rows()
        .enumerate()
        .filter(|(i, _)| !taken.contains(i))
        .map(|(_, r)| r)
        .collect();
    Ok(Subspace::span_unchecked(&rows, outer.ambient, outer.field))
}

/// The component of `v` in `onto` for the direct decomposition
/// `onto ⊕ along`. Fails unless the sum is direct and contains `v`.
pub fn project(v: &[u8], onto: &Subspace, along: &Subspace) -> Result<Vector> {
    onto.check_compatible(along)?;
    if v.len() != onto.ambient {
        return Err(Error::LengthMismatch {
            expected: onto.ambient,
            got: v.len(),
        });
    }
    let rows: Vec<&[u8]> = onto.basis_rows().chain(along.basis_rows()).collect();
    if onto.sum(along)?.dim() != rows.len() {
        return Err(Error::NotDirect);
    }
    let coeffs = solve_row_combination(&rows, v, onto.field).ok_or(Error::OutsideSum)?;
    Ok(onto.combine(&coeffs[..onto.dim()]))
}

/// Sum of an arbitrary collection of subspaces of a common ambient space.
pub fn sum_all<'a>(
    spaces: impl IntoIterator<Item = &'a Subspace>,
    ambient: usize,
    field: Fp,
) -> Subspace {
    let mut rows: Vec<&[u8]> = Vec::new();
    for s in spaces {
        assert_eq!(s.ambient, ambient, "ambient mismatch in sum");
        rows.extend(s.basis_rows());
    }
    Subspace::span_unchecked(&rows, ambient, field)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> Fp {
        Fp::new(p).unwrap()
    }

    fn e(n: usize, i: usize) -> Vector {
        let mut v = vec![0; n];
        v[i] = 1;
        v
    }

    #[test]
    fn span_examples() {
        let f = gf(2);
        let s = Subspace::span(&[vec![1, 0, 0], vec![1, 1, 0]], 3, f).unwrap();
        assert_eq!(s.basis().to_rows(), vec![vec![1, 0, 0], vec![0, 1, 0]]);
        let z = Subspace::span::<Vector>(&[], 3, f).unwrap();
        assert!(z.is_zero());
        let s2 = Subspace::span(&[e(3, 1)], 3, f).unwrap();
        assert_eq!(s2.basis().to_rows(), vec![vec![0, 1, 0]]);
        assert!(Subspace::span(&[vec![1, 0]], 3, f).is_err());
    }

    #[test]
    fn sum_intersect_contains() {
        let f = gf(2);
        let a = Subspace::coordinate(3, f, [0]);
        let b = Subspace::coordinate(3, f, [1]);
        assert_eq!(a.sum(&b).unwrap(), Subspace::coordinate(3, f, [0, 1]));
        let x = Subspace::coordinate(3, f, [0, 1]);
        let y = Subspace::coordinate(3, f, [1, 2]);
        assert_eq!(x.intersect(&y).unwrap(), Subspace::coordinate(3, f, [1]));
        assert!(x.contains(&x).unwrap());
        assert!(!x.contains(&y).unwrap());
        let other = Subspace::zero(4, f);
        assert_eq!(x.sum(&other), Err(Error::AmbientMismatch));
    }

    #[test]
    fn complement_examples() {
        let f = gf(2);
        let inner = Subspace::coordinate(2, f, [0]);
        let outer = Subspace::full(2, f);
        assert_eq!(
            canonical_complement(&inner, &outer).unwrap(),
            Subspace::coordinate(2, f, [1])
        );
        let diag = Subspace::span(&[vec![1, 1]], 2, f).unwrap();
        assert_eq!(
            canonical_complement(&diag, &outer).unwrap(),
            Subspace::coordinate(2, f, [1])
        );
        assert!(canonical_complement(&outer, &outer).unwrap().is_zero());
        assert_eq!(
            canonical_complement(&outer, &inner),
            Err(Error::NotContained)
        );
    }

    #[test]
    fn project_examples() {
        let f = gf(2);
        let onto = Subspace::coordinate(2, f, [0]);
        let along = Subspace::span(&[vec![1, 1]], 2, f).unwrap();
        assert_eq!(project(&[0, 1], &onto, &along).unwrap(), vec![1, 0]);
        assert_eq!(project(&[1, 0], &onto, &along).unwrap(), vec![1, 0]);
        assert_eq!(project(&[1, 1], &onto, &along).unwrap(), vec![0, 0]);
        assert_eq!(project(&[1, 0], &onto, &onto), Err(Error::NotDirect));
        let small = Subspace::coordinate(3, f, [0]);
        let small2 = Subspace::coordinate(3, f, [1]);
        assert_eq!(project(&[0, 0, 1], &small, &small2), Err(Error::OutsideSum));
    }

    #[test]
    fn vectors_enumerates_all() {
        let f = gf(3);
        let s = Subspace::coordinate(3, f, [0, 2]);
        let vs: Vec<Vector> = s.vectors().collect();
        assert_eq!(vs.len(), 9);
        assert!(vs.iter().all(|v| s.contains_vector(v).unwrap()));
        let mut dedup = vs.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), 9);
    }
}
