use super::Fp;

/// Dense row-major matrix of field residues. The field is supplied by the
/// caller of each arithmetic operation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from rows of equal length `cols`.
    pub fn from_rows<R: AsRef<[u8]>>(cols: usize, rows: &[R]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "row length mismatch");
            data.extend_from_slice(r);
        }
        Matrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u8) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[u8]> + '_ {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        self.row_iter().map(<[u8]>::to_vec).collect()
    }

    pub fn entries(&self) -> &[u8] {
        &self.data
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix, f: Fp) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.axpy(out.get(i, j), a, other.get(k, j));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// In-place reduction to reduced row echelon form. Returns the pivot
    /// columns; zero rows are left at the bottom.
    pub fn rref_in_place(&mut self, f: Fp) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..self.cols {
            if prow == self.rows {
                break;
            }
            let Some(found) = (prow..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            self.swap_rows(prow, found);
            let inv = f.inv(self.get(prow, col));
            if inv != 1 {
                for c in col..self.cols {
                    let v = f.mul(self.get(prow, c), inv);
                    self.set(prow, c, v);
                }
            }
            for r in 0..self.rows {
                if r == prow {
                    continue;
                }
                let factor = self.get(r, col);
                if factor == 0 {
                    continue;
                }
                let neg = f.neg(factor);
                for c in col..self.cols {
                    let v = f.axpy(self.get(r, c), neg, self.get(prow, c));
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            prow += 1;
        }
        pivots
    }

    /// Drops every row past `n`.
    pub fn truncate_rows(&mut self, n: usize) {
        if n < self.rows {
            self.rows = n;
            self.data.truncate(n * self.cols);
        }
    }
}

/// Reduced row echelon form with zero rows removed, plus pivot columns.
pub fn rref(m: &Matrix, f: Fp) -> (Matrix, Vec<usize>) {
    let mut out = m.clone();
    let pivots = out.rref_in_place(f);
    out.truncate_rows(pivots.len());
    (out, pivots)
}

/// Rank of a matrix over `f`.
pub fn rank(m: &Matrix, f: Fp) -> usize {
    let mut out = m.clone();
    out.rref_in_place(f).len()
}

/// Solves `coeffs * rows = v` for linearly independent `rows`. Returns
/// `None` when `v` is outside their span.
pub fn solve_row_combination(rows: &[&[u8]], v: &[u8], f: Fp) -> Option<Vec<u8>> {
    let r = rows.len();
    let n = v.len();
    // Columns of the augmented system are the given rows followed by v.
    let mut aug = Matrix::zeros(n, r + 1);
    for (j, row) in rows.iter().enumerate() {
        for i in 0..n {
            aug.set(i, j, row[i]);
        }
    }
    for i in 0..n {
        aug.set(i, r, v[i]);
    }
    let pivots = aug.rref_in_place(f);
    if pivots.last() == Some(&r) {
        return None;
    }
    if pivots.len() != r {
        // Dependent generators; the caller asked for a unique solution.
        return None;
    }
    Some((0..r).map(|i| aug.get(i, r)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> Fp {
        Fp::new(p).unwrap()
    }

    #[test]
    fn rref_identity_gf2() {
        let m = Matrix::identity(3);
        let (r, piv) = rref(&m, gf(2));
        assert_eq!(r, m);
        assert_eq!(piv, vec![0, 1, 2]);
    }

    #[test]
    fn rref_repeated_row_gf2() {
        let m = Matrix::from_rows(2, &[[1, 1], [1, 1]]);
        let (r, piv) = rref(&m, gf(2));
        assert_eq!(r, Matrix::from_rows(2, &[[1, 1]]));
        assert_eq!(piv, vec![0]);
    }

    #[test]
    fn rref_zero() {
        let (r, piv) = rref(&Matrix::zeros(2, 2), gf(2));
        assert_eq!(r.rows(), 0);
        assert!(piv.is_empty());
    }

    #[test]
    fn rref_gf5_normalises_pivots() {
        let m = Matrix::from_rows(3, &[[2, 4, 1], [3, 2, 0]]);
        let (r, piv) = rref(&m, gf(5));
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(r.get(0, 0), 1);
        assert_eq!(r.get(1, 1), 1);
        assert_eq!(r.get(0, 1), 0);
        assert_eq!(r.get(1, 0), 0);
        assert_eq!(r, Matrix::from_rows(3, &[[1, 0, 1], [0, 1, 1]]));
    }

    #[test]
    fn solve_combination() {
        let f = gf(3);
        let a = [1u8, 0, 2];
        let b = [0u8, 1, 1];
        // 2a + b = (2, 1, 5 mod 3 = 2)
        let c = solve_row_combination(&[&a, &b], &[2, 1, 2], f).unwrap();
        assert_eq!(c, vec![2, 1]);
        assert!(solve_row_combination(&[&a, &b], &[0, 0, 1], f).is_none());
    }
}
