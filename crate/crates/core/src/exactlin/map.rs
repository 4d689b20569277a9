use super::matrix::{solve_row_combination, Matrix};
use super::{Subspace, Vector};
use crate::error::{Error, Result};

/// A linear map between two subspaces of a common ambient space, stored as
/// a `(dim target) x (dim domain)` matrix in the canonical bases.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearMap {
    domain: Subspace,
    target: Subspace,
    matrix: Matrix,
}

impl LinearMap {
    pub fn zero(domain: Subspace, target: Subspace) -> Self {
        let matrix = Matrix::zeros(target.dim(), domain.dim());
        LinearMap {
            domain,
            target,
            matrix,
        }
    }

    pub fn from_matrix(domain: Subspace, target: Subspace, matrix: Matrix) -> Result<Self> {
        if matrix.rows() != target.dim() || matrix.cols() != domain.dim() {
            return Err(Error::MapType(format!(
                "matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim(),
                domain.dim()
            )));
        }
        Ok(LinearMap {
            domain,
            target,
            matrix,
        })
    }

    /// Map sending the `i`-th canonical basis row of `domain` to `images[i]`.
    pub fn from_images(domain: Subspace, target: Subspace, images: &[Vector]) -> Result<Self> {
        if images.len() != domain.dim() {
            return Err(Error::MapType(format!(
                "{} images for a {}-dimensional domain",
                images.len(),
                domain.dim()
            )));
        }
        let mut matrix = Matrix::zeros(target.dim(), domain.dim());
        for (col, img) in images.iter().enumerate() {
            let coords = target
                .coordinates(img)
                .ok_or_else(|| Error::MapType("image outside target".into()))?;
            for (row, c) in coords.into_iter().enumerate() {
                matrix.set(row, col, c);
            }
        }
        Ok(LinearMap {
            domain,
            target,
            matrix,
        })
    }

    /// Map determined by its values on a basis `gens` of `domain`, which
    /// need not be the canonical one.
    pub fn from_pairs(
        domain: Subspace,
        target: Subspace,
        pairs: &[(Vector, Vector)],
    ) -> Result<Self> {
        let f = domain.field();
        let gens: Vec<&[u8]> = pairs.iter().map(|(g, _)| g.as_slice()).collect();
        if gens.len() != domain.dim() {
            return Err(Error::MapType("generator count differs from domain dimension".into()));
        }
        let n = domain.ambient_dim();
        let mut images = Vec::with_capacity(domain.dim());
        for row in domain.basis_rows() {
            let coeffs = solve_row_combination(&gens, row, f)
                .ok_or_else(|| Error::MapType("generators do not form a basis of the domain".into()))?;
            let mut img = vec![0u8; n];
            for (c, (_, image)) in coeffs.iter().zip(pairs) {
                for (o, &x) in img.iter_mut().zip(image) {
                    *o = f.axpy(*o, *c, x);
                }
            }
            images.push(img);
        }
        Self::from_images(domain, target, &images)
    }

    pub fn domain(&self) -> &Subspace {
        &self.domain
    }

    pub fn target(&self) -> &Subspace {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.entries().iter().all(|&x| x == 0)
    }

    /// Image of the `i`-th canonical basis vector of the domain.
    pub fn image_of_basis(&self, i: usize) -> Vector {
        let coeffs: Vec<u8> = (0..self.target.dim()).map(|r| self.matrix.get(r, i)).collect();
        self.target.combine(&coeffs)
    }

    pub fn apply(&self, v: &[u8]) -> Result<Vector> {
        let coords = self
            .domain
            .coordinates(v)
            .ok_or_else(|| Error::MapType("argument outside domain".into()))?;
        let t: Vec<u8> = (0..self.target.dim())
            .map(|r| {
                coords.iter().enumerate().fold(0u8, |acc, (c, &x)| {
                    self.domain.field().axpy(acc, x, self.matrix.get(r, c))
                })
            })
            .collect();
        Ok(self.target.combine(&t))
    }

    /// Every linear map `domain -> target` over the field, in lexicographic
    /// order of matrix entries.
    pub fn enumerate(domain: &Subspace, target: &Subspace) -> Vec<LinearMap> {
        let rows = target.dim();
        let cols = domain.dim();
        let cells = Subspace::full(rows * cols, domain.field());
        cells
            .vectors()
            .map(|entries| {
                let mut m = Matrix::zeros(rows, cols);
                for r in 0..rows {
                    for c in 0..cols {
                        m.set(r, c, entries[r * cols + c]);
                    }
                }
                LinearMap {
                    domain: domain.clone(),
                    target: target.clone(),
                    matrix: m,
                }
            })
            .collect()
    }
}

/// Graph `{v + Av : v ∈ domain}` of a map whose domain and target meet
/// only in zero.
pub fn graph(a: &LinearMap) -> Result<Subspace> {
    if !a.domain.intersect(&a.target)?.is_zero() {
        return Err(Error::NotDirect);
    }
    let f = a.domain.field();
    let rows: Vec<Vector> = a
        .domain
        .basis_rows()
        .enumerate()
        .map(|(i, d)| {
            let img = a.image_of_basis(i);
            d.iter().zip(&img).map(|(&x, &y)| f.add(x, y)).collect()
        })
        .collect();
    Ok(Subspace::span_unchecked(&rows, a.domain.ambient_dim(), f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Fp;

    #[test]
    fn graph_examples() {
        let f = Fp::new(2).unwrap();
        let d = Subspace::coordinate(2, f, [0]);
        let t = Subspace::coordinate(2, f, [1]);
        let zero = LinearMap::zero(d.clone(), t.clone());
        assert_eq!(graph(&zero).unwrap(), d);
        let a = LinearMap::from_images(d.clone(), t.clone(), &[vec![0, 1]]).unwrap();
        assert_eq!(graph(&a).unwrap(), Subspace::span(&[vec![1, 1]], 2, f).unwrap());
        let bad = LinearMap::zero(d.clone(), Subspace::full(2, f));
        assert_eq!(graph(&bad), Err(Error::NotDirect));
    }

    #[test]
    fn graph_meets_domain_trivially_for_injective_maps() {
        // Brute force: the graph of A meets the domain only where Av = 0.
        let f = Fp::new(3).unwrap();
        let d = Subspace::coordinate(4, f, [0, 1]);
        let t = Subspace::coordinate(4, f, [2, 3]);
        for a in LinearMap::enumerate(&d, &t) {
            let g = graph(&a).unwrap();
            assert_eq!(g.dim(), 2);
            let kernel: usize = d
                .vectors()
                .filter(|v| a.apply(v).unwrap().iter().all(|&x| x == 0))
                .count();
            let meet = g.intersect(&d).unwrap();
            assert_eq!(f.p().pow(meet.dim() as u32) as usize, kernel);
        }
    }

    #[test]
    fn from_pairs_matches_images() {
        let f = Fp::new(3).unwrap();
        let d = Subspace::coordinate(3, f, [0, 1]);
        let t = Subspace::coordinate(3, f, [2]);
        // gens (1,1,0) -> e3, (1,2,0) -> 0
        let a = LinearMap::from_pairs(
            d.clone(),
            t.clone(),
            &[(vec![1, 1, 0], vec![0, 0, 1]), (vec![1, 2, 0], vec![0, 0, 0])],
        )
        .unwrap();
        assert_eq!(a.apply(&[1, 1, 0]).unwrap(), vec![0, 0, 1]);
        assert_eq!(a.apply(&[1, 2, 0]).unwrap(), vec![0, 0, 0]);
        assert_eq!(LinearMap::enumerate(&d, &t).len(), 9);
    }
}
