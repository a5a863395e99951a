//! Subspaces of ℚⁿ with a canonical reduced-row-echelon basis.
//!
//! Keeping every basis in rref with zero rows dropped makes equality of
//! subspaces plain structural equality, which the rest of the crate relies
//! on when comparing derived ideals, centers, and power chains.

use crate::matrix::Matrix;
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    /// Basis rows in rref, no zero rows.
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    /// The span of the given vectors inside ℚ^`ambient`.
    pub fn span(ambient: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        let m = Matrix::from_rows(ambient, vectors);
        Self::from_matrix_rows(&m)
    }

    /// Row space of a matrix.
    pub fn from_matrix_rows(m: &Matrix) -> Self {
        let (r, pivots) = m.rref();
        let rows = (0..pivots.len()).map(|i| r.row_vec(i)).collect();
        Subspace {
            ambient: m.cols(),
            basis: Matrix::from_rows(m.cols(), rows),
            pivots,
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn whole(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = &[Scalar]> {
        self.basis.iter_rows()
    }

    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the basis; returns the residual. The residual is
    /// zero exactly when `v` lies in the subspace.
    fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient);
        let mut w = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            if w[p].is_zero() {
                continue;
            }
            let factor = w[p].clone();
            for (j, b) in self.basis.row(row).iter().enumerate() {
                if !b.is_zero() {
                    w[j] -= &(&factor * b);
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_rows().all(|row| self.contains(row))
    }

    /// Coordinates of `v` in the rref basis, or `None` if `v` is outside.
    pub fn coordinates_of(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Sum of subspaces (span of the union of the bases).
    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        Subspace::from_matrix_rows(&self.basis.vstack(&other.basis))
    }

    /// Adds one vector to the span.
    pub fn with_vector(&self, v: &[Scalar]) -> Subspace {
        let extra = Matrix::from_rows(self.ambient, vec![v.to_vec()]);
        Subspace::from_matrix_rows(&self.basis.vstack(&extra))
    }

    /// Intersection, computed from the left kernel of the stacked bases:
    /// a relation `a·U + b·W = 0` exhibits `a·U = −b·W` in `U ∩ W`.
    pub fn intersection(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let stacked = self.basis.vstack(other.basis());
        let left_kernel = stacked.transpose().nullspace_basis();
        let vectors = (0..left_kernel.rows())
            .map(|i| {
                let coeffs = &left_kernel.row(i)[..self.dim()];
                self.basis.row_mul(coeffs)
            })
            .collect();
        Subspace::span(self.ambient, vectors)
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Subspace(dim {} of {}) {:?}",
            self.dim(),
            self.ambient,
            self.basis
        )
    }
}
