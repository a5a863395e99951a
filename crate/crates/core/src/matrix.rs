//! Dense matrices over exact rationals: reduced row echelon form, rank,
//! and kernels.
//!
//! The algebras in scope have dimension well under a hundred, so a dense
//! representation with plain Gaussian elimination is adequate. Elimination
//! steps skip zero multipliers, which matters because the cocycle constraint
//! systems built elsewhere in the crate are extremely sparse.

use std::fmt;

use crate::scalar::Scalar;

/// A `rows × cols` matrix of [`Scalar`]s, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    /// Builds a matrix from rows. All rows must share a length; `cols` is
    /// required so the row count may be zero.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Scalar>>) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for row in rows {
            assert_eq!(row.len(), cols, "ragged row");
            data.extend(row);
        }
        Matrix {
            rows: n,
            cols,
            data,
        }
    }

    /// Convenience constructor from integer literals, mostly for tests.
    pub fn from_ints(rows: Vec<Vec<i64>>) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            cols,
            rows.into_iter()
                .map(|r| r.into_iter().map(Scalar::from_int).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<Scalar> {
        self.row(i).to_vec()
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Stacks `other` below `self`. Column counts must match.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in mul");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).clone();
                    out.set(i, j, cur + a * b);
                }
            }
        }
        out
    }

    /// Row-vector times matrix: `v · self`, where `v.len() == rows`.
    pub fn row_mul(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.rows, "length mismatch in row_mul");
        let mut out = vec![Scalar::zero(); self.cols];
        for (i, coeff) in v.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                let b = self.get(i, j);
                if !b.is_zero() {
                    out[j] += &(coeff * b);
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, i: usize, factor: &Scalar) {
        for j in 0..self.cols {
            if !self.get(i, j).is_zero() {
                let v = self.get(i, j) * factor;
                self.set(i, j, v);
            }
        }
    }

    /// `row[dst] -= factor * row[src]`.
    fn eliminate(&mut self, dst: usize, src: usize, factor: &Scalar) {
        for j in 0..self.cols {
            let s = self.get(src, j);
            if s.is_zero() {
                continue;
            }
            let v = self.get(dst, j) - &(factor * s);
            self.set(dst, j, v);
        }
    }

    /// Reduced row echelon form together with the pivot columns.
    /// The row space is preserved; pivots carry coefficient 1 and are the
    /// only nonzero entries in their columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).recip();
            m.scale_row(r, &inv);
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let factor = m.get(i, c).clone();
                    m.eliminate(i, r, &factor);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of the right kernel `{v : self · vᵀ = 0}`, one vector per row.
    /// Row count is `cols − rank`.
    pub fn nullspace_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![Scalar::zero(); self.cols];
            v[f] = Scalar::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, f);
            }
            rows.push(v);
        }
        Matrix::from_rows(self.cols, rows)
    }

    /// Inverse of a square matrix, or `None` if singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Scalar::one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(inv)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|s| s.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// True when `m · vᵀ = 0`.
pub fn annihilates(m: &Matrix, v: &[Scalar]) -> bool {
    assert_eq!(m.cols(), v.len());
    (0..m.rows()).all(|i| {
        m.row(i)
            .iter()
            .zip(v)
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
            .is_zero()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_identity_is_fixed() {
        let id = Matrix::identity(2);
        let (r, pivots) = id.rref();
        assert_eq!(r, id);
        assert_eq!(pivots, vec![0, 1]);
    }

    #[test]
    fn rref_rank_one() {
        let m = Matrix::from_ints(vec![vec![1, 2], vec![2, 4]]);
        let (r, pivots) = m.rref();
        assert_eq!(r, Matrix::from_ints(vec![vec![1, 2], vec![0, 0]]));
        assert_eq!(pivots, vec![0]);
    }

    #[test]
    fn rank_basics() {
        assert_eq!(Matrix::zeros(3, 4).rank(), 0);
        for n in 1..=5 {
            assert_eq!(Matrix::identity(n).rank(), n);
        }
        let m = Matrix::from_ints(vec![vec![1, 2, 3], vec![0, 1, 1]]);
        let stacked = m.vstack(&m);
        assert_eq!(stacked.rank(), m.rank());
    }

    #[test]
    fn nullspace_shapes() {
        assert_eq!(Matrix::identity(4).nullspace_basis().rows(), 0);
        let z = Matrix::zeros(3, 3).nullspace_basis();
        assert_eq!(z.rows(), 3);

        let m = Matrix::from_ints(vec![vec![1, 1, 0]]);
        let ns = m.nullspace_basis();
        assert_eq!(ns.rows(), 2);
        for i in 0..ns.rows() {
            assert!(annihilates(&m, ns.row(i)));
        }
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_ints(vec![vec![2, 1, 0], vec![0, 1, 3], vec![1, 0, 1]]);
        let inv = m.inverse().expect("invertible");
        assert_eq!(m.mul(&inv), Matrix::identity(3));
        assert_eq!(inv.mul(&m), Matrix::identity(3));

        let singular = Matrix::from_ints(vec![vec![1, 2], vec![2, 4]]);
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn empty_matrices() {
        let m = Matrix::zeros(0, 3);
        assert_eq!(m.rank(), 0);
        assert_eq!(m.nullspace_basis().rows(), 3);
        let (r, p) = m.rref();
        assert_eq!(r.rows(), 0);
        assert!(p.is_empty());
    }
}
