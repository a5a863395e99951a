//! The multiplier dimension and the invariant `t(A) = (dim A)² − dim M(A)`.
//!
//! For a nilpotent algebra `A` the multiplier `M(A)` — the kernel of a
//! maximal stem extension — is isomorphic to the second cohomology group of
//! `A` with coefficients in the ground field. With the trivial bimodule
//! action that group is computed from bilinear forms:
//!
//! * 2-cocycles `Z²`: bilinear `f : A × A → ℚ` with `f(ab, c) = f(a, bc)`;
//! * 2-coboundaries `B²`: forms `(a, b) ↦ g(ab)` for linear `g : A → ℚ`.
//!
//! Then `dim M(A) = dim Z² − dim B²`, and `dim B² = dim A′` exactly, since
//! `g ↦ g∘μ` kills precisely the functionals vanishing on `A′`.
//!
//! A bilinear form is an `n × n` coefficient grid, flattened row-major to a
//! vector of length `n²`; the cocycle identity on basis triples becomes one
//! homogeneous linear constraint per triple `(i, j, k)`.

use crate::algebra::Algebra;
use crate::matrix::Matrix;
use crate::scalar::Scalar;

#[derive(Debug, Clone, thiserror::Error)]
pub enum MultiplierError {
    #[error("algebra is not nilpotent; the defining-pair theory here requires nilpotency")]
    NotNilpotent,
}

/// The space of 2-cocycles of an algebra, presented by its constraint system.
#[derive(Clone)]
pub struct CocycleSpace {
    /// Dimension of the space of all bilinear forms, `n²`.
    pub ambient_dim: usize,
    /// One row per basis triple `(i, j, k)` with a nontrivial constraint
    /// `f(eᵢeⱼ, eₖ) − f(eᵢ, eⱼeₖ) = 0`, over the flattened form coefficients.
    pub constraint_matrix: Matrix,
    /// `dim Z² = n² − rank(constraint_matrix)`.
    pub dim_z2: usize,
}

impl CocycleSpace {
    pub fn of(a: &Algebra) -> CocycleSpace {
        let n = a.dim();
        let ambient = n * n;
        let mut rows = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let left = a.product_of_basis(i, j);
                let left_zero = left.iter().all(Scalar::is_zero);
                for k in 0..n {
                    let right = a.product_of_basis(j, k);
                    if left_zero && right.iter().all(Scalar::is_zero) {
                        continue;
                    }
                    let mut row = vec![Scalar::zero(); ambient];
                    for (p, c) in left.iter().enumerate() {
                        if !c.is_zero() {
                            row[p * n + k] += c;
                        }
                    }
                    for (p, c) in right.iter().enumerate() {
                        if !c.is_zero() {
                            row[i * n + p] -= c;
                        }
                    }
                    if row.iter().any(|c| !c.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
        let constraint_matrix = Matrix::from_rows(ambient, rows);
        let dim_z2 = ambient - constraint_matrix.rank();
        CocycleSpace {
            ambient_dim: ambient,
            constraint_matrix,
            dim_z2,
        }
    }
}

/// The coboundary generators as rows: row `k` is the flattened form
/// `(i, j) ↦ c[i][j][k]`, the image of the basis functional `eₖ*` under
/// `g ↦ g∘μ`. Its row space is `B²`; its rank equals `dim A′`.
pub fn coboundary_matrix(a: &Algebra) -> Matrix {
    let n = a.dim();
    let mut rows = Vec::with_capacity(n);
    for k in 0..n {
        let mut row = vec![Scalar::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                row[i * n + j] = a.sc(i, j, k).clone();
            }
        }
        rows.push(row);
    }
    Matrix::from_rows(n * n, rows)
}

/// `dim M(A) = dim Z² − dim B²` for a nilpotent algebra.
pub fn multiplier_dim(a: &Algebra) -> Result<usize, MultiplierError> {
    if !a.is_nilpotent() {
        return Err(MultiplierError::NotNilpotent);
    }
    let z2 = CocycleSpace::of(a).dim_z2;
    let b2 = a.derived_ideal().dim();
    debug_assert!(b2 <= z2);
    Ok(z2 - b2)
}

/// The invariant `t(A) = n² − dim M(A)` together with its ingredients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct TValue {
    pub n: usize,
    pub dim_m: usize,
    pub t: usize,
}

pub fn t_value(a: &Algebra) -> Result<TValue, MultiplierError> {
    let n = a.dim();
    let dim_m = multiplier_dim(a)?;
    debug_assert!(dim_m <= n * n);
    Ok(TValue {
        n,
        dim_m,
        t: n * n - dim_m,
    })
}
