//! Finite-dimensional associative algebras given by structure constants.
//!
//! An algebra of dimension `n` is a basis `e₀, …, e_{n−1}` together with the
//! tensor `c[i][j][k]` defining `eᵢeⱼ = Σₖ c[i][j][k] eₖ`. Everything the
//! classification machinery needs — derived ideal, center, power chain,
//! quotients, direct and central sums, central splittings — is computed from
//! that tensor with exact rational linear algebra.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::subspace::Subspace;

#[derive(Debug, Clone, thiserror::Error)]
pub enum AlgebraError {
    #[error("associativity fails at basis triple ({i}, {j}, {k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,
    #[error("distinguished line must be a 1-dimensional central subspace")]
    NotCentral,
    #[error("distinguished line must lie in the derived ideal")]
    NotInDerived,
    #[error("subspace is not closed under multiplication")]
    NotClosed,
    #[error("bad multiplication table: {0}")]
    BadTable(String),
}

/// An associative algebra over ℚ, represented by its multiplication table.
///
/// Values built through [`Algebra::new`] (and every operation in this module)
/// satisfy the associativity identity; [`Algebra::new_unchecked`] skips the
/// check so that deliberately broken tables can still be probed with
/// [`Algebra::check_associativity`].
#[derive(Clone, PartialEq, Eq)]
pub struct Algebra {
    names: Vec<String>,
    /// Structure constants, row-major: `sc[(i * n + j) * n + k]`.
    sc: Vec<Scalar>,
}

impl Algebra {
    /// Builds an algebra from its nonzero products and verifies associativity.
    pub fn new(
        names: Vec<String>,
        products: Vec<(usize, usize, usize, Scalar)>,
    ) -> Result<Self, AlgebraError> {
        let a = Self::new_unchecked(names, products)?;
        match a.associativity_failure() {
            None => Ok(a),
            Some((i, j, k)) => Err(AlgebraError::NotAssociative { i, j, k }),
        }
    }

    /// Builds an algebra without verifying associativity.
    pub fn new_unchecked(
        names: Vec<String>,
        products: Vec<(usize, usize, usize, Scalar)>,
    ) -> Result<Self, AlgebraError> {
        let n = names.len();
        let mut sc = vec![Scalar::zero(); n * n * n];
        for (i, j, k, c) in products {
            if i >= n || j >= n || k >= n {
                return Err(AlgebraError::BadTable(format!(
                    "product index ({i}, {j}, {k}) out of range for dimension {n}"
                )));
            }
            let slot = &mut sc[(i * n + j) * n + k];
            if !slot.is_zero() {
                return Err(AlgebraError::BadTable(format!(
                    "duplicate coefficient for ({i}, {j}, {k})"
                )));
            }
            *slot = c;
        }
        Ok(Algebra { names, sc })
    }

    /// The abelian algebra of dimension `n` (all products zero).
    pub fn abelian(n: usize) -> Self {
        let names = (1..=n).map(|i| format!("a{i}")).collect();
        Algebra {
            names,
            sc: vec![Scalar::zero(); n * n * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.names
    }

    /// Structure constant `c[i][j][k]`.
    pub fn sc(&self, i: usize, j: usize, k: usize) -> &Scalar {
        let n = self.dim();
        &self.sc[(i * n + j) * n + k]
    }

    /// The coefficient vector of `eᵢeⱼ`.
    pub fn product_of_basis(&self, i: usize, j: usize) -> &[Scalar] {
        let n = self.dim();
        &self.sc[(i * n + j) * n..(i * n + j + 1) * n]
    }

    /// `eᵢ · v` for a coefficient vector `v`.
    pub fn basis_times_vec(&self, i: usize, v: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![Scalar::zero(); n];
        for (j, coeff) in v.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for (k, c) in self.product_of_basis(i, j).iter().enumerate() {
                if !c.is_zero() {
                    out[k] += &(coeff * c);
                }
            }
        }
        out
    }

    /// `v · eⱼ` for a coefficient vector `v`.
    pub fn vec_times_basis(&self, v: &[Scalar], j: usize) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![Scalar::zero(); n];
        for (i, coeff) in v.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for (k, c) in self.product_of_basis(i, j).iter().enumerate() {
                if !c.is_zero() {
                    out[k] += &(coeff * c);
                }
            }
        }
        out
    }

    /// Product of two elements given by coefficient vectors.
    pub fn mul_vectors(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![Scalar::zero(); n];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.product_of_basis(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &(&ab * c);
                    }
                }
            }
        }
        out
    }

    /// First basis triple violating `(eᵢeⱼ)eₖ = eᵢ(eⱼeₖ)`, if any.
    pub fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ij = self.product_of_basis(i, j);
                for k in 0..n {
                    let lhs = self.vec_times_basis(ij, k);
                    let rhs = self.basis_times_vec(i, self.product_of_basis(j, k));
                    if lhs != rhs {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// True iff the associativity identity holds on all basis triples.
    pub fn check_associativity(&self) -> bool {
        self.associativity_failure().is_none()
    }

    /// The derived ideal `A′ = AA`, the span of all products.
    pub fn derived_ideal(&self) -> Subspace {
        let n = self.dim();
        let mut rows = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let p = self.product_of_basis(i, j);
                if p.iter().any(|c| !c.is_zero()) {
                    rows.push(p.to_vec());
                }
            }
        }
        Subspace::span(n, rows)
    }

    /// The center in the Lie sense: the two-sided annihilator
    /// `{z : za = az = 0 for all a}`.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        // One row per (j, k): Σᵢ zᵢ c[i][j][k] = 0 (z·eⱼ) and Σᵢ zᵢ c[j][i][k] = 0 (eⱼ·z).
        let mut rows = Vec::with_capacity(2 * n * n);
        for j in 0..n {
            for k in 0..n {
                let left: Vec<Scalar> = (0..n).map(|i| self.sc(i, j, k).clone()).collect();
                if left.iter().any(|c| !c.is_zero()) {
                    rows.push(left);
                }
                let right: Vec<Scalar> = (0..n).map(|i| self.sc(j, i, k).clone()).collect();
                if right.iter().any(|c| !c.is_zero()) {
                    rows.push(right);
                }
            }
        }
        let constraints = Matrix::from_rows(n, rows);
        Subspace::from_matrix_rows(&constraints.nullspace_basis())
    }

    pub fn is_abelian(&self) -> bool {
        self.sc.iter().all(Scalar::is_zero)
    }

    /// `Z(A) = A′` with both 1-dimensional.
    pub fn is_extra_special(&self) -> bool {
        let d = self.derived_ideal();
        d.dim() == 1 && d == self.center()
    }

    /// The chain `A ⊇ A² ⊇ A³ ⊇ …` where `A^{m+1} = span(A·A^m ∪ A^m·A)`,
    /// followed until it hits zero or stabilizes.
    pub fn power_chain(&self) -> PowerChain {
        let n = self.dim();
        let mut terms = vec![Subspace::whole(n)];
        loop {
            let last = terms.last().unwrap();
            if last.is_zero() {
                break;
            }
            let mut rows = Vec::new();
            for w in last.basis_rows() {
                for i in 0..n {
                    rows.push(self.basis_times_vec(i, w));
                    rows.push(self.vec_times_basis(w, i));
                }
            }
            let next = Subspace::span(n, rows);
            debug_assert!(last.contains_subspace(&next));
            if &next == last {
                break;
            }
            terms.push(next);
        }
        PowerChain { terms }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.power_chain().is_nilpotent()
    }

    fn is_two_sided_ideal(&self, s: &Subspace) -> bool {
        let n = self.dim();
        s.basis_rows().all(|v| {
            (0..n).all(|i| {
                s.contains(&self.basis_times_vec(i, v)) && s.contains(&self.vec_times_basis(v, i))
            })
        })
    }

    /// Coordinate columns that extend the subspace basis to a basis of the
    /// whole space (the non-pivot columns of its rref basis).
    fn complement_coordinates(s: &Subspace) -> Vec<usize> {
        (0..s.ambient_dim())
            .filter(|c| !s.pivot_columns().contains(c))
            .collect()
    }

    /// The quotient algebra `A / I` for a two-sided ideal `I`, on the basis of
    /// coordinate vectors complementing `I`.
    pub fn quotient(&self, ideal: &Subspace) -> Result<Algebra, AlgebraError> {
        let n = self.dim();
        assert_eq!(ideal.ambient_dim(), n, "ideal in wrong ambient space");
        if !self.is_two_sided_ideal(ideal) {
            return Err(AlgebraError::NotAnIdeal);
        }
        if ideal.is_zero() {
            return Ok(self.clone());
        }
        let d = ideal.dim();
        let coords = Self::complement_coordinates(ideal);
        let q = coords.len();

        // Basis of A: ideal rows first, then the complement coordinates.
        let mut rows: Vec<Vec<Scalar>> = ideal.basis_rows().map(|r| r.to_vec()).collect();
        for &c in &coords {
            let mut e = vec![Scalar::zero(); n];
            e[c] = Scalar::one();
            rows.push(e);
        }
        let basis = Matrix::from_rows(n, rows);
        let inv = basis
            .inverse()
            .expect("ideal basis plus complement coordinates is a basis");

        let mut products = Vec::new();
        for (r, &cr) in coords.iter().enumerate() {
            for (s, &cs) in coords.iter().enumerate() {
                let v = self.product_of_basis(cr, cs);
                let x = inv.row_mul(v); // x · basis = v
                for (t, coeff) in x[d..].iter().enumerate() {
                    if !coeff.is_zero() {
                        products.push((r, s, t, coeff.clone()));
                    }
                }
            }
        }
        let names = coords.iter().map(|&c| self.names[c].clone()).collect();
        let out = Algebra::new_unchecked(names, products)?;
        debug_assert_eq!(out.dim(), q);
        match out.associativity_failure() {
            None => Ok(out),
            Some((i, j, k)) => Err(AlgebraError::NotAssociative { i, j, k }),
        }
    }

    /// Block-diagonal sum: no cross products between the summands.
    pub fn direct_sum(&self, other: &Algebra) -> Algebra {
        let n1 = self.dim();
        let n2 = other.dim();
        let n = n1 + n2;
        let mut names = self.names.clone();
        for name in &other.names {
            let mut candidate = name.clone();
            while names.contains(&candidate) {
                candidate.push('\'');
            }
            names.push(candidate);
        }
        let mut products = Vec::new();
        for i in 0..n1 {
            for j in 0..n1 {
                for (k, c) in self.product_of_basis(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        products.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        for i in 0..n2 {
            for j in 0..n2 {
                for (k, c) in other.product_of_basis(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        products.push((n1 + i, n1 + j, n1 + k, c.clone()));
                    }
                }
            }
        }
        let out = Algebra::new_unchecked(names, products).expect("indices in range");
        debug_assert_eq!(out.dim(), n);
        debug_assert!(out.check_associativity());
        out
    }

    /// Central sum `A ∗ B`: the direct sum with the chosen central line of `A`
    /// identified with the chosen central line of `B`. Both lines must be
    /// 1-dimensional, central, and contained in the respective derived ideal.
    pub fn central_sum(
        &self,
        other: &Algebra,
        za: &Subspace,
        zb: &Subspace,
    ) -> Result<Algebra, AlgebraError> {
        for (alg, line) in [(self, za), (other, zb)] {
            if line.dim() != 1 || !alg.center().contains_subspace(line) {
                return Err(AlgebraError::NotCentral);
            }
            if !alg.derived_ideal().contains_subspace(line) {
                return Err(AlgebraError::NotInDerived);
            }
        }
        let sum = self.direct_sum(other);
        let n1 = self.dim();
        let n = sum.dim();
        // Glue: quotient by the line spanned by (va, −vb).
        let mut glue = vec![Scalar::zero(); n];
        for (j, c) in za.basis().row(0).iter().enumerate() {
            glue[j] = c.clone();
        }
        for (j, c) in zb.basis().row(0).iter().enumerate() {
            glue[n1 + j] = -c;
        }
        let out = sum.quotient(&Subspace::span(n, vec![glue]))?;
        debug_assert_eq!(out.dim(), self.dim() + other.dim() - 1);
        Ok(out)
    }

    /// When `Z(A) ⊄ A′`, splits off a 1-dimensional central line: returns
    /// `(I, Z)` with `A = I ⊕ Z`, `Z` central, `Z ∩ A′ = 0`, and `I ⊇ A′` a
    /// two-sided ideal. Returns `None` when `Z(A) ⊆ A′`.
    ///
    /// The complement is built deterministically: the derived ideal first,
    /// then the rest of the center, then coordinate vectors.
    pub fn split_central_complement(&self) -> Option<(Subspace, Subspace)> {
        let n = self.dim();
        let center = self.center();
        let derived = self.derived_ideal();
        let v = center
            .basis_rows()
            .find(|row| !derived.contains(row))?
            .to_vec();
        let line = Subspace::span(n, vec![v.clone()]);

        let mut avoid = line.clone();
        let mut ideal_rows: Vec<Vec<Scalar>> = Vec::new();
        let mut candidates: Vec<Vec<Scalar>> = derived.basis_rows().map(|r| r.to_vec()).collect();
        candidates.extend(center.basis_rows().map(|r| r.to_vec()));
        for c in 0..n {
            let mut e = vec![Scalar::zero(); n];
            e[c] = Scalar::one();
            candidates.push(e);
        }
        for w in candidates {
            if !avoid.contains(&w) {
                avoid = avoid.with_vector(&w);
                ideal_rows.push(w);
            }
        }
        let ideal = Subspace::span(n, ideal_rows);
        debug_assert_eq!(ideal.dim(), n - 1);
        debug_assert!(ideal.contains_subspace(&derived));
        debug_assert!(!ideal.contains_subspace(&line));
        Some((ideal, line))
    }

    /// The algebra structure induced on a multiplication-closed subspace,
    /// e.g. an ideal. Errors with `NotClosed` if products leave the subspace.
    pub fn induced_on(&self, sub: &Subspace) -> Result<Algebra, AlgebraError> {
        let rows: Vec<Vec<Scalar>> = sub.basis_rows().map(|r| r.to_vec()).collect();
        let mut products = Vec::new();
        for (r, u) in rows.iter().enumerate() {
            for (s, w) in rows.iter().enumerate() {
                let p = self.mul_vectors(u, w);
                let coords = sub.coordinates_of(&p).ok_or(AlgebraError::NotClosed)?;
                for (t, c) in coords.into_iter().enumerate() {
                    if !c.is_zero() {
                        products.push((r, s, t, c));
                    }
                }
            }
        }
        let names = sub
            .pivot_columns()
            .iter()
            .map(|&p| self.names[p].clone())
            .collect();
        let out = Algebra::new_unchecked(names, products)?;
        debug_assert!(out.check_associativity());
        Ok(out)
    }

    /// Same dimension and identical structure constants (basis names ignored).
    pub fn same_table(&self, other: &Algebra) -> bool {
        self.dim() == other.dim() && self.sc == other.sc
    }

    /// The algebra on the permuted basis `e'_i = e_{perm[i]}`.
    pub fn permute_basis(&self, perm: &[usize]) -> Algebra {
        let n = self.dim();
        assert_eq!(perm.len(), n);
        let names = perm.iter().map(|&p| self.names[p].clone()).collect();
        let mut inverse = vec![0; n];
        for (i, &p) in perm.iter().enumerate() {
            inverse[p] = i;
        }
        let mut products = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.product_of_basis(perm[i], perm[j]).iter().enumerate() {
                    if !c.is_zero() {
                        products.push((i, j, inverse[k], c.clone()));
                    }
                }
            }
        }
        Algebra::new_unchecked(names, products).expect("permutation preserves range")
    }

    /// Nonzero products as `(i, j, coefficient-vector)` triples.
    pub fn nonzero_products(&self) -> Vec<(usize, usize, Vec<Scalar>)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let p = self.product_of_basis(i, j);
                if p.iter().any(|c| !c.is_zero()) {
                    out.push((i, j, p.to_vec()));
                }
            }
        }
        out
    }
}

/// Formats `Σ coeffs[k] · names[k]` the way multiplication tables are printed.
pub(crate) fn linear_combination(coeffs: &[Scalar], names: &[String]) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = if c.is_one() {
            names[k].clone()
        } else if (-c).is_one() {
            format!("-{}", names[k])
        } else {
            format!("{}*{}", c, names[k])
        };
        if out.is_empty() {
            out = term;
        } else if term.starts_with('-') {
            out.push_str(" - ");
            out.push_str(&term[1..]);
        } else {
            out.push_str(" + ");
            out.push_str(&term);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dim {}; basis {}", self.dim(), self.names.join(", "))?;
        let products = self.nonzero_products();
        if products.is_empty() {
            writeln!(f, "  (all products zero)")?;
        }
        for (i, j, p) in products {
            writeln!(
                f,
                "  {}*{} = {}",
                self.names[i],
                self.names[j],
                linear_combination(&p, &self.names)
            )?;
        }
        Ok(())
    }
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The descending chain `A ⊇ A² ⊇ …`; the last term is zero exactly when the
/// algebra is nilpotent, otherwise the chain stabilized at a nonzero ideal.
#[derive(Clone, Debug)]
pub struct PowerChain {
    terms: Vec<Subspace>,
}

impl PowerChain {
    pub fn terms(&self) -> &[Subspace] {
        &self.terms
    }

    pub fn is_nilpotent(&self) -> bool {
        self.terms.last().map(Subspace::is_zero).unwrap_or(true)
    }

    /// Number of nonzero terms in the chain.
    pub fn nonzero_length(&self) -> usize {
        self.terms.iter().filter(|t| !t.is_zero()).count()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }
}

// ---------------------------------------------------------------------------
// JSON multiplication-table format
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct AlgebraFile {
    dim: usize,
    basis: Vec<String>,
    products: Vec<ProductTerm>,
}

#[derive(Serialize, Deserialize)]
struct ProductTerm {
    i: usize,
    j: usize,
    k: usize,
    c: Scalar,
}

impl Algebra {
    /// Serializes to the structure-constant JSON format:
    /// `{"dim": n, "basis": [...], "products": [{"i":…,"j":…,"k":…,"c":"p/q"}]}`.
    /// Absent triples mean coefficient zero.
    pub fn to_json_value(&self) -> serde_json::Value {
        let n = self.dim();
        let mut products = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.product_of_basis(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        products.push(ProductTerm {
                            i,
                            j,
                            k,
                            c: c.clone(),
                        });
                    }
                }
            }
        }
        serde_json::to_value(AlgebraFile {
            dim: n,
            basis: self.names.clone(),
            products,
        })
        .expect("table serializes")
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("table serializes")
    }

    /// Parses the JSON table format and verifies associativity.
    pub fn from_json_str(s: &str) -> Result<Algebra, AlgebraError> {
        let file: AlgebraFile =
            serde_json::from_str(s).map_err(|e| AlgebraError::BadTable(e.to_string()))?;
        if file.basis.len() != file.dim {
            return Err(AlgebraError::BadTable(format!(
                "dim is {} but {} basis names given",
                file.dim,
                file.basis.len()
            )));
        }
        let products = file
            .products
            .into_iter()
            .map(|t| (t.i, t.j, t.k, t.c))
            .collect();
        Algebra::new(file.basis, products)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    /// ⟨x, z : xx = z⟩
    fn j1() -> Algebra {
        Algebra::new(names(&["x", "z"]), vec![(0, 0, 1, s(1))]).unwrap()
    }

    /// ⟨x₁, x₂, z : x₁x₂ = z⟩
    fn j2() -> Algebra {
        Algebra::new(names(&["x1", "x2", "z"]), vec![(0, 1, 2, s(1))]).unwrap()
    }

    /// ⟨x, z, z′ : xx = z, xz = zx = z′⟩
    fn c3() -> Algebra {
        Algebra::new(
            names(&["x", "z", "z'"]),
            vec![(0, 0, 1, s(1)), (0, 1, 2, s(1)), (1, 0, 2, s(1))],
        )
        .unwrap()
    }

    fn basis_vec(n: usize, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); n];
        v[i] = Scalar::one();
        v
    }

    #[test]
    fn associativity_accepts_and_rejects() {
        assert!(Algebra::abelian(3).check_associativity());
        assert!(j1().check_associativity());
        assert!(c3().check_associativity());

        // J₁ with zz = x appended: (xx)z = zz = x but x(xz) = 0.
        let broken = Algebra::new_unchecked(
            names(&["x", "z"]),
            vec![(0, 0, 1, s(1)), (1, 1, 0, s(1))],
        )
        .unwrap();
        assert!(!broken.check_associativity());
        assert!(matches!(
            Algebra::new(names(&["x", "z"]), vec![(0, 0, 1, s(1)), (1, 1, 0, s(1))]),
            Err(AlgebraError::NotAssociative { .. })
        ));
    }

    #[test]
    fn derived_ideal_examples() {
        assert!(Algebra::abelian(4).derived_ideal().is_zero());

        let d = j1().derived_ideal();
        assert_eq!(d.dim(), 1);
        assert!(d.contains(&basis_vec(2, 1)));

        let d = c3().derived_ideal();
        assert_eq!(d.dim(), 2);
        assert!(d.contains(&basis_vec(3, 1)));
        assert!(d.contains(&basis_vec(3, 2)));
    }

    /// Independent annihilator oracle: intersect, over all basis elements b,
    /// the kernels of z ↦ zb and z ↦ bz, one multiplication operator at a time.
    fn naive_center(a: &Algebra) -> Subspace {
        let n = a.dim();
        let mut acc = Subspace::whole(n);
        for j in 0..n {
            let right =
                Matrix::from_rows(n, (0..n).map(|i| a.product_of_basis(i, j).to_vec()).collect());
            acc = acc.intersection(&Subspace::from_matrix_rows(
                &right.transpose().nullspace_basis(),
            ));
            let left =
                Matrix::from_rows(n, (0..n).map(|i| a.product_of_basis(j, i).to_vec()).collect());
            acc = acc.intersection(&Subspace::from_matrix_rows(
                &left.transpose().nullspace_basis(),
            ));
        }
        acc
    }

    #[test]
    fn center_examples() {
        assert_eq!(Algebra::abelian(3).center(), Subspace::whole(3));

        let z = j2().center();
        assert_eq!(z.dim(), 1);
        assert!(z.contains(&basis_vec(3, 2)));

        let a = j1().direct_sum(&Algebra::abelian(1));
        let z = a.center();
        assert_eq!(z.dim(), 2);
        assert!(z.contains(&basis_vec(3, 1)));
        assert!(z.contains(&basis_vec(3, 2)));
        assert_eq!(z, naive_center(&a));
    }

    #[test]
    fn extra_special_predicate() {
        assert!(j1().is_extra_special());
        assert!(j2().is_extra_special());
        assert!(!c3().is_extra_special());
        assert!(!Algebra::abelian(2).is_extra_special());
    }

    #[test]
    fn power_chain_examples() {
        let chain = Algebra::abelian(3).power_chain();
        assert!(chain.is_nilpotent());
        assert_eq!(chain.nonzero_length(), 1);
        assert_eq!(chain.dims(), vec![3, 0]);

        let chain = c3().power_chain();
        assert!(chain.is_nilpotent());
        assert_eq!(chain.dims(), vec![3, 2, 1, 0]);

        let idem = Algebra::new(names(&["e"]), vec![(0, 0, 0, s(1))]).unwrap();
        assert!(!idem.is_nilpotent());
    }

    #[test]
    fn quotient_examples() {
        let q = j1()
            .quotient(&Subspace::span(2, vec![basis_vec(2, 1)]))
            .unwrap();
        assert!(q.same_table(&Algebra::abelian(1)));

        let q = c3()
            .quotient(&Subspace::span(3, vec![basis_vec(3, 2)]))
            .unwrap();
        assert!(q.same_table(&j1()));

        let a = c3();
        let q = a.quotient(&Subspace::zero(3)).unwrap();
        assert_eq!(q, a);

        // span{x} is not an ideal of J₁ since x·x = z falls outside.
        let bad = j1().quotient(&Subspace::span(2, vec![basis_vec(2, 0)]));
        assert!(matches!(bad, Err(AlgebraError::NotAnIdeal)));
    }

    #[test]
    fn direct_sum_examples() {
        let a = Algebra::abelian(1).direct_sum(&Algebra::abelian(2));
        assert!(a.same_table(&Algebra::abelian(3)));

        let a = j1().direct_sum(&Algebra::abelian(1));
        assert_eq!(a.dim(), 3);
        assert_eq!(a.sc(0, 0, 1), &s(1));
        assert!(a.check_associativity());

        // Blocks do not interact: A′ of the sum is the sum of the A′s.
        let b = j1().direct_sum(&j2());
        let d = b.derived_ideal();
        assert_eq!(d.dim(), 2);
        assert!(d.contains(&basis_vec(5, 1)));
        assert!(d.contains(&basis_vec(5, 4)));
    }

    #[test]
    fn direct_sum_renames_collisions() {
        let a = j1().direct_sum(&j1());
        let names: Vec<&str> = a.basis_names().iter().map(|s| s.as_str()).collect();
        assert_eq!(names, vec!["x", "z", "x'", "z'"]);
    }

    #[test]
    fn central_sum_j1_j1() {
        let a = j1();
        let b = j1();
        let za = Subspace::span(2, vec![basis_vec(2, 1)]);
        let sum = a.central_sum(&b, &za, &za).unwrap();
        assert_eq!(sum.dim(), 3);
        // The glued line eliminates z; the basis comes out as (x, x', z')
        // with xx = x'x' = z', i.e. ⟨x, y, z : xx = yy = z⟩ up to naming.
        assert_eq!(sum.sc(0, 0, 2), &s(1));
        assert_eq!(sum.sc(1, 1, 2), &s(1));
        assert!(sum.is_extra_special());
        assert!(sum.check_associativity());
    }

    #[test]
    fn central_sum_j1_j2_is_dim4_extra_special() {
        let a = j1();
        let b = j2();
        let za = Subspace::span(2, vec![basis_vec(2, 1)]);
        let zb = Subspace::span(3, vec![basis_vec(3, 2)]);
        let sum = a.central_sum(&b, &za, &zb).unwrap();
        assert_eq!(sum.dim(), 4);
        assert!(sum.is_extra_special());
        assert!(sum.is_nilpotent());
    }

    #[test]
    fn central_sum_rejects_bad_lines() {
        let a = j1();
        let x_line = Subspace::span(2, vec![basis_vec(2, 0)]);
        let z_line = Subspace::span(2, vec![basis_vec(2, 1)]);
        assert!(matches!(
            a.central_sum(&a.clone(), &x_line, &z_line),
            Err(AlgebraError::NotCentral)
        ));

        // The whole center of J₁ ⊕ A(1) is central but not inside A′.
        let b = j1().direct_sum(&Algebra::abelian(1));
        let a_line = Subspace::span(3, vec![basis_vec(3, 2)]);
        let zb = Subspace::span(3, vec![basis_vec(3, 1)]);
        assert!(matches!(
            b.central_sum(&b.clone(), &a_line, &zb),
            Err(AlgebraError::NotInDerived)
        ));
    }

    #[test]
    fn split_central_complement_examples() {
        let a = j1().direct_sum(&Algebra::abelian(1));
        let (ideal, line) = a.split_central_complement().unwrap();
        assert_eq!(line.dim(), 1);
        assert!(line.contains(&basis_vec(3, 2)));
        let i_alg = a.induced_on(&ideal).unwrap();
        assert!(i_alg.same_table(&j1()));

        // Extra special: Z(A) = A′, nothing to split.
        assert!(j2().split_central_complement().is_none());

        // Abelian: any line splits.
        let a2 = Algebra::abelian(2);
        let (ideal, line) = a2.split_central_complement().unwrap();
        assert_eq!(ideal.dim(), 1);
        assert_eq!(line.dim(), 1);
        assert!(ideal.intersection(&line).is_zero());
    }

    #[test]
    fn split_invariants() {
        for a in [
            j1().direct_sum(&Algebra::abelian(2)),
            j2().direct_sum(&Algebra::abelian(1)),
            Algebra::abelian(4),
        ] {
            let (ideal, line) = a.split_central_complement().unwrap();
            let n = a.dim();
            assert!(a.center().contains_subspace(&line));
            assert!(line.intersection(&a.derived_ideal()).is_zero());
            assert_eq!(ideal.dim() + line.dim(), n);
            assert_eq!(ideal.sum(&line), Subspace::whole(n));
            assert!(ideal.contains_subspace(&a.derived_ideal()));
        }
    }

    #[test]
    fn quotient_by_derived_is_abelian() {
        for a in [j1(), j2(), c3(), j1().direct_sum(&j2())] {
            let q = a.quotient(&a.derived_ideal()).unwrap();
            assert!(q.is_abelian());
        }
    }

    #[test]
    fn permute_basis_preserves_structure() {
        let a = c3();
        let p = a.permute_basis(&[2, 0, 1]);
        assert!(p.check_associativity());
        assert_eq!(p.derived_ideal().dim(), a.derived_ideal().dim());
        assert_eq!(p.center().dim(), a.center().dim());
        assert_eq!(p.basis_names()[1], "x");
    }

    #[test]
    fn json_round_trip() {
        let a = c3();
        let text = a.to_json_string();
        let back = Algebra::from_json_str(&text).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn json_rejects_bad_tables() {
        // Non-associative table.
        let bad = r#"{"dim":2,"basis":["x","z"],"products":[
            {"i":0,"j":0,"k":1,"c":"1"},{"i":1,"j":1,"k":0,"c":"1"}]}"#;
        assert!(matches!(
            Algebra::from_json_str(bad),
            Err(AlgebraError::NotAssociative { .. })
        ));

        let out_of_range = r#"{"dim":1,"basis":["x"],"products":[{"i":0,"j":0,"k":3,"c":"1"}]}"#;
        assert!(matches!(
            Algebra::from_json_str(out_of_range),
            Err(AlgebraError::BadTable(_))
        ));

        let mismatched = r#"{"dim":2,"basis":["x"],"products":[]}"#;
        assert!(matches!(
            Algebra::from_json_str(mismatched),
            Err(AlgebraError::BadTable(_))
        ));
    }
}
