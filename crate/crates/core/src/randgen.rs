//! Reproducible random nilpotent associative algebras.
//!
//! Random structure-constant tensors are almost never associative, so
//! sampling works the other way around: take the free nilpotent algebra on
//! `g` generators truncated at class `c` (basis: all words of length 1..c,
//! product: concatenation, long words vanish) and quotient by a random ideal
//! inside its span of length-≥2 words. Every output is associative and
//! nilpotent by construction, and identical specs give identical algebras.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::scalar::Scalar;
use crate::subspace::Subspace;

/// Cap on the dimension of generated free algebras.
pub const DEFAULT_SIZE_LIMIT: usize = 64;

/// Identifier of the PRNG backing [`random_quotient`], recorded in reports.
pub const PRNG_ALGORITHM: &str = "chacha8";

#[derive(Debug, Clone, thiserror::Error)]
pub enum RandGenError {
    #[error("free nilpotent algebra on {generators} generators of class {class} has dimension {dim}, over the cap {cap}")]
    SizeLimit {
        generators: usize,
        class: usize,
        dim: usize,
        cap: usize,
    },
}

/// Parameters for one random sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    /// Number of degree-1 generators, at least 1.
    pub generators: usize,
    /// Nilpotency class bound, at least 2.
    pub class: usize,
    /// Aim for this output dimension (the ideal may close over it, giving a
    /// smaller quotient). `None` picks the ideal dimension uniformly.
    pub target_dim: Option<usize>,
    pub seed: u64,
}

impl std::fmt::Display for GenSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "g={} c={} target={:?} seed={} prng={}",
            self.generators, self.class, self.target_dim, self.seed, PRNG_ALGORITHM
        )?;
        Ok(())
    }
}

fn word_name(letters: &[usize]) -> String {
    letters
        .iter()
        .map(|&l| char::from(b'a' + l as u8))
        .collect()
}

/// The free nilpotent algebra on `g` generators of class `c`: basis all
/// words of length 1..=c, product concatenation, words longer than `c` are
/// zero. Associative and nilpotent by construction.
pub fn free_nilpotent(g: usize, c: usize) -> Result<Algebra, RandGenError> {
    free_nilpotent_capped(g, c, DEFAULT_SIZE_LIMIT)
}

pub fn free_nilpotent_capped(g: usize, c: usize, cap: usize) -> Result<Algebra, RandGenError> {
    assert!(g >= 1, "need at least one generator");
    assert!(c >= 1, "need class at least 1");
    let mut dim = 0usize;
    let mut layer = 1usize;
    for _ in 1..=c {
        layer = layer.saturating_mul(g);
        dim = dim.saturating_add(layer);
        if dim > cap {
            return Err(RandGenError::SizeLimit {
                generators: g,
                class: c,
                dim,
                cap,
            });
        }
    }

    // Words ordered by (length, lexicographic); index arithmetic below
    // mirrors this ordering.
    let mut words: Vec<Vec<usize>> = Vec::with_capacity(dim);
    let mut frontier: Vec<Vec<usize>> = vec![vec![]];
    for _ in 1..=c {
        let mut next = Vec::new();
        for w in &frontier {
            for l in 0..g {
                let mut w2 = w.clone();
                w2.push(l);
                next.push(w2);
            }
        }
        words.extend(next.iter().cloned());
        frontier = next;
    }
    debug_assert_eq!(words.len(), dim);

    let mut position = std::collections::HashMap::new();
    for (i, w) in words.iter().enumerate() {
        position.insert(w.clone(), i);
    }

    let names = words.iter().map(|w| word_name(w)).collect();
    let mut products = Vec::new();
    for (i, wi) in words.iter().enumerate() {
        for (j, wj) in words.iter().enumerate() {
            if wi.len() + wj.len() > c {
                continue;
            }
            let mut cat = wi.clone();
            cat.extend_from_slice(wj);
            products.push((i, j, position[&cat], Scalar::one()));
        }
    }
    Ok(Algebra::new_unchecked(names, products).expect("indices in range"))
}

/// Quotient of the free nilpotent algebra by a random ideal inside its span
/// of length-≥2 words. Deterministic per spec.
pub fn random_quotient(spec: &GenSpec) -> Result<Algebra, RandGenError> {
    assert!(spec.generators >= 1, "need at least one generator");
    assert!(spec.class >= 2, "need class at least 2");
    let free = free_nilpotent(spec.generators, spec.class)?;
    let n = free.dim();
    let g = spec.generators;
    let deg2 = n - g; // words of length ≥ 2 sit after the g generators

    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let udim = match spec.target_dim {
        Some(t) => n.saturating_sub(t.max(g)).min(deg2),
        None => rng.gen_range(0..=deg2),
    };

    // Random spanning set with small integer entries, in the ≥2 coordinates.
    let mut rows = Vec::with_capacity(udim);
    for _ in 0..udim {
        let mut row = vec![Scalar::zero(); n];
        for slot in row.iter_mut().skip(g) {
            *slot = Scalar::from_int(rng.gen_range(-2..=2));
        }
        rows.push(row);
    }
    let mut ideal = Subspace::span(n, rows);

    // Close under multiplication by the degree-1 generators until stable.
    loop {
        let mut extra = Vec::new();
        for v in ideal.basis_rows() {
            for i in 0..g {
                let left = free.basis_times_vec(i, v);
                if !ideal.contains(&left) {
                    extra.push(left);
                }
                let right = free.vec_times_basis(v, i);
                if !ideal.contains(&right) {
                    extra.push(right);
                }
            }
        }
        if extra.is_empty() {
            break;
        }
        let mut rows: Vec<Vec<Scalar>> = ideal.basis_rows().map(|r| r.to_vec()).collect();
        rows.extend(extra);
        ideal = Subspace::span(n, rows);
    }

    Ok(free
        .quotient(&ideal)
        .expect("closed subspace is a two-sided ideal"))
}
