//! Property tests: exactness of the linear algebra against an independent
//! fraction-free oracle, and the structural invariants that must hold on
//! every randomly generated nilpotent algebra.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nilmult::algebra::Algebra;
use nilmult::cover::verify_cover_consistency;
use nilmult::matrix::{annihilates, Matrix};
use nilmult::multiplier::{coboundary_matrix, multiplier_dim, CocycleSpace};
use nilmult::randgen::{random_quotient, GenSpec};
use nilmult::scalar::Scalar;

// ---------------------------------------------------------------------------
// Fraction-free Bareiss elimination: an independent rank oracle over ℤ.
// ---------------------------------------------------------------------------

/// Rank by Bareiss elimination after clearing denominators row by row.
/// Shares no code with `Matrix::rref`: integer arithmetic, exact divisions.
fn bareiss_rank(m: &Matrix) -> usize {
    let rows = m.rows();
    let cols = m.cols();
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| {
            let lcm = m
                .row(i)
                .iter()
                .fold(BigInt::one(), |acc, s| acc.lcm(s.denom()));
            m.row(i)
                .iter()
                .map(|s| s.numer() * (&lcm / s.denom()))
                .collect()
        })
        .collect();

    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division not exact");
                a[i][j] = num / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

fn small_scalar() -> impl Strategy<Value = Scalar> {
    (-9i64..=9, 1i64..=9).prop_map(|(p, q)| Scalar::new(p, q))
}

fn small_matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| {
        proptest::collection::vec(small_scalar(), r * c).prop_map(move |entries| {
            let rows = entries.chunks(c).map(|ch| ch.to_vec()).collect();
            Matrix::from_rows(c, rows)
        })
    })
}

proptest! {
    #[test]
    fn rank_nullity_is_exact(m in small_matrix()) {
        let kernel = m.nullspace_basis();
        prop_assert_eq!(m.rank() + kernel.rows(), m.cols());
        for i in 0..kernel.rows() {
            prop_assert!(annihilates(&m, kernel.row(i)));
        }
    }

    #[test]
    fn rref_is_idempotent(m in small_matrix()) {
        let (r1, p1) = m.rref();
        let (r2, p2) = r1.rref();
        prop_assert_eq!(r1, r2);
        prop_assert_eq!(p1, p2);
    }

    #[test]
    fn rank_matches_bareiss(m in small_matrix()) {
        prop_assert_eq!(m.rank(), bareiss_rank(&m));
    }

    #[test]
    fn rank_is_transpose_invariant(m in small_matrix()) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn scalars_stay_reduced(a in small_scalar(), b in small_scalar()) {
        for v in [&a + &b, &a - &b, &a * &b] {
            prop_assert!(v.numer().gcd(v.denom()).is_one() || v.is_zero());
            prop_assert!(v.denom().is_positive());
        }
        let shown: Scalar = a.to_string().parse().unwrap();
        prop_assert_eq!(shown, a);
    }
}

/// The elimination-agreement sweep: 1000 seeded random 5×5 rational
/// matrices, rref rank vs the Bareiss oracle.
#[test]
fn thousand_random_matrices_agree_with_bareiss() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..1000 {
        let rows = (0..5)
            .map(|_| {
                (0..5)
                    .map(|_| Scalar::new(rng.gen_range(-9..=9), rng.gen_range(1..=9)))
                    .collect()
            })
            .collect();
        let m = Matrix::from_rows(5, rows);
        assert_eq!(m.rank(), bareiss_rank(&m));
    }
}

// ---------------------------------------------------------------------------
// Invariants on random nilpotent algebras
// ---------------------------------------------------------------------------

fn fuzz_algebra(seed: u64) -> Algebra {
    const GRID: [(usize, usize); 6] = [(1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (3, 2)];
    let (g, c) = GRID[(seed % GRID.len() as u64) as usize];
    let target = 3 + (seed / GRID.len() as u64) % 4;
    random_quotient(&GenSpec {
        generators: g,
        class: c,
        target_dim: Some(target as usize),
        seed,
    })
    .expect("grid stays under the size cap")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn generated_algebras_satisfy_structural_invariants(seed in any::<u64>()) {
        let a = fuzz_algebra(seed);
        let n = a.dim();
        prop_assert!(a.check_associativity());
        prop_assert!(a.is_nilpotent());

        let derived = a.derived_ideal();
        let center = a.center();
        if n > 0 {
            prop_assert!(!center.is_zero(), "nilpotent nonzero needs Z(A) ≠ 0");
            prop_assert!(derived.dim() < n, "nilpotent needs A′ ≠ A");
        }
        // Both are two-sided ideals: multiplying a basis vector stays inside.
        for sub in [&derived, &center] {
            for v in sub.basis_rows() {
                for i in 0..n {
                    prop_assert!(sub.contains(&a.basis_times_vec(i, v)));
                    prop_assert!(sub.contains(&a.vec_times_basis(v, i)));
                }
            }
        }
        prop_assert!(a.quotient(&derived).unwrap().is_abelian());
    }

    #[test]
    fn multiplier_bounds_on_generated_algebras(seed in any::<u64>()) {
        let a = fuzz_algebra(seed);
        let n = a.dim();
        let dim_m = multiplier_dim(&a).unwrap();
        prop_assert!(dim_m <= n * n);
        prop_assert_eq!(dim_m == n * n, a.is_abelian());

        // B² ⊆ Z² and dim B² = dim A′, exactly.
        let cocycles = CocycleSpace::of(&a);
        let cob = coboundary_matrix(&a);
        for i in 0..cob.rows() {
            prop_assert!(annihilates(&cocycles.constraint_matrix, cob.row(i)));
        }
        prop_assert_eq!(cob.rank(), a.derived_ideal().dim());
    }

    #[test]
    fn cover_table_agrees_with_cocycle_rank(seed in any::<u64>()) {
        let a = fuzz_algebra(seed);
        prop_assert!(verify_cover_consistency(&a).unwrap());
    }

    #[test]
    fn split_complement_invariants(seed in any::<u64>()) {
        let a = fuzz_algebra(seed);
        if let Some((ideal, line)) = a.split_central_complement() {
            let n = a.dim();
            prop_assert_eq!(line.dim(), 1);
            prop_assert!(a.center().contains_subspace(&line));
            prop_assert!(line.intersection(&a.derived_ideal()).is_zero());
            prop_assert!(ideal.contains_subspace(&a.derived_ideal()));
            prop_assert_eq!(ideal.dim() + 1, n);
            prop_assert!(ideal.intersection(&line).is_zero());
            let on_ideal = a.induced_on(&ideal).unwrap();
            prop_assert!(on_ideal.check_associativity());
        } else {
            prop_assert!(a.derived_ideal().contains_subspace(&a.center()));
        }
    }
}
