//! Multipliers and the invariant t(A) of nilpotent associative algebras.
//!
//! A finite-dimensional nilpotent associative algebra `A` has a *multiplier*
//! `M(A)`: the kernel of a largest stem extension of `A`, isomorphic to the
//! second cohomology group of `A` with trivial coefficients. Its dimension is
//! at most `(dim A)²`, with equality exactly for abelian algebras, so the
//! deficiency
//!
//! ```text
//! t(A) = (dim A)² − dim M(A)
//! ```
//!
//! measures how far `A` is from that maximum. This crate computes `dim M(A)`
//! and `t(A)` by exact rational linear algebra on 2-cocycles, rebuilds the
//! symbolic multiplication table of the cover with its multiplier generators,
//! and classifies algebras with `t(A) ≤ 10` by their structural fingerprint.
//!
//! Everything runs over ℚ with arbitrary-precision arithmetic: results are
//! exact dimensions, never floating-point estimates.
//!
//! # Example
//!
//! ```
//! use nilmult::families::{self, ExtraSpecialKind};
//! use nilmult::multiplier::t_value;
//! use nilmult::theorems::{classify, ClassLabel};
//!
//! // J₁ = ⟨x, z : xx = z⟩, the smallest non-abelian nilpotent algebra.
//! let j1 = families::make_extra_special(ExtraSpecialKind::J1).unwrap().algebra;
//! assert_eq!(t_value(&j1).unwrap().t, 3);
//! assert_eq!(classify(&j1), ClassLabel::J1);
//! ```

pub mod algebra;
pub mod cover;
pub mod families;
pub mod matrix;
pub mod multiplier;
pub mod randgen;
pub mod scalar;
pub mod subspace;
pub mod theorems;

pub use algebra::{Algebra, AlgebraError, PowerChain};
pub use matrix::Matrix;
pub use scalar::Scalar;
pub use subspace::Subspace;
