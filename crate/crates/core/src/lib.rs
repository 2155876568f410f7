//! Laplace transform on semilattices of sets.
//!
//! A union-closed family `𝒮` of subsets of a finite ground set `M` carries a
//! weight function `Φ`. Its transform is
//!
//! ```text
//! f(X) = Σ_{A ∈ 𝒮, A ⊆ X} Φ(A)        (X ⊆ M)
//! ```
//!
//! which is the integral of the semicharacter `ψ_X` against the measure with
//! density `Φ`. The crate provides the forward transform, the alternating-sum
//! inverse `Φ(A) = Σ_{X ⊆ A} (-1)^{|A|+|X|} f(X)`, the difference-operator
//! inverse on base sets `𝒱(F; U₁,…,Uₙ)` of the finite Stone-space model, fast
//! `O(n·2^n)` dense kernels, and brute-force oracles for all of them.

pub mod cli;
pub mod demo;
pub mod error;
pub mod family;
pub mod ground;
pub mod inversion;
pub mod oracle;
pub mod problem;
pub mod scalar;
pub mod semicharacter;
pub mod stone;
pub mod transform;

pub use error::{Error, Result};
pub use family::{is_semilattice, union_closure, SetFamily};
pub use ground::{make_ground, GroundSet, Subset, DENSE_LIMIT};
pub use inversion::{invert_measure, invert_point, mobius_fast, FamilyMeasureQuery};
pub use scalar::{Rational, Scalar, ScalarKind};
pub use semicharacter::{canonicalize, enumerate_semicharacters, support, Semicharacter};
pub use stone::{
    base_intersect, base_members, delta, f_prime, invert_base_measure, laplace_of_measure,
    measure_finite_union, psi_open, BaseSet, PointMeasure, StoneModel,
};
pub use transform::{
    alternating_sum, laplace_forward, transform_table, zeta_fast, zeta_sparse, SetFunction,
    TransformTable, WeightFn,
};
