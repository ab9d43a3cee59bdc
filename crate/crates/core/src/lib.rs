//! Exact invariant vectors of cyclic subgroups in irreducible representations
//! of the symmetric groups.
//!
//! For partitions `λ, μ ⊢ n` the engine computes the dimension of the space of
//! vectors in the Specht module `V_λ` fixed by a permutation `w_μ` of cycle
//! type `μ`, both through characters and through the Schur expansion of the
//! induced representation `Ind_{⟨w_μ⟩}^{S_n} 1`. It also carries the closed-form
//! list of pairs with no fixed vector and a harness that checks that list
//! against brute force.
//!
//! All arithmetic is exact. The numeric core is generic over a [`Scalar`]
//! integer type; the aliases below fix it to [`BigInt`].

pub mod arith;
pub mod characters;
pub mod cli;
pub mod error;
pub mod lr;
pub mod partitions;
pub mod scalar;
pub mod spectral;
pub mod symfunc;
pub mod theorem;

pub use num_bigint::BigInt;

pub use characters::{border_strips, class_size, dimension, BorderStrip, CharacterEngine};
pub use error::{Error, Result};
pub use lr::{
    canonical_column_tableau, enumerate_lr_tableaux, first_lr_tableau, lr_coefficient, schur_product, LrTableau,
};
pub use partitions::{enumerate_partitions, Partition, SkewShape, DEFAULT_PARTITION_BOUND};
pub use scalar::Scalar;
pub use spectral::{eigenvalue_profile, immersed, verify_immersion_theorem, EigenvalueProfile, ImmersionReport};
pub use symfunc::{
    dominates_expansion, expansion_product, frobenius_f, multiplicity, power_sum_to_schur,
    schur_product_via_power_sums, SchurExpansion,
};
pub use theorem::{
    choose_beta, exception_cases, exceptions_at, find_witness, is_persistent, main_admits, non_admitting,
    swanson_admits, verify_main_theorem, ExceptionRecord, VerifyReport, WitnessPair,
};

/// Exact character value `χ_λ(μ)`.
pub type CharacterValue = BigInt;
/// Character engine over arbitrary-precision integers.
pub type Engine = CharacterEngine<BigInt>;
/// Machine-word engine; reports overflow instead of wrapping.
pub type Engine64 = CharacterEngine<i64>;
pub type Expansion = SchurExpansion<BigInt>;
pub type Expansion64 = SchurExpansion<i64>;
pub type Profile = EigenvalueProfile<BigInt>;
pub type Report = VerifyReport<BigInt>;
