//! Contraction algebras of types A and D.
//!
//! Type `A_n` is presented by `⟨x, y⟩/(x, y^{n−1})`, the truncated
//! polynomial ring `k[y]/(y^{n−1})`. Type `D_{n,m}` (finite `m`) is
//! presented by the relations
//!
//! ```text
//! x·y + y·x,
//! x^{2n−1} + x^{2m−2} + y²,
//! x^{2n+2m−3}            (m ≤ n)   /   x^{4n−2}   (m > n),
//! ```
//!
//! and `D_{n,∞}` drops the `x^{2m−2}` summand. Completion adds the relation
//! `x^{2n−1}·y`. The expected dimension, centre dimension and nilpotency
//! index of `x` are tabulated here; the obstruction arithmetic pins down
//! the unique semisimple algebra any such algebra can deform to, given that
//! matrix blocks of size ≥ 3 are excluded by a spanning argument.

mod build;
mod obstruction;
mod reproduce;

pub use build::{
    build_contraction, dinfty_coincidence, expected_invariants, generator_element,
    parse_relations, power_words, standard_alphabet, ContractionSpec, DIndex, InvariantRecord,
};
pub use obstruction::{
    matrix_block_bound, obstruction_solver, semisimple_target, spanning_words, BlockBound,
};
pub use reproduce::{
    a_certificate, d_certificate, discrepancy_notes, reproduce, sqrt_normalization_images,
    twisted_relation_texts, ComputedInvariants, Report, StageResult,
};
