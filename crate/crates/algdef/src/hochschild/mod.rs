//! Hochschild cohomology dimensions via the bar complex.
//!
//! `HH⁰` is the centre; `HH¹` counts outer derivations (first-order
//! deformation directions) and `HH²` infinitesimal obstructions. The
//! dimensions are computed from exact ranks of the sparse coboundary
//! matrices on multilinear maps `A^⊗k → A`, with an independent reduced-bar
//! implementation as a cross-check.

mod bar;

pub use bar::{
    hh_consistency, hochschild_dims, hochschild_dims_reduced, hochschild_dims_with_budget,
    sparse_rank, HHConsistency, HochschildError, HochschildReport, SparseMatrix,
    DEFAULT_ENTRY_BUDGET,
};
