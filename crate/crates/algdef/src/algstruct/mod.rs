//! Finite-dimensional algebras given by structure constants.
//!
//! An algebra of dimension `d` over a field is stored as the sparse table of
//! products `e_i * e_j = Σ_k λ_{ij}^k e_k` together with the coordinates of
//! the unit. [`FDAlgebra::verify_structure`] checks the associativity and
//! unit equations exactly in the coefficient ring, so a table over polynomial
//! entries is verified as a polynomial identity (every specialization of the
//! parameter is then associative as well).
//!
//! On top of the table the module computes the usual linear-algebra
//! invariants: the centre, the commutator subspace, regular-representation
//! matrices, nilpotency indices, and direct products. Algebra homomorphisms
//! are handled through [`GeneratorImageMap`]: a map out of a presented
//! algebra is pinned down by generator images, and checking it is a
//! homomorphism amounts to evaluating the relations.

mod algebra;
mod map;

pub use algebra::{FDAlgebra, Subspace};
pub use map::{evaluate_ncpoly, map_image, verify_algebra_map, GeneratorImageMap, MapVerdict};

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum AlgstructError {
    /// `a^d` is still nonzero in a `d`-dimensional algebra, so no power of
    /// `a` ever vanishes.
    #[error("element is not nilpotent")]
    NotNilpotent,
}
