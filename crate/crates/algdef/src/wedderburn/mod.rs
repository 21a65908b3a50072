//! Semisimplicity analysis over the rationals.
//!
//! The Jacobson radical of a finite-dimensional algebra in characteristic
//! zero is the kernel of the trace form `(a, b) ↦ tr(L_{ab})` of the regular
//! representation; no algebraic closure is needed. The semisimple quotient
//! then splits through its centre: a primitive element of the étale centre
//! has squarefree minimal polynomial, whose rational irreducible factors
//! yield the central primitive idempotents by the Chinese remainder theorem.
//!
//! Each simple block contributes to the *geometric type* — the shape of the
//! algebra after base change to the algebraic closure. A block of dimension
//! `dim` whose centre is a field of degree `f` over the rationals splits
//! into `f` matrix blocks of size `√(dim/f)` over the closure, so the type
//! is computable from field degrees alone, without deciding whether the
//! block is a division algebra over the rationals.

mod factor;
mod semisimple;

pub use factor::{factor_poly_rational, IrreducibleFactorization};
pub use semisimple::{
    central_primitive_idempotents, geometric_type, minimal_polynomial, radical,
    semisimple_quotient, GeometricType,
};

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum WedderburnError {
    #[error("cannot factor the zero polynomial")]
    ZeroPolynomial,
    /// The deterministic sweep over small-integer combinations of the centre
    /// basis found no primitive element.
    #[error("no primitive element of the centre found after {0} candidates")]
    PrimitiveElementSearchExhausted(usize),
    /// A simple block whose dimension divided by its centre degree is not a
    /// perfect square: the input was not actually semisimple or associative.
    #[error("block of dimension {dim} over a centre of degree {centre_degree} is not a matrix algebra")]
    NonSquareBlockDimension { dim: usize, centre_degree: usize },
}
