//! Exact computer algebra for finite-dimensional associative algebras.
//!
//! The crate builds finite-dimensional quotients of the free algebra on two
//! generators from noncommutative presentations, analyses them (centre,
//! Jacobson radical, Wedderburn blocks, Hochschild cohomology), constructs
//! one-parameter polynomial deformation families, and assembles verified
//! deformation certificates showing that type-A and type-D contraction
//! algebras deform to a unique semisimple algebra.
//!
//! All arithmetic is exact: arbitrary-precision rationals, univariate
//! polynomials and rational functions in the deformation parameter.

pub mod algstruct;
pub mod contraction;
pub mod exactnum;
pub mod families;
pub mod hochschild;
pub mod ncgb;
pub mod wedderburn;
