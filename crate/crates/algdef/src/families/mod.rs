//! One-parameter polynomial deformation families.
//!
//! A family is a finite free module over the polynomial ring `k[t]` with an
//! associative multiplication whose structure constants are polynomials in
//! the parameter. Families are built by completing a presentation over
//! rational-function coefficients and checking that no denominators survive
//! into the structure constants; fibers are obtained by evaluating the
//! parameter. The certificate layer records machine-checked evidence that a
//! specific algebra (the `t = 0` fiber) deforms to a product of named or
//! semisimple algebras, and composes such edges transitively and blockwise.

mod blocks;
mod builtin;
mod certificate;
mod family;

pub use blocks::{fiber_blocks, FiberBlock};
pub use builtin::{
    a2_family, a2_source_relations, an_family, aprime_family, builtin_family, d1inf_family,
    branch_split_family, dn1_family, dn1_family_signed, double_branch_degree_bound,
    double_branch_images, double_branch_relations, double_branch_values, induction_family,
    induction_family_signed, parabola_family,
};
pub use certificate::{
    certify_edge, compose_certificates, compose_step, product_certificate, BlockClaim, CertEdge,
    Certificate, EdgeEvidence, ImageExpr,
};
pub use family::{family_from_relations, fiber, verify_family, PolyFamily};

use crate::exactnum::Rat;
use crate::ncgb::NcgbError;
use crate::wedderburn::WedderburnError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FamiliesError {
    #[error("rewriting error: {0}")]
    Ncgb(#[from] NcgbError),
    #[error("factorization error: {0}")]
    Wedderburn(#[from] WedderburnError),
    #[error("structure constant {constant} of basis product {label} is not polynomial in the parameter")]
    DenominatorInStructureConstants { label: String, constant: String },
    #[error("deformation evidence failed: {item}")]
    EvidenceFailed { item: String },
    #[error("certificate chain mismatch: needed source `{expected}`, {found}")]
    ChainMismatch { expected: String, found: String },
    #[error("unknown builtin family `{0}`")]
    UnknownFamily(String),
    #[error("parameter out of range for family `{name}`: {detail}")]
    ParameterOutOfRange { name: String, detail: String },
    #[error("idempotent lifting did not converge (non-nilpotent defect)")]
    IdempotentLiftDiverged,
    #[error("sample point {0} is excluded or repeated")]
    BadSamplePoint(Rat),
}
