//! Free-algebra rewriting engine.
//!
//! Words in a fixed finite alphabet, noncommutative polynomials, admissible
//! weighted-deglex monomial orders, normal forms modulo a rewriting system,
//! diamond-lemma confluence checking, bounded overlap completion and
//! extraction of structure constants for finite-dimensional quotients.

mod order;
mod parse;
mod poly;
mod quotient;
mod rewrite;
mod word;

pub use order::{Ordering3, WeightedDeglexOrder};
pub use parse::parse_ncpoly;
pub use poly::NCPoly;
pub use quotient::quotient_structure_constants;
pub use rewrite::{CriticalPair, RewritingSystem, Rule};
pub use word::Word;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NcgbError {
    #[error("syntax error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown symbol `{0}` at byte {1}")]
    UnknownSymbol(String, usize),
    #[error("reduction produced a word longer than the degree bound {0}")]
    DegreeBoundExceeded(usize),
    #[error("rule leading coefficient is not an invertible constant")]
    NonUnitLeadingCoefficient,
    #[error("normal words survive at the degree bound; quotient may be infinite-dimensional")]
    PossiblyInfiniteDimensional,
}
