use super::{FDAlgebra, Subspace};
use crate::exactnum::{Field, Matrix};
use crate::ncgb::{NCPoly, NcgbError, RewritingSystem};

/// A candidate homomorphism out of a presented algebra, pinned down by the
/// images of the generators.
#[derive(Clone, Debug)]
pub struct GeneratorImageMap<F: Field> {
    /// Confluent system presenting the source algebra.
    pub source: RewritingSystem<F>,
    pub target: FDAlgebra<F>,
    /// One target element per source generator.
    pub images: Vec<Vec<F>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapVerdict {
    /// Some defining relation has a nonzero image.
    NotAMap,
    /// All relations vanish; the induced linear map is not bijective.
    Map { rank: usize },
    /// All relations vanish and the normal-monomial basis maps to a basis.
    Isomorphism,
}

/// Evaluate a noncommutative polynomial at the generator images.
pub fn evaluate_ncpoly<F: Field>(a: &FDAlgebra<F>, p: &NCPoly<F>, images: &[Vec<F>]) -> Vec<F> {
    let mut out = a.zero_element();
    for (w, c) in p.terms() {
        let v = a.evaluate_word(w, images);
        out = a.add(&out, &a.scale(c, &v));
    }
    out
}

/// Decide whether the generator images define an algebra map, and whether
/// that map is an isomorphism onto the target.
///
/// The relations checked are the rules of the (completed) source system;
/// they generate the defining ideal, so their vanishing makes every source
/// relation vanish. For the isomorphism check each normal monomial of the
/// source is evaluated at the images and the rank of the resulting linear
/// map is compared against both dimensions.
pub fn verify_algebra_map<F: Field>(m: &GeneratorImageMap<F>) -> Result<MapVerdict, NcgbError> {
    assert_eq!(m.images.len(), m.source.num_generators());
    for rule in m.source.rules() {
        let img = evaluate_ncpoly(&m.target, &rule.as_poly(), &m.images);
        if !FDAlgebra::is_zero_element(&img) {
            return Ok(MapVerdict::NotAMap);
        }
    }
    let basis = m.source.normal_monomials()?;
    let evals: Vec<Vec<F>> = basis
        .iter()
        .map(|w| m.target.evaluate_word(w, &m.images))
        .collect();
    let rank = Matrix::from_rows(evals).rank();
    if rank == m.target.dim() && basis.len() == m.target.dim() {
        Ok(MapVerdict::Isomorphism)
    } else {
        Ok(MapVerdict::Map { rank })
    }
}

/// The image of the map as a subspace of the target.
pub fn map_image<F: Field>(m: &GeneratorImageMap<F>) -> Result<Subspace<F>, NcgbError> {
    let basis = m.source.normal_monomials()?;
    let evals: Vec<Vec<F>> = basis
        .iter()
        .map(|w| m.target.evaluate_word(w, &m.images))
        .collect();
    Ok(Subspace::from_spanning(m.target.dim(), evals))
}
