use super::{NCPoly, NcgbError, RewritingSystem, Word};
use crate::algstruct::FDAlgebra;
use crate::exactnum::Field;

/// Structure constants of the quotient algebra of a confluent system.
///
/// The basis is the set of normal monomials (the word `1` first, then
/// ascending in the system order); `alphabet` supplies the generator names
/// for the basis labels. Each product `e_i * e_j` is the normal form of the
/// concatenated words, expanded over the basis.
pub fn quotient_structure_constants<F: Field>(
    sys: &RewritingSystem<F>,
    alphabet: &[String],
) -> Result<FDAlgebra<F>, NcgbError> {
    let basis = sys.normal_monomials()?;
    let index: std::collections::BTreeMap<&Word, usize> =
        basis.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let dim = basis.len();
    let labels = basis
        .iter()
        .map(|w| w.display(alphabet).to_string())
        .collect();
    let mut unit = vec![F::zero(); dim];
    unit[index[&Word::one()]] = F::one();
    let mut table = vec![vec![Vec::new(); dim]; dim];
    for (i, wi) in basis.iter().enumerate() {
        for (j, wj) in basis.iter().enumerate() {
            let prod = NCPoly::from_term(wi.concat(wj), F::one());
            let nf = sys.normal_form(&prod)?;
            table[i][j] = nf.terms().map(|(w, c)| (index[w], c.clone())).collect();
        }
    }
    Ok(FDAlgebra::new(labels, unit, table))
}
