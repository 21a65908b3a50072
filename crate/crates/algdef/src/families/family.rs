use super::FamiliesError;
use crate::algstruct::FDAlgebra;
use crate::exactnum::{Field, Rat, RatFunc};
use crate::ncgb::{quotient_structure_constants, NCPoly, RewritingSystem, WeightedDeglexOrder};
use crate::exactnum::rat;

/// A deformation family: an algebra over `k[t]`, free of finite rank, with
/// polynomial structure constants, together with the rewriting system it was
/// built from (when available) and the parameter values at which the
/// family's generic-fiber description is known to degenerate.
#[derive(Clone, Debug)]
pub struct PolyFamily {
    name: String,
    algebra: FDAlgebra<RatFunc>,
    provenance: Option<RewritingSystem<RatFunc>>,
    alphabet: Vec<String>,
    parameter: String,
    excluded_points: Vec<Rat>,
}

impl PolyFamily {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// The family's multiplication table over rational functions; every
    /// stored constant is in fact a polynomial in the parameter.
    pub fn algebra(&self) -> &FDAlgebra<RatFunc> {
        &self.algebra
    }

    pub fn provenance(&self) -> Option<&RewritingSystem<RatFunc>> {
        self.provenance.as_ref()
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn parameter(&self) -> &str {
        &self.parameter
    }

    /// Parameter values at which the generic-fiber identification is not
    /// claimed (the fiber itself still exists there).
    pub fn excluded_points(&self) -> &[Rat] {
        &self.excluded_points
    }

    /// Evaluate every structure constant at `lambda`. Always succeeds:
    /// polynomiality of the constants is checked at construction time.
    pub fn fiber(&self, lambda: &Rat) -> FDAlgebra<Rat> {
        self.algebra
            .map_coeffs(|c| c.eval(lambda))
            .expect("structure constants are polynomials, so have no poles")
    }

    /// Specialize the family's rewriting rules at `lambda` and rebuild the
    /// quotient from scratch. Used as an independent cross-check that
    /// specialization commutes with construction.
    pub fn fiber_from_rules(&self, lambda: &Rat) -> Result<FDAlgebra<Rat>, FamiliesError> {
        let sys = self
            .provenance
            .as_ref()
            .expect("fiber_from_rules requires provenance")
            .specialize(lambda)?;
        Ok(quotient_structure_constants(&sys, &self.alphabet)?)
    }

    /// The first `count` positive integers that avoid the excluded set.
    pub fn default_sample_points(&self, count: usize) -> Vec<Rat> {
        let mut out = Vec::new();
        let mut k = rat(1);
        while out.len() < count {
            if !self.excluded_points.contains(&k) {
                out.push(k.clone());
            }
            k += rat(1);
        }
        out
    }

    /// Blockwise direct product of two families; the parameter is shared.
    pub fn direct_product(&self, other: &PolyFamily) -> PolyFamily {
        let mut alphabet: Vec<String> =
            self.alphabet.iter().map(|a| format!("1:{a}")).collect();
        alphabet.extend(other.alphabet.iter().map(|a| format!("2:{a}")));
        let mut excluded = self.excluded_points.clone();
        for p in &other.excluded_points {
            if !excluded.contains(p) {
                excluded.push(p.clone());
            }
        }
        PolyFamily {
            name: format!("{} x {}", self.name, other.name),
            algebra: self.algebra.direct_product(&other.algebra),
            provenance: None,
            alphabet,
            parameter: self.parameter.clone(),
            excluded_points: excluded,
        }
    }

    /// Lift a fixed algebra to the family that is constant in the parameter.
    pub fn constant(name: &str, a: &FDAlgebra<Rat>) -> PolyFamily {
        let algebra: FDAlgebra<RatFunc> = a
            .map_coeffs(|c| Ok::<_, std::convert::Infallible>(RatFunc::from_rat(c)))
            .unwrap();
        PolyFamily {
            name: name.to_string(),
            algebra,
            provenance: None,
            alphabet: Vec::new(),
            parameter: "t".to_string(),
            excluded_points: Vec::new(),
        }
    }
}

/// Complete the relations over rational-function coefficients and extract
/// the quotient's structure constants, rejecting any constant that is not a
/// genuine polynomial in the parameter.
pub fn family_from_relations(
    name: &str,
    relations: Vec<NCPoly<RatFunc>>,
    alphabet: &[String],
    parameter: &str,
    degree_bound: usize,
    excluded_points: Vec<Rat>,
) -> Result<PolyFamily, FamiliesError> {
    let order = WeightedDeglexOrder::heavy_last(alphabet.len(), degree_bound);
    let sys = RewritingSystem::new(relations, order, degree_bound, alphabet.len())?.complete()?;
    let algebra = quotient_structure_constants(&sys, alphabet)?;
    // every structure constant must stay in k[t]
    for i in 0..algebra.dim() {
        for j in 0..algebra.dim() {
            for (k, c) in algebra.product_basis(i, j).iter().enumerate() {
                if !c.is_zero() && !c.is_polynomial() {
                    return Err(FamiliesError::DenominatorInStructureConstants {
                        label: format!(
                            "{} * {} at {}",
                            algebra.basis_labels()[i],
                            algebra.basis_labels()[j],
                            algebra.basis_labels()[k]
                        ),
                        constant: format!("{c:?}"),
                    });
                }
            }
        }
    }
    Ok(PolyFamily {
        name: name.to_string(),
        algebra,
        provenance: Some(sys),
        alphabet: alphabet.to_vec(),
        parameter: parameter.to_string(),
        excluded_points,
    })
}

/// Associativity and unit laws as polynomial identities in the parameter.
pub fn verify_family(f: &PolyFamily) -> bool {
    f.algebra.verify_structure()
}

/// The fiber of the family at a parameter value.
pub fn fiber(f: &PolyFamily, lambda: &Rat) -> FDAlgebra<Rat> {
    f.fiber(lambda)
}

#[cfg(test)]
mod tests {
    use super::super::builtin::{
        a2_family, an_family, aprime_family, d1inf_family, dn1_family, induction_family,
        parabola_family,
    };
    use super::*;
    use crate::contraction::DIndex;
    use crate::exactnum::rat;
    use crate::wedderburn::{geometric_type, radical};

    #[test]
    fn parabola_family_has_rank_two_and_splits_off_zero() {
        let f = parabola_family().unwrap();
        assert_eq!(f.dim(), 2);
        assert!(verify_family(&f));
        // x ∘ x = t · 1
        let xx = f.algebra().product_basis(1, 1);
        assert!(xx[1].is_zero());
        assert_eq!(xx[0].as_poly().unwrap().degree(), Some(1));

        let split = f.fiber(&rat(1));
        assert!(split.verify_structure());
        assert_eq!(radical(&split).dim(), 0);
        assert_eq!(format!("{}", geometric_type(&split).unwrap()), "{1:2}");

        let degenerate = f.fiber(&rat(0));
        assert_eq!(radical(&degenerate).dim(), 1);
    }

    #[test]
    fn a2_family_has_rank_six_and_degenerates_at_one() {
        let f = a2_family().unwrap();
        assert_eq!(f.dim(), 6);
        assert!(verify_family(&f));
        // generic fiber: radical is the 2-dimensional span {y, xy} of the
        // four-dimensional block
        assert_eq!(radical(&f.fiber(&rat(4))).dim(), 2);
        // at the excluded point 1 the split relation degenerates
        assert!(radical(&f.fiber(&rat(1))).dim() > 2);
    }

    #[test]
    fn all_builtin_families_verify_and_specialization_commutes() {
        let families = vec![
            parabola_family().unwrap(),
            a2_family().unwrap(),
            aprime_family().unwrap(),
            dn1_family(2).unwrap(),
            d1inf_family().unwrap(),
            an_family(4).unwrap(),
            induction_family(2, DIndex::Finite(2)).unwrap(),
            induction_family(2, DIndex::Infinite).unwrap(),
        ];
        for f in &families {
            assert!(verify_family(f), "family {} fails verification", f.name());
            for lambda in [rat(0), rat(1), rat(2), rat(5), rat_frac_half()] {
                let direct = f.fiber(&lambda);
                assert!(direct.verify_structure());
                let rebuilt = f.fiber_from_rules(&lambda).unwrap();
                assert_eq!(direct, rebuilt, "family {} at {lambda}", f.name());
            }
        }
    }

    fn rat_frac_half() -> Rat {
        crate::exactnum::rat_frac(1, 2)
    }

    #[test]
    fn centre_dimension_is_semicontinuous_at_zero() {
        let families = vec![
            parabola_family().unwrap(),
            a2_family().unwrap(),
            aprime_family().unwrap(),
            dn1_family(2).unwrap(),
            d1inf_family().unwrap(),
            an_family(5).unwrap(),
            induction_family(2, DIndex::Finite(2)).unwrap(),
        ];
        for f in &families {
            let special = f.fiber(&rat(0)).centre().dim();
            for l in 1..=5 {
                let generic = f.fiber(&rat(l)).centre().dim();
                assert!(
                    special >= generic,
                    "family {}: centre dim {special} at 0 < {generic} at {l}",
                    f.name()
                );
            }
        }
    }

    #[test]
    fn constant_lift_and_product_verify() {
        let f = parabola_family().unwrap();
        let c = PolyFamily::constant("pt", &f.fiber(&rat(1)));
        assert!(verify_family(&c));
        let p = f.direct_product(&c);
        assert_eq!(p.dim(), 4);
        assert!(verify_family(&p));
        assert_eq!(p.fiber(&rat(3)).dim(), 4);
    }
}
