//! Randomized property tests: exact linear algebra, rewriting, and
//! invariance of the cohomology dimensions under basis change.

use proptest::prelude::*;

use algdef::contraction::{build_contraction, ContractionSpec};
use algdef::exactnum::{rat, Matrix, Rat};
use algdef::families::{aprime_family, induction_family};
use algdef::contraction::DIndex;
use algdef::hochschild::hochschild_dims;
use algdef::exactnum::{Field, RatFunc};
use algdef::ncgb::{NCPoly, RewritingSystem, Word};

fn small_rat() -> impl Strategy<Value = Rat> {
    (-4i64..=4).prop_map(rat)
}

fn small_matrix() -> impl Strategy<Value = (usize, usize, Vec<Rat>)> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| {
        proptest::collection::vec(small_rat(), r * c).prop_map(move |entries| (r, c, entries))
    })
}

fn word() -> impl Strategy<Value = Word> {
    proptest::collection::vec(0u8..2, 0..6)
        .prop_map(|letters| letters.iter().fold(Word::one(), |w, g| w.concat(&Word::letter(*g))))
}

fn ncpoly() -> impl Strategy<Value = NCPoly<Rat>> {
    proptest::collection::vec((word(), small_rat()), 1..5).prop_map(|terms| {
        let mut p = NCPoly::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    })
}

fn d22_system() -> RewritingSystem<Rat> {
    build_contraction(&ContractionSpec::d(2, 2)).unwrap().1
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Exact elimination: the rank and the kernel dimension always add up
    /// to the number of columns.
    #[test]
    fn rank_plus_nullity_is_the_column_count((r, c, entries) in small_matrix()) {
        let m = Matrix::from_fn(r, c, |i, j| entries[i * c + j].clone());
        prop_assert_eq!(m.rank() + m.kernel().len(), c);
    }

    /// Normal forms are idempotent.
    #[test]
    fn normal_form_is_idempotent(p in ncpoly()) {
        let sys = d22_system();
        let once = sys.normal_form(&p).unwrap();
        let twice = sys.normal_form(&once).unwrap();
        prop_assert_eq!(once, twice);
    }

    /// Normal forms are linear.
    #[test]
    fn normal_form_is_linear(p in ncpoly(), q in ncpoly(), c in small_rat()) {
        let sys = d22_system();
        let combined = sys.normal_form(&p.add(&q.scale(&c))).unwrap();
        let separate = sys
            .normal_form(&p)
            .unwrap()
            .add(&sys.normal_form(&q).unwrap().scale(&c));
        prop_assert_eq!(combined, separate);
    }

    /// Specializing the parameter commutes with taking normal forms: the
    /// rewriting system of a family describes every fiber at once.
    #[test]
    fn specialization_commutes_with_normal_forms(p in ncpoly(), l in 1i64..=6) {
        let family = induction_family(2, DIndex::Finite(2)).unwrap();
        let sys = family.provenance().unwrap();
        let lambda = rat(l);
        let lifted: NCPoly<RatFunc> = p.map_coeffs(RatFunc::from_rat);
        let nf_then_spec = sys
            .normal_form(&lifted)
            .unwrap()
            .specialize(&lambda)
            .unwrap();
        let spec_then_nf = sys
            .specialize(&lambda)
            .unwrap()
            .normal_form(&p)
            .unwrap();
        prop_assert_eq!(nf_then_spec, spec_then_nf);
    }

    /// Cohomology dimensions do not depend on the chosen basis: conjugate
    /// the structure constants by a random unimodular matrix and recompute.
    #[test]
    fn hochschild_dims_are_basis_invariant(
        shears in proptest::collection::vec((0usize..4, 0usize..4, -2i64..=2), 1..5)
    ) {
        let a = aprime_family().unwrap().fiber(&rat(1));
        let d = a.dim();
        // a product of shear operations is always invertible
        let mut basis: Vec<Vec<Rat>> = (0..d).map(|i| a.basis_element(i)).collect();
        for (i, j, c) in shears {
            if i != j {
                let shifted: Vec<Rat> = basis[i]
                    .iter()
                    .zip(&basis[j])
                    .map(|(u, v)| u + &(rat(c) * v))
                    .collect();
                basis[i] = shifted;
            }
        }
        let labels = (0..d).map(|i| format!("b{i}")).collect();
        let changed = a.subalgebra_on_basis(&basis, labels);
        prop_assert!(changed.verify_structure());
        let original = hochschild_dims(&a, 2).unwrap();
        let transformed = hochschild_dims(&changed, 2).unwrap();
        prop_assert_eq!(original.dims, transformed.dims);
    }

    /// Centre dimension and nilpotency are preserved by basis change too.
    #[test]
    fn centre_dimension_is_basis_invariant(c in -3i64..=3) {
        let a = build_contraction(&ContractionSpec::d(2, 2)).unwrap().0;
        let d = a.dim();
        let mut basis: Vec<Vec<Rat>> = (0..d).map(|i| a.basis_element(i)).collect();
        let shifted: Vec<Rat> = basis[2]
            .iter()
            .zip(&basis[5])
            .map(|(u, v)| u + &(rat(c) * v))
            .collect();
        basis[2] = shifted;
        let labels = (0..d).map(|i| format!("b{i}")).collect();
        let changed = a.subalgebra_on_basis(&basis, labels);
        prop_assert_eq!(changed.centre().dim(), a.centre().dim());
    }
}
