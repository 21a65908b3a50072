use crate::algstruct::FDAlgebra;
use crate::exactnum::{rat, Rat};
use crate::ncgb::{
    parse_ncpoly, quotient_structure_constants, NCPoly, NcgbError, RewritingSystem,
    WeightedDeglexOrder, Word,
};
use std::fmt;

/// Second index of a type-D algebra: finite `m ≥ 1` or `∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DIndex {
    Finite(usize),
    Infinite,
}

impl fmt::Display for DIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DIndex::Finite(m) => write!(f, "{m}"),
            DIndex::Infinite => write!(f, "inf"),
        }
    }
}

/// Which contraction algebra to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ContractionSpec {
    /// `A_n = k[y]/(y^{n−1})`, `n ≥ 2`.
    A { n: usize },
    /// `D_{n,m}` with `n ≥ 1` and `m ≥ 1` or `∞`.
    D { n: usize, m: DIndex },
}

impl ContractionSpec {
    pub fn a(n: usize) -> Self {
        assert!(n >= 2, "type A needs n >= 2");
        ContractionSpec::A { n }
    }

    pub fn d(n: usize, m: usize) -> Self {
        assert!(n >= 1 && m >= 1, "type D needs n, m >= 1");
        ContractionSpec::D {
            n,
            m: DIndex::Finite(m),
        }
    }

    pub fn d_infinite(n: usize) -> Self {
        assert!(n >= 1);
        ContractionSpec::D {
            n,
            m: DIndex::Infinite,
        }
    }

    /// Relation texts of the defining presentation in generators `x, y`.
    pub fn relation_texts(&self) -> Vec<String> {
        match *self {
            ContractionSpec::A { n } => vec!["x".to_string(), format!("y^{}", n - 1)],
            ContractionSpec::D {
                n,
                m: DIndex::Finite(m),
            } => {
                let power = if m <= n { 2 * n + 2 * m - 3 } else { 4 * n - 2 };
                vec![
                    "x*y + y*x".to_string(),
                    format!("x^{} + x^{} + y^2", 2 * n - 1, 2 * m - 2),
                    format!("x^{power}"),
                ]
            }
            ContractionSpec::D {
                n,
                m: DIndex::Infinite,
            } => vec![
                "x*y + y*x".to_string(),
                format!("x^{} + y^2", 2 * n - 1),
                format!("x^{}", 4 * n - 2),
            ],
        }
    }

    /// Default rewriting degree bound: comfortably above the longest basis
    /// word of the expected quotient.
    pub fn default_degree_bound(&self) -> usize {
        match *self {
            ContractionSpec::A { n } => 2 * n + 4,
            ContractionSpec::D {
                n,
                m: DIndex::Finite(m),
            } => 2 * (2 * n + 2 * m),
            ContractionSpec::D {
                n,
                m: DIndex::Infinite,
            } => 2 * (2 * n + 2 * (2 * n)),
        }
    }
}

impl fmt::Display for ContractionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ContractionSpec::A { n } => write!(f, "A_{n}"),
            ContractionSpec::D { n, m } => write!(f, "D_{{{n},{m}}}"),
        }
    }
}

/// Expected invariants of a contraction algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantRecord {
    pub dim: usize,
    pub centre_dim: usize,
    /// Leading words the completion is expected to add beyond the
    /// generating relations.
    pub gb_added: Vec<String>,
    /// Description of the distinguished nilpotent witness and its index.
    pub nilpotency_witness: (String, usize),
}

pub fn standard_alphabet() -> Vec<String> {
    vec!["x".to_string(), "y".to_string()]
}

/// Parse relation texts over `x, y` into rational noncommutative
/// polynomials.
pub fn parse_relations(texts: &[String]) -> Result<Vec<NCPoly<Rat>>, NcgbError> {
    let alphabet = standard_alphabet();
    texts
        .iter()
        .map(|t| {
            parse_ncpoly(t, &alphabet, None)?
                .specialize(&rat(0))
                .map_err(|_| NcgbError::NonUnitLeadingCoefficient)
        })
        .collect()
}

/// Build the contraction algebra: complete the presentation, verify
/// confluence, and extract structure constants on the normal-word basis.
pub fn build_contraction(
    spec: &ContractionSpec,
) -> Result<(FDAlgebra<Rat>, RewritingSystem<Rat>), NcgbError> {
    let bound = spec.default_degree_bound();
    let relations = parse_relations(&spec.relation_texts())?;
    let order = WeightedDeglexOrder::heavy_last(2, bound);
    let sys = RewritingSystem::new(relations, order, bound, 2)?.complete()?;
    debug_assert!(sys.verify_confluent()?);
    let algebra = quotient_structure_constants(&sys, &standard_alphabet())?;
    Ok((algebra, sys))
}

/// The tabulated invariants. For `m ≤ n`: dim `4n+2m−4`, centre `n+2m−1`,
/// `x`-nilpotency `2n+2m−3`; for `m > n` and `m = ∞`: dim `6n−3`, centre
/// `3n`, `x`-nilpotency `4n−2`. Type A records the presentation-faithful
/// dimension `n−1` (see the discrepancy notes in reports).
pub fn expected_invariants(spec: &ContractionSpec) -> InvariantRecord {
    match *spec {
        ContractionSpec::A { n } => InvariantRecord {
            dim: n - 1,
            centre_dim: n - 1,
            gb_added: Vec::new(),
            nilpotency_witness: ("y".to_string(), n - 1),
        },
        ContractionSpec::D {
            n,
            m: DIndex::Finite(m),
        } => {
            if m <= n {
                InvariantRecord {
                    dim: 4 * n + 2 * m - 4,
                    centre_dim: n + 2 * m - 1,
                    gb_added: vec![format!("x^{}*y", 2 * n - 1)],
                    nilpotency_witness: ("x".to_string(), 2 * n + 2 * m - 3),
                }
            } else {
                InvariantRecord {
                    dim: 6 * n - 3,
                    centre_dim: 3 * n,
                    gb_added: vec![format!("x^{}*y", 2 * n - 1)],
                    nilpotency_witness: ("x".to_string(), 4 * n - 2),
                }
            }
        }
        ContractionSpec::D {
            n,
            m: DIndex::Infinite,
        } => InvariantRecord {
            dim: 6 * n - 3,
            centre_dim: 3 * n,
            gb_added: vec![format!("x^{}*y", 2 * n - 1)],
            nilpotency_witness: ("x".to_string(), 4 * n - 2),
        },
    }
}

/// Check that `D_{n,m}` and `D_{n,∞}` are literally the same algebra for
/// `m ≥ 2n`: identical normal bases and identical structure constants.
pub fn dinfty_coincidence(n: usize, m: usize) -> Result<bool, NcgbError> {
    assert!(m >= 2 * n, "coincidence needs m >= 2n");
    let (finite, _) = build_contraction(&ContractionSpec::d(n, m))?;
    let (infinite, _) = build_contraction(&ContractionSpec::d_infinite(n))?;
    if finite.basis_labels() != infinite.basis_labels() {
        return Ok(false);
    }
    let d = finite.dim();
    for i in 0..d {
        for j in 0..d {
            if finite.product_basis(i, j) != infinite.product_basis(i, j) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The `x` basis element of a contraction algebra built on the normal-word
/// basis; falls back to evaluating the word if labels moved.
pub fn generator_element(a: &FDAlgebra<Rat>, name: &str) -> Vec<Rat> {
    let idx = a
        .basis_labels()
        .iter()
        .position(|l| l == name)
        .unwrap_or_else(|| panic!("generator {name} not a basis label"));
    a.basis_element(idx)
}

/// Words `1, a, a², …` up to the given length, for spanning checks.
pub fn power_words(letter: u8, up_to: usize) -> Vec<Word> {
    (0..=up_to).map(|i| Word::power(letter, i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d22_matches_table() {
        let spec = ContractionSpec::d(2, 2);
        let (a, sys) = build_contraction(&spec).unwrap();
        let expected = expected_invariants(&spec);
        assert_eq!(a.dim(), expected.dim);
        assert_eq!(a.centre().dim(), expected.centre_dim);
        assert_eq!(a.dim(), 8);
        assert_eq!(a.centre().dim(), 5);
        // completion added x³y
        let alphabet = standard_alphabet();
        let leads: Vec<String> = sys
            .rules()
            .iter()
            .map(|r| r.lead.display(&alphabet).to_string())
            .collect();
        assert!(leads.contains(&"x^3*y".to_string()));
        let x = generator_element(&a, "x");
        assert_eq!(a.nilpotency_index(&x), Ok(expected.nilpotency_witness.1));
        assert_eq!(expected.nilpotency_witness.1, 5);
    }

    #[test]
    fn d2inf_dimension() {
        let (a, _) = build_contraction(&ContractionSpec::d_infinite(2)).unwrap();
        assert_eq!(a.dim(), 9);
        assert_eq!(a.centre().dim(), 6);
    }

    #[test]
    fn table_range_two_to_five() {
        for n in 2..=5 {
            for m in 2..=5 {
                let spec = ContractionSpec::d(n, m);
                let (a, _) = build_contraction(&spec).unwrap();
                let expected = expected_invariants(&spec);
                assert_eq!(a.dim(), expected.dim, "{spec} dimension");
                assert_eq!(a.centre().dim(), expected.centre_dim, "{spec} centre");
                let x = generator_element(&a, "x");
                assert_eq!(
                    a.nilpotency_index(&x),
                    Ok(expected.nilpotency_witness.1),
                    "{spec} nilpotency"
                );
            }
        }
    }

    #[test]
    fn degenerate_indices() {
        // D_{1,1}: relations {xy+yx, x+1+y², x} collapse to k[y]/(y²+1)
        let (a, _) = build_contraction(&ContractionSpec::d(1, 1)).unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(crate::wedderburn::radical(&a).dim(), 0);

        // D_{1,∞}: k[y]/(y³) with x = −y²
        let (a, _) = build_contraction(&ContractionSpec::d_infinite(1)).unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(crate::wedderburn::radical(&a).dim(), 2);

        // D_{2,1}
        let spec = ContractionSpec::d(2, 1);
        let (a, _) = build_contraction(&spec).unwrap();
        let exp = expected_invariants(&spec);
        assert_eq!(a.dim(), exp.dim);
        assert_eq!(a.centre().dim(), exp.centre_dim);
    }

    #[test]
    fn type_a_quotients() {
        let (a, _) = build_contraction(&ContractionSpec::a(4)).unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.centre().dim(), 3);
        assert_eq!(a.commutator_subspace().dim(), 0);
    }

    #[test]
    fn dinfty_coincidences_hold() {
        assert!(dinfty_coincidence(2, 4).unwrap());
        assert!(dinfty_coincidence(2, 5).unwrap());
        assert!(dinfty_coincidence(3, 6).unwrap());
    }
}
