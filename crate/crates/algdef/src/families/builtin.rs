use super::{family_from_relations, FamiliesError, PolyFamily};
use crate::contraction::{ContractionSpec, DIndex};
use crate::exactnum::{rat, Field, Rat, RatFunc, UniPoly};
use crate::ncgb::{parse_ncpoly, NCPoly, Word};

const PARAM: &str = "t";

fn xy_alphabet() -> Vec<String> {
    vec!["x".to_string(), "y".to_string()]
}

fn parse_all(
    texts: &[String],
    alphabet: &[String],
) -> Result<Vec<NCPoly<RatFunc>>, FamiliesError> {
    texts
        .iter()
        .map(|t| parse_ncpoly(t, alphabet, Some(PARAM)).map_err(FamiliesError::from))
        .collect()
}

fn build(
    name: &str,
    texts: &[String],
    alphabet: &[String],
    degree_bound: usize,
    excluded: &[i64],
) -> Result<PolyFamily, FamiliesError> {
    let relations = parse_all(texts, alphabet)?;
    family_from_relations(
        name,
        relations,
        alphabet,
        PARAM,
        degree_bound,
        excluded.iter().map(|&p| rat(p)).collect(),
    )
}

/// `k[x]/(x² − t)`: rank 2, splits into two points at every `λ ≠ 0`.
pub fn parabola_family() -> Result<PolyFamily, FamiliesError> {
    build(
        "parabola",
        &["x^2 - t".to_string()],
        &["x".to_string()],
        6,
        &[0],
    )
}

/// Defining relations of the six-dimensional algebra that the `a2` family
/// deforms: `{xy + yx, y², (x²−1)y, (x²−1)x²}`.
pub fn a2_source_relations() -> Vec<String> {
    vec![
        "x*y + y*x".to_string(),
        "y^2".to_string(),
        "(x^2 - 1)*y".to_string(),
        "(x^2 - 1)*x^2".to_string(),
    ]
}

/// Deforms the last relation of [`a2_source_relations`] to
/// `(x²−1)(x²−t)`; for `λ ∉ {0, 1}` the fiber splits into a
/// four-dimensional block and the split quadratic `k[x]/(x²−λ)`.
pub fn a2_family() -> Result<PolyFamily, FamiliesError> {
    let texts = vec![
        "x*y + y*x".to_string(),
        "y^2".to_string(),
        "(x^2 - 1)*y".to_string(),
        "(x^2 - 1)*(x^2 - t)".to_string(),
    ];
    build("a2", &texts, &xy_alphabet(), 12, &[0, 1])
}

/// `{xy + yx, y² − t, x² − 1}`: rank 4 with basis `{1, x, y, xy}`; the
/// fiber at any `λ ≠ 0` is a two-by-two matrix algebra over the closure.
pub fn aprime_family() -> Result<PolyFamily, FamiliesError> {
    let texts = vec![
        "x*y + y*x".to_string(),
        "y^2 - t".to_string(),
        "x^2 - 1".to_string(),
    ];
    build("aprime", &texts, &xy_alphabet(), 10, &[0])
}

/// `{xy + yx, y² − 1, x(x^{2n−2} − t^{2n−2})}` for `n ≥ 2`: free of rank
/// `4n − 2`, with `t = 0` fiber a quadratic twist of the smallest
/// one-parameter contraction of its dimension.
pub fn dn1_family(n: usize) -> Result<PolyFamily, FamiliesError> {
    if n < 2 {
        return Err(FamiliesError::ParameterOutOfRange {
            name: "dn1".to_string(),
            detail: format!("requires n >= 2, got {n}"),
        });
    }
    let texts = vec![
        "x*y + y*x".to_string(),
        "y^2 - 1".to_string(),
        format!("x*(x^{} - t^{})", 2 * n - 2, 2 * n - 2),
    ];
    build(&format!("dn1({n})"), &texts, &xy_alphabet(), 4 * n + 4, &[0])
}

/// `k[y]/(y(y−t)(y+t))`: rank 3, splits into three points at `λ ≠ 0`.
pub fn d1inf_family() -> Result<PolyFamily, FamiliesError> {
    build(
        "d1inf",
        &["y*(y - t)*(y + t)".to_string()],
        &["y".to_string()],
        8,
        &[0],
    )
}

/// Splitting family for the commutative truncated polynomial quotients:
/// `{x, ∏_{i=0}^{n−2}(y − i·t)}` on two generators, rank `n − 1`, whose
/// fiber at `λ ≠ 0` has `n − 1` distinct one-dimensional blocks.
pub fn an_family(n: usize) -> Result<PolyFamily, FamiliesError> {
    if n < 2 {
        return Err(FamiliesError::ParameterOutOfRange {
            name: "an".to_string(),
            detail: format!("requires n >= 2, got {n}"),
        });
    }
    let alphabet = xy_alphabet();
    let t = RatFunc::from_poly(UniPoly::var());
    // ∏_{i=0}^{n-2} (y - i t), built termwise so the root count matches the
    // rank n - 1 of the quotient
    let mut product = NCPoly::from_term(Word::one(), RatFunc::one());
    for i in 0..=(n - 2) {
        let shift = t.mul(&RatFunc::from_rat(&rat(i as i64)));
        let factor = NCPoly::generator(1).sub(&NCPoly::from_term(Word::one(), shift));
        product = product.mul(&factor);
    }
    let relations = vec![NCPoly::generator(0), product];
    family_from_relations(
        &format!("an({n})"),
        relations,
        &alphabet,
        PARAM,
        n + 4,
        vec![rat(0)],
    )
}

/// `{xy + yx, y² + 1, x(x^{2n−2} − t^{2n−2})}`: the sign-flipped companion
/// of [`dn1_family`]. Its matrix blocks come out as quaternion algebras
/// over the rationals but have the same geometric type.
pub fn dn1_family_signed(n: usize, negated: bool) -> Result<PolyFamily, FamiliesError> {
    if negated {
        return dn1_family(n);
    }
    if n < 2 {
        return Err(FamiliesError::ParameterOutOfRange {
            name: "dn1".to_string(),
            detail: format!("requires n >= 2, got {n}"),
        });
    }
    let texts = vec![
        "x*y + y*x".to_string(),
        "y^2 + 1".to_string(),
        format!("x*(x^{} - t^{})", 2 * n - 2, 2 * n - 2),
    ];
    build(
        &format!("dn1({n},+)"),
        &texts,
        &xy_alphabet(),
        4 * n + 4,
        &[0],
    )
}

/// The induction family for the two-parameter contractions, `n ≥ 2` and
/// second index `≥ 2` (or infinite): its `t = 0` fiber is the `(n, m)`
/// contraction and its generic fiber splits into a `(n−1, m−1)` block and a
/// six-dimensional block.
pub fn induction_family(n: usize, m: DIndex) -> Result<PolyFamily, FamiliesError> {
    induction_family_signed(n, m, false)
}

/// Signed variant of [`induction_family`]: with `negated` set, the
/// commutative terms of the `y²` relation are negated. The negated
/// presentations arise as blocks of the plain ones and alternate back at
/// every further splitting step, so both signs are needed to iterate the
/// construction over the rationals.
pub fn induction_family_signed(
    n: usize,
    m: DIndex,
    negated: bool,
) -> Result<PolyFamily, FamiliesError> {
    let ok = match m {
        DIndex::Finite(m) => n >= 2 && m >= 2,
        DIndex::Infinite => n >= 2,
    };
    if !ok {
        return Err(FamiliesError::ParameterOutOfRange {
            name: "induction".to_string(),
            detail: format!("requires n >= 2 and m >= 2 (or infinite), got ({n}, {m})"),
        });
    }
    let s = if negated { "-" } else { "+" };
    let mut texts = vec!["x*y + y*x".to_string()];
    let big_power = match m {
        DIndex::Finite(m) if m <= n => 2 * n + 2 * m - 7,
        _ => 4 * n - 6,
    };
    texts.push(format!("x^{big_power}*(x^2 - t^2)^2"));
    texts.push(format!("x^{}*(x^2 - t^2)*y", 2 * n - 3));
    match m {
        DIndex::Finite(m) => {
            texts.push(format!(
                "y^2 {s} x^{}*(x^2 - t^2) {s} x^{}*(x^2 - t^2)",
                2 * n - 3,
                2 * m - 4
            ));
        }
        DIndex::Infinite => {
            texts.push(format!("y^2 {s} x^{}*(x^2 - t^2)", 2 * n - 3));
        }
    }
    let bound = match m {
        DIndex::Finite(m) => ContractionSpec::d(n, m).default_degree_bound(),
        DIndex::Infinite => ContractionSpec::d_infinite(n).default_degree_bound(),
    };
    let tag = if negated { ",-" } else { "" };
    build(
        &format!("induction({n},{m}{tag})"),
        &texts,
        &xy_alphabet(),
        bound,
        &[0],
    )
}

fn rat_text(r: &Rat) -> String {
    format!("({r})")
}

/// Defining relations of the six-dimensional block supported on the doubled
/// spectral branch `x² = λ²` of an induction fiber: `x` acts with a single
/// doubled eigenvalue pair and `y` squares into the branch nilpotent.
/// `lam` is substituted verbatim; pass the family parameter name to
/// describe the whole curve of blocks at once.
pub fn double_branch_relations(n: usize, m: DIndex, negated: bool, lam: &str) -> Vec<String> {
    let s = if negated { "-" } else { "+" };
    let nu = format!("(x^2 - {lam}^2)");
    let commutative = match m {
        DIndex::Finite(m) => format!("(x^{} + x^{})", 2 * n - 1, 2 * m - 2),
        DIndex::Infinite => format!("x^{}", 2 * n - 1),
    };
    vec![
        "x*y + y*x".to_string(),
        format!("{nu}^2"),
        format!("{nu}*y"),
        format!("y^2 {s} {commutative}*{nu}"),
    ]
}

/// A completion degree bound comfortably above the defining relations of a
/// double-branch block.
pub fn double_branch_degree_bound(n: usize, m: DIndex) -> usize {
    let y2 = match m {
        DIndex::Finite(m) => (2 * n + 1).max(2 * m),
        DIndex::Infinite => 2 * n + 1,
    };
    y2.max(4) + 4
}

/// One-parameter deformation splitting a double-branch block: the special
/// fiber is the symmetric six-dimensional model `{xy + yx, ν², νy,
/// y² − ν/(2λ)}` with `ν = x² − λ²`, and each fiber at `w(t) ≠ 0` is a
/// quaternion algebra times a split quadratic, geometric type `{2:1, 1:2}`.
/// Every double-branch block with both branch values nonzero is isomorphic
/// to the symmetric model via [`double_branch_images`].
pub fn branch_split_family(lambda: &Rat) -> Result<PolyFamily, FamiliesError> {
    if lambda.is_zero() {
        return Err(FamiliesError::ParameterOutOfRange {
            name: "branch_split".to_string(),
            detail: "branch point must be nonzero".to_string(),
        });
    }
    let l2 = lambda.clone() * lambda.clone();
    let ltext = rat_text(&l2);
    let half_inv = rat_text(&(rat(1) / (rat(2) * lambda.clone())));
    // w(0) = 0 and the square-root normalization y ↦ y(1+t) of the loop
    // relations stays rational exactly because w has the double factor
    let w = format!("4*{ltext}*t*(2 + t)*(1 + t)^2");
    let nu = format!("(x^2 - {ltext})");
    let texts = vec![
        "x*y + y*x".to_string(),
        format!("{nu}^2 - ({w})*{nu}"),
        format!("{nu}*y - ({w})*y"),
        format!("y^2 - {half_inv}*{nu}"),
    ];
    let relations = parse_all(&texts, &xy_alphabet())?;
    family_from_relations(
        &format!("branch_split@{lambda}"),
        relations,
        &xy_alphabet(),
        PARAM,
        12,
        vec![rat(0), rat(-1), rat(-2)],
    )
}

/// The branch values `c(λ)` and `c(−λ)` of the commutative coefficient
/// `c = x^{2n−1} + x^{2m−2}` of a double-branch block.
pub fn double_branch_values(n: usize, m: DIndex, lambda: &Rat) -> (Rat, Rat) {
    let pw = |k: usize| -> Rat {
        let mut acc = rat(1);
        for _ in 0..k {
            acc = acc * lambda.clone();
        }
        acc
    };
    let odd = pw(2 * n - 1);
    match m {
        DIndex::Finite(m) => {
            let even = pw(2 * m - 2);
            (odd.clone() + even.clone(), -odd + even)
        }
        DIndex::Infinite => (odd.clone(), -odd),
    }
}

/// Generator images exhibiting the double-branch block of parameters
/// `(n, m, sign, λ)` inside the `t = 0` fiber of [`branch_split_family`]:
/// `y` maps to `y` and `x` maps to `x` plus loop corrections weighted by
/// the reciprocals of the branch values. Defined whenever both branch
/// values are nonzero.
pub fn double_branch_images(
    n: usize,
    m: DIndex,
    negated: bool,
    lambda: &Rat,
) -> Result<Vec<String>, FamiliesError> {
    let (c_plus, c_minus) = double_branch_values(n, m, lambda);
    if c_plus.is_zero() || c_minus.is_zero() {
        return Err(FamiliesError::ParameterOutOfRange {
            name: "double_branch".to_string(),
            detail: format!("branch value vanishes at {lambda}"),
        });
    }
    let sigma = if negated { rat(-1) } else { rat(1) };
    let two_lambda = rat(2) * lambda.clone();
    let p0 = -sigma.clone() / (two_lambda.clone() * c_plus);
    let q0 = -sigma / (two_lambda * c_minus);
    let l2 = lambda.clone() * lambda.clone();
    let ca = (p0.clone() - q0.clone()) / (rat(4) * lambda.clone());
    let cb = (p0 + q0) / (rat(4) * l2.clone());
    let half = rat(1) / (rat(2) * l2.clone());
    let nu = format!("(x^2 - {})", rat_text(&l2));
    let x_image = format!(
        "x - {}*x*{nu} + {}*{nu} + {}*{nu}*x",
        rat_text(&half),
        rat_text(&ca),
        rat_text(&cb)
    );
    Ok(vec![x_image, "y".to_string()])
}

/// Dispatch a builtin family by name. `n` and `m` are consumed by the
/// families that need them.
pub fn builtin_family(
    name: &str,
    n: Option<usize>,
    m: Option<DIndex>,
) -> Result<PolyFamily, FamiliesError> {
    let need_n = |n: Option<usize>| {
        n.ok_or_else(|| FamiliesError::ParameterOutOfRange {
            name: name.to_string(),
            detail: "missing index n".to_string(),
        })
    };
    match name {
        "parabola" => parabola_family(),
        "a2" => a2_family(),
        "aprime" => aprime_family(),
        "dn1" => dn1_family(need_n(n)?),
        "d1inf" => d1inf_family(),
        "an" => an_family(need_n(n)?),
        "induction" => {
            let m = m.ok_or_else(|| FamiliesError::ParameterOutOfRange {
                name: name.to_string(),
                detail: "missing index m".to_string(),
            })?;
            induction_family(need_n(n)?, m)
        }
        other => Err(FamiliesError::UnknownFamily(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::super::{fiber_blocks, verify_family};
    use super::*;
    use crate::wedderburn::{geometric_type, radical, GeometricType};

    fn combined_type_of_fiber(
        fiber: &crate::algstruct::FDAlgebra<Rat>,
    ) -> Option<GeometricType> {
        let blocks = fiber_blocks(fiber).unwrap();
        let mut ty = GeometricType::default();
        for b in &blocks {
            if radical(&b.algebra).dim() != 0 {
                return None;
            }
            ty = ty.combine(&geometric_type(&b.algebra).unwrap());
        }
        Some(ty)
    }

    fn quat_plus_quadratic() -> GeometricType {
        GeometricType::from_pairs(&[(2, 1), (1, 2)])
    }

    fn completed_block_system(
        n: usize,
        m: DIndex,
        negated: bool,
        lambda: &Rat,
    ) -> crate::ncgb::RewritingSystem<Rat> {
        use crate::ncgb::{RewritingSystem, WeightedDeglexOrder};
        let texts = double_branch_relations(n, m, negated, &format!("({lambda})"));
        let rels: Vec<_> = parse_all(&texts, &xy_alphabet())
            .unwrap()
            .into_iter()
            .map(|p| p.specialize(&rat(0)).unwrap())
            .collect();
        let bound = double_branch_degree_bound(n, m);
        let order = WeightedDeglexOrder::heavy_last(2, bound);
        RewritingSystem::new(rels, order, bound, 2)
            .unwrap()
            .complete()
            .unwrap()
    }

    #[test]
    fn branch_split_family_splits_into_matrix_block_and_quadratic() {
        let lambda = rat(2);
        let f = branch_split_family(&lambda).unwrap();
        assert!(verify_family(&f));
        assert_eq!(f.dim(), 6);
        for s in [rat(1), rat(3)] {
            let fiber = f.fiber(&s);
            assert_eq!(combined_type_of_fiber(&fiber), Some(quat_plus_quadratic()));
        }
        // at t = 0 the branch is still doubled: not semisimple
        assert!(combined_type_of_fiber(&f.fiber(&rat(0))).is_none());
    }

    #[test]
    fn branch_split_edge_certifies_every_double_branch_block() {
        use crate::families::certificate::{certify_edge, BlockClaim};
        let lambda = rat(2);
        let f = branch_split_family(&lambda).unwrap();
        let cases = [
            (1, DIndex::Finite(1)),
            (2, DIndex::Finite(1)),
            (2, DIndex::Finite(2)),
            (1, DIndex::Infinite),
            (2, DIndex::Infinite),
        ];
        for (n, m) in cases {
            for negated in [false, true] {
                let sys = completed_block_system(n, m, negated, &lambda);
                assert_eq!(sys.normal_monomials().unwrap().len(), 6);
                let images = double_branch_images(n, m, negated, &lambda).unwrap();
                let edge = certify_edge(
                    &format!("block({n},{m})"),
                    &sys,
                    &f,
                    Some(images),
                    vec![BlockClaim::Semisimple {
                        expected: quat_plus_quadratic(),
                    }],
                    Some(vec![rat(1), rat(2)]),
                )
                .unwrap_or_else(|e| panic!("({n},{m:?}) negated={negated}: {e:?}"));
                assert_eq!(edge.evidence.len(), 2);
            }
        }
    }

    #[test]
    fn branch_images_fail_exactly_when_a_branch_value_vanishes() {
        // at λ = 1 one branch value of every finite block vanishes and the
        // block degenerates; the images must refuse that point
        assert!(double_branch_images(1, DIndex::Finite(1), false, &rat(1)).is_err());
        assert!(double_branch_images(1, DIndex::Infinite, false, &rat(1)).is_ok());
    }

    #[test]
    fn signed_induction_family_matches_negated_contraction_relations() {
        let f = induction_family_signed(2, DIndex::Finite(2), true).unwrap();
        assert!(verify_family(&f));
        assert_eq!(f.dim(), 8);
        // the negated fiber still splits into a six-dimensional double
        // branch block plus the rest
        let fiber = f.fiber(&rat(2));
        let blocks = fiber_blocks(&fiber).unwrap();
        let mut dims: Vec<usize> = blocks.iter().map(|b| b.algebra.dim()).collect();
        dims.sort();
        assert_eq!(dims.last(), Some(&6));
    }

    #[test]
    fn signed_dn1_family_reaches_the_same_geometric_type() {
        for negated in [false, true] {
            let f = dn1_family_signed(2, negated).unwrap();
            assert!(verify_family(&f));
            let fiber = f.fiber(&rat(1));
            assert_eq!(
                combined_type_of_fiber(&fiber),
                Some(quat_plus_quadratic()),
                "negated={negated}"
            );
        }
    }
}
