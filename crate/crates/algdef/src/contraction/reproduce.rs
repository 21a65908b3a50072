use super::{
    build_contraction, expected_invariants, obstruction_solver, semisimple_target,
    standard_alphabet, ContractionSpec, DIndex, InvariantRecord,
};
use crate::exactnum::{rat, Rat};
use crate::families::{
    an_family, branch_split_family, certify_edge, compose_step, d1inf_family, dn1_family_signed,
    double_branch_degree_bound, double_branch_images, double_branch_relations, BlockClaim,
    Certificate, FamiliesError, ImageExpr, induction_family_signed,
};
use crate::ncgb::{parse_ncpoly, quotient_structure_constants, NCPoly, RewritingSystem, WeightedDeglexOrder};
use crate::wedderburn::GeometricType;

/// Outcome of one stage of [`reproduce`].
#[derive(Clone, Debug)]
pub struct StageResult {
    pub stage: String,
    pub passed: bool,
    pub detail: String,
}

/// Invariants actually computed from the constructed algebra.
#[derive(Clone, Debug)]
pub struct ComputedInvariants {
    pub dim: usize,
    pub centre_dim: usize,
    pub nilpotency: Option<usize>,
    pub gb_added_present: bool,
}

/// Full record of the two-sided argument for one contraction algebra: the
/// arithmetic side pins down the only possible semisimple limit, and the
/// certificate side exhibits a verified chain of deformations reaching it.
#[derive(Clone, Debug)]
pub struct Report {
    pub spec: ContractionSpec,
    pub stages: Vec<StageResult>,
    pub expected: InvariantRecord,
    pub computed: Option<ComputedInvariants>,
    pub obstruction_pairs: Vec<(usize, usize)>,
    pub unique: bool,
    pub target: GeometricType,
    pub certificate: Option<Certificate>,
    pub certificate_matches: bool,
    pub discrepancy_notes: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.stages.iter().all(|s| s.passed)
    }
}

/// Recorded discrepancies between the tabulated source values and what the
/// presentations actually produce. These are reported, not silently fixed.
pub fn discrepancy_notes(spec: &ContractionSpec) -> Vec<String> {
    let mut notes = vec![
        "type A table row lists dimension n and centre n, but the presentation \
         k<x,y>/(x, y^(n-1)) has dimension n-1; the presentation-faithful values \
         (dim n-1, target {1:n-1}) are reported"
            .to_string(),
        "the derivation text writes the exponent 2m-1 in the y^2 basis element \
         where the defining relation has 2m-2; the 2m-2 value reproduces the \
         tabulated dimensions and is used throughout"
            .to_string(),
    ];
    if let ContractionSpec::D { .. } = spec {
        notes.push(
            "the six-dimensional factor of each induction fiber is claimed to be \
             the rigid algebra with square-zero radical, but its radical square is \
             nonzero at every sample point; the factor is certified through its own \
             branch-splitting deformation instead"
                .to_string(),
        );
        notes.push(
            "each induction factor of smaller index is a quadratic twist of the \
             smaller contraction (the sign of the commutative part of the y^2 \
             relation alternates); both signs are certified and share all invariants"
                .to_string(),
        );
    }
    notes
}

/// Relation texts of the sign-twisted contraction `D^τ_{n,m}`: the
/// commutative part of the `y²` relation is negated when `negated` holds.
pub fn twisted_relation_texts(n: usize, m: DIndex, negated: bool) -> Vec<String> {
    let base = match m {
        DIndex::Finite(m) => ContractionSpec::d(n, m),
        DIndex::Infinite => ContractionSpec::d_infinite(n),
    }
    .relation_texts();
    if !negated {
        return base;
    }
    let mut texts = base;
    texts[1] = match m {
        DIndex::Finite(m) => format!("y^2 - x^{} - x^{}", 2 * n - 1, 2 * m - 2),
        DIndex::Infinite => format!("y^2 - x^{}", 2 * n - 1),
    };
    texts
}

fn spec_of(n: usize, m: DIndex) -> ContractionSpec {
    match m {
        DIndex::Finite(m) => ContractionSpec::d(n, m),
        DIndex::Infinite => ContractionSpec::d_infinite(n),
    }
}

fn dname(n: usize, m: DIndex, negated: bool) -> String {
    let sign = if negated { "-" } else { "+" };
    format!("D({n},{m},{sign})")
}

fn bname(n: usize, m: DIndex, negated: bool) -> String {
    let sign = if negated { "-" } else { "+" };
    format!("B({n},{m},{sign})")
}

fn completed_system(
    texts: &[String],
    bound: usize,
) -> Result<RewritingSystem<Rat>, FamiliesError> {
    let alphabet = standard_alphabet();
    let rels: Result<Vec<NCPoly<Rat>>, FamiliesError> = texts
        .iter()
        .map(|t| {
            let p = parse_ncpoly(t, &alphabet, Some("t"))?;
            p.specialize(&rat(0)).map_err(|c| FamiliesError::EvidenceFailed {
                item: format!("relation `{t}` has a pole at 0: {c:?}"),
            })
        })
        .collect();
    let order = WeightedDeglexOrder::heavy_last(2, bound);
    Ok(RewritingSystem::new(rels?, order, bound, 2)?.complete()?)
}

fn twisted_system(
    n: usize,
    m: DIndex,
    negated: bool,
) -> Result<RewritingSystem<Rat>, FamiliesError> {
    completed_system(
        &twisted_relation_texts(n, m, negated),
        spec_of(n, m).default_degree_bound(),
    )
}

fn binomial_half(k: usize) -> Rat {
    // (1/2 choose k) = (1/2)(1/2 - 1)···(1/2 - k + 1) / k!
    let mut num = rat(1);
    let half = rat(1) / rat(2);
    for i in 0..k {
        num = num * (half.clone() - rat(i as i64));
    }
    let mut fact = rat(1);
    for i in 1..=k {
        fact = fact * rat(i as i64);
    }
    num / fact
}

/// Generator images identifying the smaller-index factor of an induction
/// fiber with the twisted contraction: `x ↦ x` and `y ↦ y · s(x,t)⁻¹` with
/// `s = t·√(1 − x²/t²)` truncated against the nilpotency of `x`, so that
/// `y'² = y²/(t² − x²)`. Written as `y·t^{2R−1}` divided by the truncated
/// binomial series `W = Σ_k (1/2 choose k)(−1)^k x^{2k} t^{2(R−k)}`.
pub fn sqrt_normalization_images(x_nilpotency: usize) -> Vec<ImageExpr> {
    let r = (x_nilpotency - 1) / 2;
    if r == 0 {
        return vec![ImageExpr::plain("x"), ImageExpr::with_inverse("y", "t")];
    }
    let mut terms = Vec::new();
    for k in 0..=r {
        let mut c = binomial_half(k);
        if k % 2 == 1 {
            c = -c;
        }
        terms.push(format!("({c})*x^{}*t^{}", 2 * k, 2 * (r - k)));
    }
    let w = terms.join(" + ");
    vec![
        ImageExpr::plain("x"),
        ImageExpr::with_inverse(&format!("y*t^{}", 2 * r - 1), &w),
    ]
}

/// Certificate for one double-branch block at a fixed branch point: the
/// block presentation embeds into the symmetric branch-split model, whose
/// deformation reaches a matrix block plus a split quadratic.
fn branch_block_certificate(
    n: usize,
    m: DIndex,
    negated: bool,
    lambda: &Rat,
) -> Result<Certificate, FamiliesError> {
    let name = format!("{}@{lambda}", bname(n, m, negated));
    let source = completed_system(
        &double_branch_relations(n, m, negated, &format!("({lambda})")),
        double_branch_degree_bound(n, m),
    )?;
    let family = branch_split_family(lambda)?;
    let images = double_branch_images(n, m, negated, lambda)?;
    let edge = certify_edge(
        &name,
        &source,
        &family,
        Some(images),
        vec![BlockClaim::Semisimple {
            expected: GeometricType::from_pairs(&[(2, 1), (1, 2)]),
        }],
        Some(vec![rat(1), rat(2)]),
    )?;
    compose_step(edge, Vec::new())
}

/// Certificate chain for the (possibly sign-twisted) type-D contraction,
/// following the index-decrementing induction down to the one-parameter
/// base cases.
pub fn d_certificate(
    n: usize,
    m: DIndex,
    negated: bool,
) -> Result<Certificate, FamiliesError> {
    // base cases first
    if n == 1 {
        if m == DIndex::Finite(1) {
            let sys = twisted_system(1, m, negated)?;
            let algebra = quotient_structure_constants(&sys, &standard_alphabet())?;
            return Certificate::terminal(&dname(1, m, negated), &algebra);
        }
        // D_{1,m} for m >= 2 (and m = ∞) is k[y]/(y³) with x = -τ·y²
        let sys = twisted_system(1, m, negated)?;
        let bridge = if negated { "y^2" } else { "-y^2" };
        let edge = certify_edge(
            &dname(1, m, negated),
            &sys,
            &d1inf_family()?,
            Some(vec![bridge.to_string(), "y".to_string()]),
            vec![BlockClaim::Semisimple {
                expected: GeometricType::from_pairs(&[(1, 3)]),
            }],
            Some(vec![rat(1), rat(2)]),
        )?;
        return compose_step(edge, Vec::new());
    }
    if m == DIndex::Finite(1) {
        let sys = twisted_system(n, m, negated)?;
        let edge = certify_edge(
            &dname(n, m, negated),
            &sys,
            &dn1_family_signed(n, negated)?,
            None,
            vec![BlockClaim::Semisimple {
                expected: GeometricType::from_pairs(&[(2, n - 1), (1, 2)]),
            }],
            Some(vec![rat(1), rat(2)]),
        )?;
        return compose_step(edge, Vec::new());
    }

    // induction step: peel off one double-branch block and decrement both
    // indices, flipping the twist
    let (nn, mm) = (n - 1, decrement(m));
    let samples = vec![rat(2), rat(3)];
    let d_claim = if nn == 1 && mm == DIndex::Finite(1) {
        BlockClaim::Semisimple {
            expected: GeometricType::from_pairs(&[(1, 2)]),
        }
    } else {
        let sub = spec_of(nn, mm);
        BlockClaim::Presented {
            name: dname(nn, mm, !negated),
            relations: twisted_relation_texts(nn, mm, !negated),
            alphabet: standard_alphabet(),
            degree_bound: sub.default_degree_bound(),
            images: sqrt_normalization_images(expected_invariants(&sub).nilpotency_witness.1),
        }
    };
    let b_claim = BlockClaim::Presented {
        name: bname(nn, mm, negated),
        relations: double_branch_relations(nn, mm, negated, "t"),
        alphabet: standard_alphabet(),
        degree_bound: double_branch_degree_bound(nn, mm),
        images: vec![ImageExpr::plain("x"), ImageExpr::plain("y")],
    };
    let family = induction_family_signed(n, m, negated)?;
    let source = twisted_system(n, m, negated)?;
    let edge = certify_edge(
        &dname(n, m, negated),
        &source,
        &family,
        None,
        vec![d_claim.clone(), b_claim],
        Some(samples.clone()),
    )?;

    let mut children = Vec::new();
    if matches!(d_claim, BlockClaim::Presented { .. }) {
        children.push(d_certificate(nn, mm, !negated)?);
    }
    for lambda in &samples {
        children.push(branch_block_certificate(nn, mm, negated, lambda)?);
    }
    compose_step(edge, children)
}

fn decrement(m: DIndex) -> DIndex {
    match m {
        DIndex::Finite(m) => DIndex::Finite(m - 1),
        DIndex::Infinite => DIndex::Infinite,
    }
}

/// Certificate for the type-A quotient `k[y]/(y^{n−1})` via the splitting
/// family with `n − 1` distinct linear factors.
pub fn a_certificate(n: usize) -> Result<Certificate, FamiliesError> {
    let spec = ContractionSpec::a(n);
    let sys = completed_system(&spec.relation_texts(), spec.default_degree_bound())?;
    let edge = certify_edge(
        &format!("A({n})"),
        &sys,
        &an_family(n)?,
        None,
        vec![BlockClaim::Semisimple {
            expected: GeometricType::from_pairs(&[(1, n - 1)]),
        }],
        Some(vec![rat(1), rat(2)]),
    )?;
    compose_step(edge, Vec::new())
}

fn certificate_for(spec: &ContractionSpec) -> Result<Certificate, FamiliesError> {
    match *spec {
        ContractionSpec::A { n } => a_certificate(n),
        ContractionSpec::D { n, m } => d_certificate(n, m, false),
    }
}

/// Run the full two-sided argument for one contraction algebra and collect
/// every stage verdict into a [`Report`].
pub fn reproduce(spec: &ContractionSpec) -> Report {
    let expected = expected_invariants(spec);
    let target = semisimple_target(spec);
    let mut stages = Vec::new();
    let mut computed = None;

    // stage 1: construction and confluence
    let built = build_contraction(spec);
    match &built {
        Ok((algebra, sys)) => {
            let confluent = sys.verify_confluent().unwrap_or(false);
            stages.push(StageResult {
                stage: "construction".to_string(),
                passed: confluent,
                detail: format!(
                    "completed to {} rules, confluent: {confluent}, dim {}",
                    sys.rules().len(),
                    algebra.dim()
                ),
            });
        }
        Err(e) => stages.push(StageResult {
            stage: "construction".to_string(),
            passed: false,
            detail: format!("{e:?}"),
        }),
    }

    // stage 2: computed vs expected invariants
    if let Ok((algebra, sys)) = &built {
        let dim = algebra.dim();
        let centre_dim = algebra.centre().dim();
        let witness = super::generator_element(algebra, &expected.nilpotency_witness.0);
        let nilpotency = algebra.nilpotency_index(&witness).ok();
        let alphabet = standard_alphabet();
        let leads: Vec<String> = sys
            .rules()
            .iter()
            .map(|r| r.lead.display(&alphabet).to_string())
            .collect();
        let check_gb = match *spec {
            ContractionSpec::D { n, m } => {
                n >= 2 && !matches!(m, DIndex::Finite(m) if m < 2)
            }
            _ => false,
        };
        let gb_added_present =
            !check_gb || expected.gb_added.iter().all(|w| leads.contains(w));
        let passed = dim == expected.dim
            && centre_dim == expected.centre_dim
            && nilpotency == Some(expected.nilpotency_witness.1)
            && gb_added_present;
        stages.push(StageResult {
            stage: "invariants".to_string(),
            passed,
            detail: format!(
                "dim {dim}/{}, centre {centre_dim}/{}, nilpotency {nilpotency:?}/{}",
                expected.dim, expected.centre_dim, expected.nilpotency_witness.1
            ),
        });
        computed = Some(ComputedInvariants {
            dim,
            centre_dim,
            nilpotency,
            gb_added_present,
        });
    }

    // stage 3: obstruction arithmetic pins down a unique target
    let pairs = obstruction_solver(
        expected.dim,
        expected.centre_dim,
        expected.nilpotency_witness.1,
    );
    let unique = pairs.len() == 1 && {
        let (k, l) = pairs[0];
        GeometricType::from_pairs(&[(2, k), (1, l)]) == target
    };
    stages.push(StageResult {
        stage: "obstruction".to_string(),
        passed: unique,
        detail: format!("admissible targets {pairs:?}, expected {target}"),
    });

    // stage 4: existence certificate
    let certificate = match certificate_for(spec) {
        Ok(cert) => Some(cert),
        Err(e) => {
            stages.push(StageResult {
                stage: "certificate".to_string(),
                passed: false,
                detail: format!("{e:?}"),
            });
            None
        }
    };
    let certificate_matches = certificate
        .as_ref()
        .map(|c| c.target == target)
        .unwrap_or(false);
    if let Some(cert) = &certificate {
        stages.push(StageResult {
            stage: "certificate".to_string(),
            passed: certificate_matches,
            detail: format!(
                "chain of {} edges reaches {}, expected {target}",
                cert.edges.len(),
                cert.target
            ),
        });
    }

    Report {
        spec: *spec,
        stages,
        expected,
        computed,
        obstruction_pairs: pairs,
        unique,
        target,
        certificate,
        certificate_matches,
        discrepancy_notes: discrepancy_notes(spec),
    }
}
