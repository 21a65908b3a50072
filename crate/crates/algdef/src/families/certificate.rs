use super::{fiber_blocks, FamiliesError, FiberBlock, PolyFamily};
use crate::algstruct::{evaluate_ncpoly, verify_algebra_map, FDAlgebra, GeneratorImageMap, MapVerdict};
use crate::exactnum::{rat, Rat};
use crate::ncgb::{parse_ncpoly, NCPoly, RewritingSystem, WeightedDeglexOrder};
use crate::wedderburn::{geometric_type, radical, GeometricType};
use num::Zero;

/// A generator image inside a fiber block, written over the family's
/// alphabet and parameter: the expression `numerator · inverse_factor⁻¹`,
/// with the inverse computed inside the block.
#[derive(Clone, Debug)]
pub struct ImageExpr {
    pub numerator: String,
    pub inverse_factor: Option<String>,
}

impl ImageExpr {
    pub fn plain(numerator: &str) -> ImageExpr {
        ImageExpr {
            numerator: numerator.to_string(),
            inverse_factor: None,
        }
    }

    pub fn with_inverse(numerator: &str, inverse_factor: &str) -> ImageExpr {
        ImageExpr {
            numerator: numerator.to_string(),
            inverse_factor: Some(inverse_factor.to_string()),
        }
    }
}

/// What a sample fiber's block is claimed to be: either semisimple of a
/// stated geometric type, or isomorphic to a named presented algebra via
/// explicit generator images.
///
/// The relations of a `Presented` claim may mention the family parameter;
/// they are specialized at each sample point before completion, so one
/// claim can describe a whole curve of presented algebras.
#[derive(Clone, Debug)]
pub enum BlockClaim {
    Semisimple { expected: GeometricType },
    Presented {
        name: String,
        relations: Vec<String>,
        alphabet: Vec<String>,
        degree_bound: usize,
        images: Vec<ImageExpr>,
    },
}

impl BlockClaim {
    /// Whether any claimed relation mentions the given parameter name as a
    /// standalone identifier, i.e. the claim varies with the sample point.
    pub fn depends_on_parameter(&self, parameter: &str) -> bool {
        match self {
            BlockClaim::Semisimple { .. } => false,
            BlockClaim::Presented { relations, .. } => relations.iter().any(|r| {
                r.split(|c: char| !(c.is_alphanumeric() || c == '_'))
                    .any(|tok| tok == parameter)
            }),
        }
    }
}

/// Verified record for one sample point: the block dimensions in the order
/// they were matched to the claims.
#[derive(Clone, Debug)]
pub struct EdgeEvidence {
    pub lambda: Rat,
    pub block_dims: Vec<usize>,
}

/// One verified deformation step: the `t = 0` fiber of `family` is
/// isomorphic to the source, and every sample fiber decomposes into blocks
/// matching the claims.
#[derive(Clone, Debug)]
pub struct CertEdge {
    pub source_name: String,
    pub source_system: RewritingSystem<Rat>,
    pub family: PolyFamily,
    /// Images of the source generators in the `t = 0` fiber, written over
    /// the family's alphabet; `None` means the identity on generators.
    pub source_images: Option<Vec<String>>,
    pub sample_points: Vec<Rat>,
    pub claims: Vec<BlockClaim>,
    pub evidence: Vec<EdgeEvidence>,
}

/// A composed chain of verified edges: the first source deforms to the
/// stated semisimple geometric type.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub source_name: String,
    pub edges: Vec<CertEdge>,
    pub target: GeometricType,
    pub notes: Vec<String>,
}

impl Certificate {
    /// Certificate for an algebra that is already semisimple: the empty
    /// chain with the algebra's own geometric type as target.
    pub fn terminal(name: &str, a: &FDAlgebra<Rat>) -> Result<Certificate, FamiliesError> {
        if radical(a).dim() != 0 {
            return Err(FamiliesError::EvidenceFailed {
                item: format!("terminal certificate for `{name}`: algebra is not semisimple"),
            });
        }
        let target = geometric_type(a)?;
        Ok(Certificate {
            source_name: name.to_string(),
            edges: Vec::new(),
            target,
            notes: vec![format!("`{name}` is semisimple; no deformation needed")],
        })
    }
}

/// Coordinates of each family generator in the fiber at `lambda`, read off
/// from the normal form of the generator word.
fn generator_images_in_fiber(
    family: &PolyFamily,
    lambda: &Rat,
) -> Result<Vec<Vec<Rat>>, FamiliesError> {
    let sys = family
        .provenance()
        .ok_or_else(|| FamiliesError::EvidenceFailed {
            item: format!(
                "family `{}` has no rewriting-system provenance",
                family.name()
            ),
        })?;
    let basis = sys.normal_monomials()?;
    let mut out = Vec::new();
    for g in 0..family.alphabet().len() {
        let nf = sys.normal_form(&NCPoly::generator(g as u8))?;
        let spec = nf
            .specialize(lambda)
            .map_err(|c| FamiliesError::EvidenceFailed {
                item: format!("generator normal form has a pole at {lambda}: {c:?}"),
            })?;
        let mut coords = vec![Rat::zero(); basis.len()];
        for (w, c) in spec.terms() {
            let idx = basis
                .iter()
                .position(|b| b == w)
                .expect("normal form expands over the normal monomials");
            coords[idx] = c.clone();
        }
        out.push(coords);
    }
    Ok(out)
}

/// A completed rewriting system over the rationals for a claimed
/// presentation, with any occurrence of the family parameter in the
/// relations evaluated at the given sample point.
fn claimed_system(
    relations: &[String],
    alphabet: &[String],
    degree_bound: usize,
    parameter: &str,
    lambda: &Rat,
) -> Result<RewritingSystem<Rat>, FamiliesError> {
    let rels: Result<Vec<NCPoly<Rat>>, FamiliesError> = relations
        .iter()
        .map(|r| {
            let p = parse_ncpoly(r, alphabet, Some(parameter))?;
            p.specialize(lambda).map_err(|c| {
                FamiliesError::EvidenceFailed {
                    item: format!("claimed relation `{r}` has a pole at {lambda}: {c:?}"),
                }
            })
        })
        .collect();
    let order = WeightedDeglexOrder::heavy_last(alphabet.len(), degree_bound);
    let sys = RewritingSystem::new(rels?, order, degree_bound, alphabet.len())?.complete()?;
    Ok(sys)
}

/// Check one presented claim against one block of a sample fiber.
fn presented_claim_holds(
    claim: &BlockClaim,
    prepared: Option<&RewritingSystem<Rat>>,
    fiber: &FDAlgebra<Rat>,
    fiber_gens: &[Vec<Rat>],
    block: &FiberBlock,
    lambda: &Rat,
    family: &PolyFamily,
) -> Result<bool, FamiliesError> {
    match claim {
        BlockClaim::Semisimple { .. } => unreachable!("only presented claims are matched blockwise"),
        BlockClaim::Presented { images, .. } => {
            let sys = prepared.expect("presented claims carry a completed system");
            // the family's generators, cut down to this block
            let block_gens: Vec<Vec<Rat>> = fiber_gens
                .iter()
                .map(|g| block.project(fiber, g))
                .collect();
            let mut image_elems = Vec::new();
            for expr in images {
                let p = parse_ncpoly(&expr.numerator, family.alphabet(), Some(family.parameter()))?;
                let p = p.specialize(lambda).map_err(|c| FamiliesError::EvidenceFailed {
                    item: format!("image `{}` has a pole at {lambda}: {c:?}", expr.numerator),
                })?;
                let mut img = evaluate_ncpoly(&block.algebra, &p, &block_gens);
                if let Some(div) = &expr.inverse_factor {
                    let q = parse_ncpoly(div, family.alphabet(), Some(family.parameter()))?;
                    let q = q.specialize(lambda).map_err(|c| FamiliesError::EvidenceFailed {
                        item: format!("divisor `{div}` has a pole at {lambda}: {c:?}"),
                    })?;
                    let v = evaluate_ncpoly(&block.algebra, &q, &block_gens);
                    let inv = match block.algebra.left_mult(&v).solve(block.algebra.unit()) {
                        Some(inv) => inv,
                        None => return Ok(false),
                    };
                    img = block.algebra.mul(&img, &inv);
                }
                image_elems.push(img);
            }
            let map = GeneratorImageMap {
                source: sys.clone(),
                target: block.algebra.clone(),
                images: image_elems,
            };
            Ok(verify_algebra_map(&map)? == MapVerdict::Isomorphism)
        }
    }
}

/// Match the presented claims (those carrying a prepared system) to blocks
/// injectively by backtracking; the semisimple claims act as an aggregate
/// over all remaining blocks.
#[allow(clippy::too_many_arguments)]
fn match_presented(
    presented: &[usize],
    claims: &[BlockClaim],
    prepared: &[Option<RewritingSystem<Rat>>],
    fiber: &FDAlgebra<Rat>,
    fiber_gens: &[Vec<Rat>],
    blocks: &[FiberBlock],
    lambda: &Rat,
    family: &PolyFamily,
    rest_expected: Option<&GeometricType>,
    used: &mut Vec<bool>,
    assignment: &mut Vec<usize>,
) -> Result<bool, FamiliesError> {
    let k = assignment.len();
    if k == presented.len() {
        // aggregate check for the unmatched blocks
        let mut rest = GeometricType::default();
        for (b, block) in blocks.iter().enumerate() {
            if used[b] {
                continue;
            }
            if radical(&block.algebra).dim() != 0 {
                return Ok(false);
            }
            rest = rest.combine(&geometric_type(&block.algebra)?);
        }
        return Ok(match rest_expected {
            Some(expected) => rest == *expected,
            None => used.iter().all(|u| *u),
        });
    }
    let ci = presented[k];
    for (b, block) in blocks.iter().enumerate() {
        if used[b] {
            continue;
        }
        if presented_claim_holds(
            &claims[ci],
            prepared[ci].as_ref(),
            fiber,
            fiber_gens,
            block,
            lambda,
            family,
        )? {
            used[b] = true;
            assignment.push(b);
            if match_presented(
                presented,
                claims,
                prepared,
                fiber,
                fiber_gens,
                blocks,
                lambda,
                family,
                rest_expected,
                used,
                assignment,
            )? {
                return Ok(true);
            }
            assignment.pop();
            used[b] = false;
        }
    }
    Ok(false)
}

/// Verify one deformation edge from scratch and package the evidence.
///
/// Checks, in order: at least two distinct nonzero sample points outside
/// the family's excluded set; the `t = 0` fiber is isomorphic to the source
/// presentation, via the identity on generators or via the explicit
/// `source_images` (expressions over the family alphabet, evaluated at
/// `t = 0`); and for each sample point the fiber decomposes into blocks
/// matched one-to-one with the claims.
pub fn certify_edge(
    source_name: &str,
    source_system: &RewritingSystem<Rat>,
    family: &PolyFamily,
    source_images: Option<Vec<String>>,
    claims: Vec<BlockClaim>,
    sample_points: Option<Vec<Rat>>,
) -> Result<CertEdge, FamiliesError> {
    let samples = sample_points.unwrap_or_else(|| family.default_sample_points(2));
    if samples.len() < 2 {
        return Err(FamiliesError::EvidenceFailed {
            item: "fewer than two sample points".to_string(),
        });
    }
    for (i, s) in samples.iter().enumerate() {
        if s.is_zero() || family.excluded_points().contains(s) || samples[..i].contains(s) {
            return Err(FamiliesError::BadSamplePoint(s.clone()));
        }
    }

    // the special fiber is the claimed source
    let zero = rat(0);
    let fiber0 = family.fiber(&zero);
    let images0 = generator_images_in_fiber(family, &zero)?;
    let source_in_fiber0 = match &source_images {
        None => images0,
        Some(exprs) => {
            let mut out = Vec::new();
            for expr in exprs {
                let p = parse_ncpoly(expr, family.alphabet(), Some(family.parameter()))?;
                let p = p.specialize(&zero).map_err(|c| FamiliesError::EvidenceFailed {
                    item: format!("source image `{expr}` has a pole at 0: {c:?}"),
                })?;
                out.push(evaluate_ncpoly(&fiber0, &p, &images0));
            }
            out
        }
    };
    let ident = GeneratorImageMap {
        source: source_system.clone(),
        target: fiber0,
        images: source_in_fiber0,
    };
    if verify_algebra_map(&ident)? != MapVerdict::Isomorphism {
        return Err(FamiliesError::EvidenceFailed {
            item: format!(
                "t=0 fiber of `{}` is not isomorphic to source `{source_name}`",
                family.name()
            ),
        });
    }

    let prepare = |lambda: &Rat| -> Result<Vec<Option<RewritingSystem<Rat>>>, FamiliesError> {
        claims
            .iter()
            .map(|c| match c {
                BlockClaim::Presented {
                    relations,
                    alphabet,
                    degree_bound,
                    ..
                } => claimed_system(
                    relations,
                    alphabet,
                    *degree_bound,
                    family.parameter(),
                    lambda,
                )
                .map(Some),
                BlockClaim::Semisimple { .. } => Ok(None),
            })
            .collect()
    };

    let presented: Vec<usize> = claims
        .iter()
        .enumerate()
        .filter(|(_, c)| matches!(c, BlockClaim::Presented { .. }))
        .map(|(i, _)| i)
        .collect();
    let rest_expected = claims.iter().fold(None, |acc: Option<GeometricType>, c| {
        if let BlockClaim::Semisimple { expected } = c {
            Some(match acc {
                Some(t) => t.combine(expected),
                None => expected.clone(),
            })
        } else {
            acc
        }
    });

    let mut evidence = Vec::new();
    for lambda in &samples {
        let prepared = prepare(lambda)?;
        let fiber = family.fiber(lambda);
        let fiber_gens = generator_images_in_fiber(family, lambda)?;
        let blocks = fiber_blocks(&fiber)?;
        let mut used = vec![false; blocks.len()];
        let mut assignment = Vec::new();
        if !match_presented(
            &presented,
            &claims,
            &prepared,
            &fiber,
            &fiber_gens,
            &blocks,
            lambda,
            family,
            rest_expected.as_ref(),
            &mut used,
            &mut assignment,
        )? {
            return Err(FamiliesError::EvidenceFailed {
                item: format!(
                    "fiber of `{}` at {lambda} does not match the block claims",
                    family.name()
                ),
            });
        }
        let mut block_dims: Vec<usize> =
            assignment.iter().map(|&b| blocks[b].algebra.dim()).collect();
        for (b, block) in blocks.iter().enumerate() {
            if !used[b] {
                block_dims.push(block.algebra.dim());
            }
        }
        evidence.push(EdgeEvidence {
            lambda: lambda.clone(),
            block_dims,
        });
    }

    Ok(CertEdge {
        source_name: source_name.to_string(),
        source_system: source_system.clone(),
        family: family.clone(),
        source_images,
        sample_points: samples,
        claims,
        evidence,
    })
}

/// Compose one edge with certificates for its presented blocks: each
/// `Presented` claim must be covered by a child certificate whose source
/// name matches; `Semisimple` claims contribute their type directly.
pub fn compose_step(
    edge: CertEdge,
    children: Vec<Certificate>,
) -> Result<Certificate, FamiliesError> {
    let mut remaining = children;
    let mut target = GeometricType::default();
    let mut notes = Vec::new();
    let mut tail_edges = Vec::new();
    for claim in &edge.claims {
        match claim {
            BlockClaim::Semisimple { expected } => {
                target = target.combine(expected);
            }
            BlockClaim::Presented { name, .. } => {
                if let Some(pos) = remaining.iter().position(|c| c.source_name == *name) {
                    let child = remaining.remove(pos);
                    target = target.combine(&child.target);
                    notes.extend(child.notes);
                    tail_edges.extend(child.edges);
                } else if claim.depends_on_parameter(edge.family.parameter()) {
                    // a sample-dependent claim names one presented algebra
                    // per sample point; a child certificate is required for
                    // each, and they must all reach the same target
                    let mut common: Option<GeometricType> = None;
                    for lambda in &edge.sample_points {
                        let inst = format!("{name}@{lambda}");
                        let pos = remaining
                            .iter()
                            .position(|c| c.source_name == inst)
                            .ok_or_else(|| FamiliesError::ChainMismatch {
                                expected: inst.clone(),
                                found: format!(
                                    "available: [{}]",
                                    remaining
                                        .iter()
                                        .map(|c| c.source_name.clone())
                                        .collect::<Vec<_>>()
                                        .join(", ")
                                ),
                            })?;
                        let child = remaining.remove(pos);
                        match &common {
                            None => common = Some(child.target.clone()),
                            Some(t) if *t == child.target => {}
                            Some(t) => {
                                return Err(FamiliesError::ChainMismatch {
                                    expected: format!("target {t} for `{inst}`"),
                                    found: format!("target {}", child.target),
                                });
                            }
                        }
                        notes.extend(child.notes);
                        tail_edges.extend(child.edges);
                    }
                    target = target.combine(&common.expect("at least two sample points"));
                } else {
                    return Err(FamiliesError::ChainMismatch {
                        expected: name.clone(),
                        found: format!(
                            "available: [{}]",
                            remaining
                                .iter()
                                .map(|c| c.source_name.clone())
                                .collect::<Vec<_>>()
                                .join(", ")
                        ),
                    });
                }
            }
        }
    }
    if let Some(extra) = remaining.first() {
        return Err(FamiliesError::ChainMismatch {
            expected: "no further block".to_string(),
            found: format!("unused certificate for `{}`", extra.source_name),
        });
    }
    let source_name = edge.source_name.clone();
    let mut edges = vec![edge];
    edges.extend(tail_edges);
    Ok(Certificate {
        source_name,
        edges,
        target,
        notes,
    })
}

/// Compose a linear chain of edges: each edge's single presented block is
/// the next edge's source, and the last edge's blocks are all semisimple.
pub fn compose_certificates(edges: Vec<CertEdge>) -> Result<Certificate, FamiliesError> {
    if edges.is_empty() {
        return Err(FamiliesError::ChainMismatch {
            expected: "at least one edge".to_string(),
            found: "empty chain".to_string(),
        });
    }
    let mut cert: Option<Certificate> = None;
    for edge in edges.into_iter().rev() {
        let children = match cert.take() {
            Some(c) => vec![c],
            None => Vec::new(),
        };
        cert = Some(compose_step(edge, children)?);
    }
    Ok(cert.expect("nonempty chain"))
}

/// Certificate for a direct product of sources deforming to the product of
/// targets. When both factors carry actual families, the blockwise product
/// family is formed and its associativity over the parameter ring verified
/// directly.
pub fn product_certificate(
    c1: &Certificate,
    c2: &Certificate,
) -> Result<Certificate, FamiliesError> {
    let mut notes = Vec::new();
    match (c1.edges.first(), c2.edges.first()) {
        (Some(e1), Some(e2)) => {
            let product = e1.family.direct_product(&e2.family);
            if !super::verify_family(&product) {
                return Err(FamiliesError::EvidenceFailed {
                    item: format!(
                        "product family `{}` fails the associativity identities",
                        product.name()
                    ),
                });
            }
            notes.push(format!(
                "product family `{}` of rank {} verified associative over the parameter ring",
                product.name(),
                product.dim()
            ));
        }
        _ => {
            notes.push("at least one factor is constant; blockwise product is immediate".to_string());
        }
    }
    notes.extend(c1.notes.iter().cloned());
    notes.extend(c2.notes.iter().cloned());
    let mut edges = c1.edges.clone();
    edges.extend(c2.edges.iter().cloned());
    Ok(Certificate {
        source_name: format!("{} x {}", c1.source_name, c2.source_name),
        edges,
        target: c1.target.combine(&c2.target),
        notes,
    })
}
