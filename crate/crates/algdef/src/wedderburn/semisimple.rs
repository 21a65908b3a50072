use super::{factor_poly_rational, WedderburnError};
use crate::algstruct::{FDAlgebra, Subspace};
use crate::exactnum::{Matrix, Rat, UniPoly};
use num::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// The shape of a semisimple algebra after base change to the algebraic
/// closure: `counts[s]` matrix blocks of size `s`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GeometricType {
    counts: BTreeMap<usize, usize>,
}

impl GeometricType {
    pub fn new(counts: BTreeMap<usize, usize>) -> Self {
        let counts = counts.into_iter().filter(|&(_, n)| n > 0).collect();
        GeometricType { counts }
    }

    pub fn from_pairs(pairs: &[(usize, usize)]) -> Self {
        let mut counts = BTreeMap::new();
        for &(s, n) in pairs {
            *counts.entry(s).or_insert(0) += n;
        }
        GeometricType::new(counts)
    }

    pub fn counts(&self) -> &BTreeMap<usize, usize> {
        &self.counts
    }

    pub fn add_block(&mut self, s: usize, n: usize) {
        if n > 0 {
            *self.counts.entry(s).or_insert(0) += n;
        }
    }

    /// Union of the two multisets of blocks.
    pub fn combine(&self, other: &GeometricType) -> GeometricType {
        let mut out = self.clone();
        for (&s, &n) in &other.counts {
            out.add_block(s, n);
        }
        out
    }

    /// `Σ s²·n_s`: the dimension of the semisimple algebra of this type.
    pub fn total_dim(&self) -> usize {
        self.counts.iter().map(|(&s, &n)| s * s * n).sum()
    }

    /// `Σ n_s`: the dimension of its centre.
    pub fn centre_dim(&self) -> usize {
        self.counts.values().sum()
    }
}

impl fmt::Display for GeometricType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (s, n)) in self.counts.iter().rev().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}:{n}")?;
        }
        write!(f, "}}")
    }
}

/// Jacobson radical by the characteristic-zero trace-form criterion:
/// the kernel of the Gram matrix `(i, j) ↦ tr(L_{e_i}·L_{e_j})` of the
/// regular representation.
pub fn radical(a: &FDAlgebra<Rat>) -> Subspace<Rat> {
    let d = a.dim();
    let lefts: Vec<Matrix<Rat>> = (0..d).map(|i| a.left_mult(&a.basis_element(i))).collect();
    let gram = Matrix::from_fn(d, d, |i, j| {
        let mut t = Rat::zero();
        // tr(L_i·L_j) without forming the product matrix
        for r in 0..d {
            for k in 0..d {
                t += lefts[i].at(r, k) * lefts[j].at(k, r);
            }
        }
        t
    });
    Subspace::from_independent(d, gram.kernel())
}

/// Quotient by the radical, presented on a complement basis made of
/// standard basis vectors of `a`.
pub fn semisimple_quotient(a: &FDAlgebra<Rat>) -> FDAlgebra<Rat> {
    let rad = radical(a);
    if rad.dim() == 0 {
        return a.clone();
    }
    let d = a.dim();
    // greedily pick standard basis vectors independent from the radical
    let mut rows: Vec<Vec<Rat>> = rad.basis().to_vec();
    let mut complement = Vec::new();
    for k in 0..d {
        let mut candidate = rows.clone();
        candidate.push(a.basis_element(k));
        if Matrix::from_rows(candidate.clone()).rank() == rows.len() + 1 {
            rows = candidate;
            complement.push(k);
        }
    }
    let nc = complement.len();
    debug_assert_eq!(nc + rad.dim(), d);
    // coordinates in the mixed basis [complement | radical]; quotient keeps
    // the first nc entries
    let mixed = Matrix::from_fn(d, d, |i, j| {
        if j < nc {
            a.basis_element(complement[j])[i].clone()
        } else {
            rad.basis()[j - nc][i].clone()
        }
    });
    let project = |v: &[Rat]| -> Vec<Rat> {
        let mut c = mixed.solve(v).expect("mixed basis spans");
        c.truncate(nc);
        c
    };
    let labels: Vec<String> = complement
        .iter()
        .map(|&k| a.basis_labels()[k].clone())
        .collect();
    let unit = project(a.unit());
    let mut table = vec![vec![Vec::new(); nc]; nc];
    for i in 0..nc {
        for j in 0..nc {
            let prod = a.mul(
                &a.basis_element(complement[i]),
                &a.basis_element(complement[j]),
            );
            table[i][j] = project(&prod)
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
        }
    }
    FDAlgebra::new(labels, unit, table)
}

/// Minimal polynomial of an element, found from the first linear dependency
/// among its powers.
pub fn minimal_polynomial(a: &FDAlgebra<Rat>, v: &[Rat]) -> UniPoly {
    let mut powers = vec![a.unit().to_vec()];
    loop {
        let k = powers.len();
        let next = a.mul(&powers[k - 1], v);
        let mat = Matrix::from_fn(a.dim(), k, |i, j| powers[j][i].clone());
        if let Some(coeffs) = mat.solve(&next) {
            // v^k = Σ coeffs_i v^i, so μ = x^k − Σ coeffs_i x^i
            let mut c: Vec<Rat> = coeffs.iter().map(|c| -c.clone()).collect();
            c.push(Rat::one());
            return UniPoly::new(c);
        }
        powers.push(next);
    }
}

/// Split the centre of a semisimple algebra: returns the central primitive
/// idempotents together with the degree of each block's centre field.
fn centre_split(s: &FDAlgebra<Rat>) -> Result<Vec<(Vec<Rat>, usize)>, WedderburnError> {
    let centre = s.centre();
    let c = centre.dim();
    if c == 1 {
        return Ok(vec![(s.unit().to_vec(), 1)]);
    }
    const SWEEP_LIMIT: usize = 1000;
    let mut primitive = None;
    for cval in 0..=SWEEP_LIMIT {
        let cv = crate::exactnum::rat(cval as i64);
        let mut w = s.zero_element();
        let mut scale = Rat::one();
        for z in centre.basis() {
            w = s.add(&w, &s.scale(&scale, z));
            scale *= &cv;
        }
        let mu = minimal_polynomial(s, &w);
        if mu.degree() == Some(c) {
            primitive = Some((w, mu));
            break;
        }
    }
    let Some((w, mu)) = primitive else {
        return Err(WedderburnError::PrimitiveElementSearchExhausted(
            SWEEP_LIMIT + 1,
        ));
    };
    let factorization = factor_poly_rational(&mu)?;
    let mut out = Vec::new();
    for (f, mult) in &factorization.factors {
        debug_assert_eq!(*mult, 1, "étale centre has squarefree minimal polynomial");
        // CRT idempotent: e ≡ 1 mod f, e ≡ 0 mod μ/f
        let g = mu.div_rem(f).0;
        let (gcd, u, _) = g.xgcd(f).expect("coprime by construction");
        debug_assert_eq!(gcd.degree(), Some(0));
        let inv_const = gcd.coeff(0);
        let e_poly = u.mul(&g).scale(&(Rat::one() / inv_const));
        let e = eval_poly_at(s, &e_poly, &w);
        debug_assert_eq!(s.mul(&e, &e), e, "idempotent");
        out.push((e, f.degree().expect("irreducible factor")));
    }
    Ok(out)
}

fn eval_poly_at(a: &FDAlgebra<Rat>, p: &UniPoly, v: &[Rat]) -> Vec<Rat> {
    // Horner evaluation inside the algebra
    let d = match p.degree() {
        None => return a.zero_element(),
        Some(d) => d,
    };
    let mut out = a.scale(&p.coeff(d), a.unit());
    for i in (0..d).rev() {
        out = a.mul(&out, v);
        let unit_term = a.scale(&p.coeff(i), a.unit());
        out = a.add(&out, &unit_term);
    }
    out
}

/// Complete orthogonal set of central primitive idempotents of a semisimple
/// algebra, summing to the unit.
pub fn central_primitive_idempotents(
    s: &FDAlgebra<Rat>,
) -> Result<Vec<Vec<Rat>>, WedderburnError> {
    Ok(centre_split(s)?.into_iter().map(|(e, _)| e).collect())
}

/// Geometric type of a semisimple algebra: each simple block of dimension
/// `b` with centre field of degree `f` contributes `f` matrix blocks of
/// size `√(b/f)` over the algebraic closure.
pub fn geometric_type(s: &FDAlgebra<Rat>) -> Result<GeometricType, WedderburnError> {
    let mut out = GeometricType::default();
    for (e, f) in centre_split(s)? {
        let block_dim = s.left_mult(&e).rank();
        let ratio = block_dim / f;
        let side = (ratio as f64).sqrt().round() as usize;
        if ratio * f != block_dim || side * side != ratio {
            return Err(WedderburnError::NonSquareBlockDimension {
                dim: block_dim,
                centre_degree: f,
            });
        }
        out.add_block(side, f);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::ncgb::{
        parse_ncpoly, quotient_structure_constants, RewritingSystem, WeightedDeglexOrder,
    };

    fn alpha() -> Vec<String> {
        vec!["x".to_string(), "y".to_string()]
    }

    fn quotient(relations: &[&str], bound: usize) -> FDAlgebra<Rat> {
        let rels = relations
            .iter()
            .map(|r| {
                parse_ncpoly(r, &alpha(), None)
                    .unwrap()
                    .specialize(&rat(0))
                    .unwrap()
            })
            .collect();
        let sys = RewritingSystem::new(rels, WeightedDeglexOrder::heavy_last(2, bound), bound, 2)
            .unwrap()
            .complete()
            .unwrap();
        quotient_structure_constants(&sys, &alpha()).unwrap()
    }

    #[test]
    fn radical_of_dual_numbers() {
        let a = quotient(&["y", "x^2"], 6);
        let r = radical(&a);
        assert_eq!(r.dim(), 1);
        assert!(r.contains(&a.basis_element(1)));
        let q = semisimple_quotient(&a);
        assert_eq!(q.dim(), 1);
        assert_eq!(radical(&q).dim(), 0);
    }

    #[test]
    fn matrix_algebra_is_semisimple_of_type_two() {
        let a = quotient(&["x*y + y*x", "x^2 - 1", "y^2 - 1"], 10);
        assert_eq!(radical(&a).dim(), 0);
        let idems = central_primitive_idempotents(&a).unwrap();
        assert_eq!(idems.len(), 1);
        assert_eq!(idems[0], a.unit());
        assert_eq!(geometric_type(&a).unwrap(), GeometricType::from_pairs(&[(2, 1)]));
    }

    #[test]
    fn split_torus_idempotents() {
        // k[x]/(x²−1) ≅ k × k
        let a = quotient(&["y", "x^2 - 1"], 6);
        let idems = central_primitive_idempotents(&a).unwrap();
        assert_eq!(idems.len(), 2);
        let sum = a.add(&idems[0], &idems[1]);
        assert_eq!(sum, a.unit());
        assert!(FDAlgebra::is_zero_element(&a.mul(&idems[0], &idems[1])));
        assert_eq!(geometric_type(&a).unwrap(), GeometricType::from_pairs(&[(1, 2)]));
    }

    #[test]
    fn number_field_counts_conjugates() {
        // k[x]/(x²+1): a degree-2 field, two geometric points
        let a = quotient(&["y", "x^2 + 1"], 6);
        assert_eq!(radical(&a).dim(), 0);
        assert_eq!(geometric_type(&a).unwrap(), GeometricType::from_pairs(&[(1, 2)]));
    }

    #[test]
    fn rational_quaternions_have_type_two() {
        // ⟨x,y⟩/(xy+yx, x²+1, y²+1): the rational quaternion algebra
        let a = quotient(&["x*y + y*x", "x^2 + 1", "y^2 + 1"], 10);
        assert_eq!(a.dim(), 4);
        assert_eq!(radical(&a).dim(), 0);
        assert_eq!(a.centre().dim(), 1);
        assert_eq!(geometric_type(&a).unwrap(), GeometricType::from_pairs(&[(2, 1)]));
    }

    #[test]
    fn radical_is_nilpotent_two_sided_ideal() {
        let a = quotient(&["x*y + y*x", "x^3 + x^2 + y^2", "x^5"], 16);
        let r = radical(&a);
        assert_eq!(r.dim(), 7); // local algebra: radical is the augmentation ideal
        for v in r.basis() {
            assert!(a.nilpotency_index(v).is_ok());
            for i in 0..a.dim() {
                let e = a.basis_element(i);
                assert!(r.contains(&a.mul(v, &e)));
                assert!(r.contains(&a.mul(&e, v)));
            }
        }
        let q = semisimple_quotient(&a);
        assert_eq!(q.dim(), 1);
    }

    #[test]
    fn geometric_type_arithmetic() {
        let t = GeometricType::from_pairs(&[(2, 1), (1, 4)]);
        assert_eq!(t.total_dim(), 8);
        assert_eq!(t.centre_dim(), 5);
        assert_eq!(t.to_string(), "{2:1, 1:4}");
        let u = t.combine(&GeometricType::from_pairs(&[(1, 1)]));
        assert_eq!(u.counts()[&1], 5);
    }

    #[test]
    fn mixed_semisimple_split() {
        // k[x]/((x²+1)(x−3)) ⊕ effect of y killed: centre splits into a
        // quadratic field and a rational point
        let a = quotient(&["y", "(x^2 + 1)*(x - 3)"], 8);
        assert_eq!(a.dim(), 3);
        let split = central_primitive_idempotents(&a).unwrap();
        assert_eq!(split.len(), 2);
        assert_eq!(geometric_type(&a).unwrap(), GeometricType::from_pairs(&[(1, 3)]));
    }
}
