use super::FamiliesError;
use crate::algstruct::FDAlgebra;
use crate::exactnum::{rat, Matrix, Rat, UniPoly};
use crate::wedderburn::{factor_poly_rational, minimal_polynomial, radical};
use num::{One, Zero};

/// One factor of a block decomposition `A ≅ ∏ e_i A e_i` along central
/// idempotents: the idempotent, a basis of the block inside the ambient
/// algebra, and the block with its induced multiplication.
#[derive(Clone, Debug)]
pub struct FiberBlock {
    pub idempotent: Vec<Rat>,
    pub basis: Vec<Vec<Rat>>,
    pub algebra: FDAlgebra<Rat>,
}

impl FiberBlock {
    /// Coordinates of an ambient element in the block basis, if it lies in
    /// the block.
    pub fn coords(&self, ambient: &FDAlgebra<Rat>, v: &[Rat]) -> Option<Vec<Rat>> {
        let bmat = Matrix::from_fn(ambient.dim(), self.basis.len(), |i, j| {
            self.basis[j][i].clone()
        });
        bmat.solve(v)
    }

    /// Project an ambient element into the block (multiply by the
    /// idempotent) and express it in the block basis.
    pub fn project(&self, ambient: &FDAlgebra<Rat>, v: &[Rat]) -> Vec<Rat> {
        let cut = ambient.mul(&self.idempotent, v);
        self.coords(ambient, &cut)
            .expect("idempotent image lies in the block")
    }
}

/// Decompose an algebra along the primitive idempotents of the maximal
/// étale quotient of its centre.
///
/// A primitive element of the centre modulo its nilradical is found by the
/// same coefficient sweep used for semisimple algebras; the squarefree part
/// of its minimal polynomial yields idempotents modulo nilpotents by the
/// Chinese remainder theorem, which are then corrected by the Newton step
/// `e ↦ 3e² − 2e³` until exactly idempotent. On a semisimple input this
/// reproduces the central primitive idempotents.
pub fn fiber_blocks(a: &FDAlgebra<Rat>) -> Result<Vec<FiberBlock>, FamiliesError> {
    let centre = a.centre();
    let z_labels: Vec<String> = (0..centre.dim()).map(|i| format!("z{i}")).collect();
    let z_alg = a.subalgebra_on_basis(centre.basis(), z_labels);
    let etale_dim = z_alg.dim() - radical(&z_alg).dim();
    if etale_dim == 1 {
        return Ok(vec![FiberBlock {
            idempotent: a.unit().to_vec(),
            basis: (0..a.dim()).map(|i| a.basis_element(i)).collect(),
            algebra: a.clone(),
        }]);
    }

    const SWEEP_LIMIT: usize = 1000;
    let mut found = None;
    for c in 0..=SWEEP_LIMIT {
        let cv = rat(c as i64);
        let mut w = a.zero_element();
        let mut scale = Rat::one();
        for z in centre.basis() {
            w = a.add(&w, &a.scale(&scale, z));
            scale *= &cv;
        }
        let mu = minimal_polynomial(a, &w);
        let factorization = factor_poly_rational(&mu)?;
        let squarefree_degree: usize = factorization
            .factors
            .iter()
            .map(|(f, _)| f.degree().unwrap_or(0))
            .sum();
        if squarefree_degree == etale_dim {
            found = Some((w, factorization));
            break;
        }
    }
    let Some((w, factorization)) = found else {
        return Err(FamiliesError::Wedderburn(
            crate::wedderburn::WedderburnError::PrimitiveElementSearchExhausted(SWEEP_LIMIT + 1),
        ));
    };

    // CRT idempotents of the squarefree part, evaluated at w; exact modulo
    // the nilpotent defect, then corrected by Newton iteration
    let squarefree = factorization
        .factors
        .iter()
        .fold(UniPoly::one(), |acc, (f, _)| acc.mul(f));
    let mut idempotents = Vec::new();
    for (f, _) in &factorization.factors {
        let g = squarefree.div_rem(f).0;
        let (gcd, u, _) = g.xgcd(f).expect("distinct irreducible factors are coprime");
        debug_assert_eq!(gcd.degree(), Some(0));
        let e_poly = g.mul(&u).scale(&(Rat::one() / gcd.coeff(0)));
        let mut e = eval_poly_at(a, &e_poly, &w);
        let mut converged = false;
        for _ in 0..=a.dim() {
            let e2 = a.mul(&e, &e);
            if e2 == e {
                converged = true;
                break;
            }
            // 3e² − 2e³
            let e3 = a.mul(&e2, &e);
            e = a.sub(&a.scale(&rat(3), &e2), &a.scale(&rat(2), &e3));
        }
        if !converged {
            return Err(FamiliesError::IdempotentLiftDiverged);
        }
        idempotents.push(e);
    }

    // the lifted family is orthogonal with unit sum because every lift
    // stays inside the commutative subalgebra generated by w
    let mut total = a.zero_element();
    for e in &idempotents {
        total = a.add(&total, e);
    }
    debug_assert_eq!(total, a.unit().to_vec());

    let mut out = Vec::new();
    for e in idempotents {
        let spanning: Vec<Vec<Rat>> = (0..a.dim())
            .map(|j| a.mul(&e, &a.basis_element(j)))
            .collect();
        let basis = crate::algstruct::Subspace::from_spanning(a.dim(), spanning)
            .basis()
            .to_vec();
        let algebra = corner_algebra(a, &basis, &e);
        out.push(FiberBlock {
            idempotent: e,
            basis,
            algebra,
        });
    }
    Ok(out)
}

/// The multiplication induced on the span of `basis`, with `unit_element`
/// (a central idempotent lying in the span) as the unit.
fn corner_algebra(a: &FDAlgebra<Rat>, basis: &[Vec<Rat>], unit_element: &[Rat]) -> FDAlgebra<Rat> {
    let n = basis.len();
    let bmat = Matrix::from_fn(a.dim(), n, |i, j| basis[j][i].clone());
    let coords = |v: &[Rat]| -> Vec<Rat> { bmat.solve(v).expect("block is closed under products") };
    let mut table = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let prod = a.mul(&basis[i], &basis[j]);
            table[i][j] = coords(&prod)
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
        }
    }
    let labels = (0..n).map(|i| format!("b{i}")).collect();
    FDAlgebra::new(labels, coords(unit_element), table)
}

fn eval_poly_at(a: &FDAlgebra<Rat>, p: &UniPoly, v: &[Rat]) -> Vec<Rat> {
    let d = match p.degree() {
        None => return a.zero_element(),
        Some(d) => d,
    };
    let mut out = a.scale(&p.coeff(d), a.unit());
    for i in (0..d).rev() {
        out = a.mul(&out, v);
        out = a.add(&out, &a.scale(&p.coeff(i), a.unit()));
    }
    out
}
