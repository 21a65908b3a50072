use super::AlgstructError;
use crate::exactnum::{Field, Matrix};
use crate::ncgb::Word;

/// A finite-dimensional unital associative algebra presented by structure
/// constants in a fixed basis.
///
/// `table[i][j]` is the sparse coordinate vector of `e_i * e_j`. The unit is
/// stored as an explicit coordinate vector rather than a distinguished basis
/// index, so block constructions such as [`FDAlgebra::direct_product`] (whose
/// unit is `(1, 1)`) need no basis change.
#[derive(Clone, Debug, PartialEq)]
pub struct FDAlgebra<F: Field> {
    dim: usize,
    basis_labels: Vec<String>,
    unit: Vec<F>,
    table: Vec<Vec<Vec<(usize, F)>>>,
}

impl<F: Field> FDAlgebra<F> {
    pub fn new(basis_labels: Vec<String>, unit: Vec<F>, table: Vec<Vec<Vec<(usize, F)>>>) -> Self {
        let dim = basis_labels.len();
        assert_eq!(unit.len(), dim);
        assert_eq!(table.len(), dim);
        assert!(table.iter().all(|row| row.len() == dim));
        FDAlgebra {
            dim,
            basis_labels,
            unit,
            table,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Applies `f` to every structure constant and unit coordinate, producing
    /// the same multiplication table over another coefficient field. `f` must
    /// be a ring homomorphism for the result to be an algebra.
    pub fn map_coeffs<G: Field, E>(
        &self,
        mut f: impl FnMut(&F) -> Result<G, E>,
    ) -> Result<FDAlgebra<G>, E> {
        let unit = self.unit.iter().map(&mut f).collect::<Result<_, _>>()?;
        let mut table = Vec::with_capacity(self.dim);
        for row in &self.table {
            let mut new_row = Vec::with_capacity(self.dim);
            for entry in row {
                let mut new_entry = Vec::with_capacity(entry.len());
                for (k, c) in entry {
                    let mapped = f(c)?;
                    if !mapped.is_zero() {
                        new_entry.push((*k, mapped));
                    }
                }
                new_row.push(new_entry);
            }
            table.push(new_row);
        }
        Ok(FDAlgebra {
            dim: self.dim,
            basis_labels: self.basis_labels.clone(),
            unit,
            table,
        })
    }

    /// Iterates over all stored structure constants (including unit
    /// coordinates) without materialising dense vectors.
    pub fn for_each_coeff(&self, mut f: impl FnMut(&F)) {
        for c in &self.unit {
            f(c);
        }
        for row in &self.table {
            for entry in row {
                for (_, c) in entry {
                    f(c);
                }
            }
        }
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn unit(&self) -> &[F] {
        &self.unit
    }

    pub fn zero_element(&self) -> Vec<F> {
        vec![F::zero(); self.dim]
    }

    pub fn basis_element(&self, i: usize) -> Vec<F> {
        let mut v = self.zero_element();
        v[i] = F::one();
        v
    }

    /// `e_i * e_j` as a dense coordinate vector.
    pub fn product_basis(&self, i: usize, j: usize) -> Vec<F> {
        let mut v = self.zero_element();
        for (k, c) in &self.table[i][j] {
            v[*k] = c.clone();
        }
        v
    }

    pub fn mul(&self, a: &[F], b: &[F]) -> Vec<F> {
        let mut out = self.zero_element();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let c = ai.mul(bj);
                for (k, s) in &self.table[i][j] {
                    out[*k] = out[*k].add(&c.mul(s));
                }
            }
        }
        out
    }

    pub fn add(&self, a: &[F], b: &[F]) -> Vec<F> {
        a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
    }

    pub fn sub(&self, a: &[F], b: &[F]) -> Vec<F> {
        a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
    }

    pub fn scale(&self, c: &F, a: &[F]) -> Vec<F> {
        a.iter().map(|x| c.mul(x)).collect()
    }

    pub fn pow(&self, a: &[F], k: usize) -> Vec<F> {
        let mut out = self.unit.clone();
        for _ in 0..k {
            out = self.mul(&out, a);
        }
        out
    }

    pub fn is_zero_element(a: &[F]) -> bool {
        a.iter().all(|c| c.is_zero())
    }

    /// Exact check of the associativity equations
    /// `Σ_k λ_{ij}^k λ_{kl}^m = Σ_k λ_{jl}^k λ_{ik}^m` and of the unit
    /// equations `u·e_j = e_j·u = e_j` in the coefficient ring.
    pub fn verify_structure(&self) -> bool {
        for j in 0..self.dim {
            let ej = self.basis_element(j);
            if self.mul(&self.unit, &ej) != ej || self.mul(&ej, &self.unit) != ej {
                return false;
            }
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.product_basis(i, j);
                for l in 0..self.dim {
                    let el = self.basis_element(l);
                    let left = self.mul(&ij, &el);
                    let right = self.mul(&self.basis_element(i), &self.product_basis(j, l));
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Matrix of `b ↦ a·b` in the basis.
    pub fn left_mult(&self, a: &[F]) -> Matrix<F> {
        let cols: Vec<Vec<F>> = (0..self.dim)
            .map(|j| self.mul(a, &self.basis_element(j)))
            .collect();
        Matrix::from_fn(self.dim, self.dim, |i, j| cols[j][i].clone())
    }

    /// Matrix of `b ↦ b·a` in the basis.
    pub fn right_mult(&self, a: &[F]) -> Matrix<F> {
        let cols: Vec<Vec<F>> = (0..self.dim)
            .map(|j| self.mul(&self.basis_element(j), a))
            .collect();
        Matrix::from_fn(self.dim, self.dim, |i, j| cols[j][i].clone())
    }

    /// Solution space of `[z, e_i] = 0` for every basis element.
    pub fn centre(&self) -> Subspace<F> {
        let mut rows = Vec::with_capacity(self.dim * self.dim);
        for i in 0..self.dim {
            let ei = self.basis_element(i);
            let ad = self.left_mult(&ei).sub(&self.right_mult(&ei));
            for r in 0..self.dim {
                rows.push(ad.row(r).to_vec());
            }
        }
        let kernel = Matrix::from_rows(rows).kernel();
        Subspace::from_independent(self.dim, kernel)
    }

    /// Span of all commutators `e_i e_j − e_j e_i`.
    pub fn commutator_subspace(&self) -> Subspace<F> {
        let mut vs = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                vs.push(self.sub(&self.product_basis(i, j), &self.product_basis(j, i)));
            }
        }
        Subspace::from_spanning(self.dim, vs)
    }

    /// Product of `assignment[letter]` over the letters of `w`; the empty
    /// word evaluates to the unit.
    pub fn evaluate_word(&self, w: &Word, assignment: &[Vec<F>]) -> Vec<F> {
        let mut out = self.unit.clone();
        for &g in &w.0 {
            out = self.mul(&out, &assignment[g as usize]);
        }
        out
    }

    /// Dimension of the span of the word evaluations.
    pub fn evaluate_spans(&self, words: &[Word], assignment: &[Vec<F>]) -> usize {
        let vs: Vec<Vec<F>> = words
            .iter()
            .map(|w| self.evaluate_word(w, assignment))
            .collect();
        Subspace::from_spanning(self.dim, vs).dim()
    }

    /// Smallest `p` with `a^p = 0`. Powers are taken up to the algebra
    /// dimension; a nonzero `a^d` certifies that `a` is not nilpotent.
    pub fn nilpotency_index(&self, a: &[F]) -> Result<usize, AlgstructError> {
        let mut cur = self.unit.clone();
        for p in 0..=self.dim {
            if Self::is_zero_element(&cur) {
                return Ok(p);
            }
            cur = self.mul(&cur, a);
        }
        // a nilpotent element of a d-dimensional algebra has index at most d
        // (the powers 1, a, …, a^{index−1} are linearly independent)
        Err(AlgstructError::NotNilpotent)
    }

    /// Block-diagonal product algebra with unit `(1, 1)`; basis labels are
    /// prefixed by the factor index.
    pub fn direct_product(&self, other: &FDAlgebra<F>) -> FDAlgebra<F> {
        let dim = self.dim + other.dim;
        let mut labels = Vec::with_capacity(dim);
        for l in &self.basis_labels {
            labels.push(format!("1:{l}"));
        }
        for l in &other.basis_labels {
            labels.push(format!("2:{l}"));
        }
        let mut unit = self.unit.clone();
        unit.extend(other.unit.iter().cloned());
        let mut table = vec![vec![Vec::new(); dim]; dim];
        for i in 0..self.dim {
            for j in 0..self.dim {
                table[i][j] = self.table[i][j].clone();
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                table[self.dim + i][self.dim + j] = other.table[i][j]
                    .iter()
                    .map(|(k, c)| (self.dim + k, c.clone()))
                    .collect();
            }
        }
        FDAlgebra::new(labels, unit, table)
    }

    /// Restrict the multiplication to the span of `basis`, which must be
    /// closed under products and contain the unit; returns the algebra in
    /// that basis together with nothing else. Coordinates of products are
    /// found by linear solves against the basis matrix.
    pub fn subalgebra_on_basis(&self, basis: &[Vec<F>], labels: Vec<String>) -> FDAlgebra<F> {
        let n = basis.len();
        let bmat = Matrix::from_fn(self.dim, n, |i, j| basis[j][i].clone());
        let coords =
            |v: &[F]| -> Vec<F> { bmat.solve(v).expect("vector lies in the span of the basis") };
        let mut table = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let prod = self.mul(&basis[i], &basis[j]);
                table[i][j] = coords(&prod)
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
            }
        }
        let unit = coords(&self.unit);
        FDAlgebra::new(labels, unit, table)
    }
}

/// A subspace of coordinate space, stored by a linearly independent basis in
/// reduced echelon form.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<F: Field> {
    ambient_dim: usize,
    basis: Vec<Vec<F>>,
}

impl<F: Field> Subspace<F> {
    /// Reduce a spanning set to an echelon basis.
    pub fn from_spanning(ambient_dim: usize, vectors: Vec<Vec<F>>) -> Self {
        if vectors.is_empty() {
            return Subspace {
                ambient_dim,
                basis: Vec::new(),
            };
        }
        let (ech, pivots) = Matrix::from_rows(vectors).rref();
        let basis = (0..pivots.len()).map(|i| ech.row(i).to_vec()).collect();
        Subspace { ambient_dim, basis }
    }

    /// Wrap vectors already known to be independent.
    pub fn from_independent(ambient_dim: usize, vectors: Vec<Vec<F>>) -> Self {
        Subspace::from_spanning(ambient_dim, vectors)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn contains(&self, v: &[F]) -> bool {
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        Matrix::from_rows(rows).rank() == self.dim()
    }

    /// Span of products `u·v` of basis vectors, computed in `a`.
    pub fn product_span(&self, a: &FDAlgebra<F>, other: &Subspace<F>) -> Subspace<F> {
        let mut vs = Vec::new();
        for u in &self.basis {
            for v in &other.basis {
                vs.push(a.mul(u, v));
            }
        }
        Subspace::from_spanning(self.ambient_dim, vs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, Rat};

    /// `k[x]/(x^2)` in the basis `{1, x}`.
    fn dual_numbers() -> FDAlgebra<Rat> {
        let one = rat(1);
        let table = vec![
            vec![vec![(0, one.clone())], vec![(1, one.clone())]],
            vec![vec![(1, one.clone())], vec![]],
        ];
        FDAlgebra::new(vec!["1".into(), "x".into()], vec![one, rat(0)], table)
    }

    #[test]
    fn dual_numbers_structure() {
        let a = dual_numbers();
        assert!(a.verify_structure());
        assert_eq!(a.centre().dim(), 2);
        assert_eq!(a.commutator_subspace().dim(), 0);
        let x = a.basis_element(1);
        assert_eq!(a.nilpotency_index(&x), Ok(2));
        assert_eq!(
            a.nilpotency_index(a.unit()),
            Err(AlgstructError::NotNilpotent)
        );
        let lx = a.left_mult(&x);
        assert_eq!(lx.rank(), 1);
        assert!(lx.mul(&lx).rank() == 0);
    }

    #[test]
    fn perturbed_constant_fails_verification() {
        let mut a = dual_numbers();
        a.table[0][1] = vec![(1, rat(2))]; // breaks 1·x = x
        assert!(!a.verify_structure());
        // cross-block product in a direct product breaks associativity
        // ((x₁·x₂)·x₂ = x₁ but x₁·(x₂·x₂) = 0) without touching unit laws
        let d = dual_numbers();
        let mut b = d.direct_product(&d);
        b.table[1][3] = vec![(1, rat(1))];
        assert!(!b.verify_structure());
    }

    #[test]
    fn direct_product_blocks() {
        let a = dual_numbers();
        let p = a.direct_product(&a);
        assert!(p.verify_structure());
        assert_eq!(p.dim(), 4);
        assert_eq!(p.centre().dim(), 4);
        // unit is (1, 1), not a basis vector
        assert_eq!(p.unit(), &[rat(1), rat(0), rat(1), rat(0)]);
        let x1 = p.basis_element(1);
        let x2 = p.basis_element(3);
        assert!(FDAlgebra::is_zero_element(&p.mul(&x1, &x2)));
    }

    #[test]
    fn left_mult_respects_composition() {
        let a = dual_numbers();
        let u = vec![rat(2), rat(5)];
        let v = vec![rat(-1), rat(3)];
        let lhs = a.left_mult(&u).mul(&a.left_mult(&v));
        let rhs = a.left_mult(&a.mul(&u, &v));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluate_word_and_spans() {
        let a = dual_numbers();
        let x = a.basis_element(1);
        let w = Word(vec![0, 0]);
        assert!(FDAlgebra::is_zero_element(
            &a.evaluate_word(&w, &[x.clone()])
        ));
        assert_eq!(a.evaluate_word(&Word::one(), &[x.clone()]), a.unit());
        let words = vec![Word::one(), Word(vec![0]), Word(vec![0, 0])];
        assert_eq!(a.evaluate_spans(&words, &[x]), 2);
    }

    #[test]
    fn subspace_membership() {
        let s = Subspace::from_spanning(3, vec![vec![rat(1), rat(1), rat(0)]]);
        assert_eq!(s.dim(), 1);
        assert!(s.contains(&[rat(2), rat(2), rat(0)]));
        assert!(!s.contains(&[rat(1), rat(0), rat(0)]));
    }
}
