//! Dense exact matrices over a coefficient field, plus a sparse rank routine
//! for the large Hochschild coboundary matrices.

use super::{Field, Rat};

#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = F::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut F {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        Matrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = F::zero();
            for k in 0..self.cols {
                if !self.at(i, k).is_zero() {
                    acc = acc.add(&self.at(i, k).mul(other.at(k, j)));
                }
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for k in 0..self.cols {
                    if !self.at(i, k).is_zero() && !v[k].is_zero() {
                        acc = acc.add(&self.at(i, k).mul(&v[k]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self.at(i, j).add(other.at(i, j))
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self.at(i, j).sub(other.at(i, j))
        })
    }

    pub fn trace(&self) -> F {
        assert_eq!(self.rows, self.cols);
        let mut acc = F::zero();
        for i in 0..self.rows {
            acc = acc.add(self.at(i, i));
        }
        acc
    }

    /// Reduced row echelon form; returns the echelon matrix and the pivot
    /// column indices.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    let a = m.at(p, j).clone();
                    let b = m.at(r, j).clone();
                    *m.at_mut(p, j) = b;
                    *m.at_mut(r, j) = a;
                }
            }
            let inv = m.at(r, c).inv();
            for j in c..m.cols {
                *m.at_mut(r, j) = m.at(r, j).mul(&inv);
            }
            for i in 0..m.rows {
                if i != r && !m.at(i, c).is_zero() {
                    let factor = m.at(i, c).clone();
                    for j in c..m.cols {
                        let sub = factor.mul(m.at(r, j));
                        *m.at_mut(i, j) = m.at(i, j).sub(&sub);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Exact rank over the coefficient field.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space. Empty iff `rank == cols`.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let (e, pivots) = self.rref();
        let mut basis = Vec::new();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        for &fc in &free {
            let mut v = vec![F::zero(); self.cols];
            v[fc] = F::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = e.at(r, fc).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// Solve `self * x = b`; `None` when inconsistent.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.at(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let (e, pivots) = aug.rref();
        aug = e;
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.at(r, self.cols).clone();
        }
        Some(x)
    }
}

/// Rank of a sparse rational matrix given as rows of `(column, value)` pairs.
///
/// Elimination picks, among the columns of the shortest remaining row, the
/// one with the fewest remaining occurrences; this keeps fill-in low on the
/// highly sparse Hochschild coboundary matrices.
pub fn sparse_rank(rows: Vec<Vec<(usize, Rat)>>, cols: usize) -> usize {
    let mut rows: Vec<Vec<(usize, Rat)>> = rows
        .into_iter()
        .map(|mut r| {
            r.retain(|(_, v)| !Field::is_zero(v));
            r.sort_by_key(|&(c, _)| c);
            r
        })
        .filter(|r| !r.is_empty())
        .collect();
    let mut col_count = vec![0usize; cols];
    for r in &rows {
        for &(c, _) in r {
            col_count[c] += 1;
        }
    }
    let mut rank = 0;
    while !rows.is_empty() {
        // pivot row: shortest; pivot column: rarest within that row
        let (pi, _) = rows
            .iter()
            .enumerate()
            .min_by_key(|(_, r)| r.len())
            .unwrap();
        let pivot_row = rows.swap_remove(pi);
        let &(pc, ref pv) = pivot_row
            .iter()
            .min_by_key(|&&(c, _)| col_count[c])
            .unwrap();
        let pv_inv = Field::inv(pv);
        for &(c, _) in &pivot_row {
            col_count[c] -= 1;
        }
        rank += 1;
        let mut next_rows = Vec::with_capacity(rows.len());
        for row in rows.into_iter() {
            let hit = row.binary_search_by_key(&pc, |&(c, _)| c);
            match hit {
                Err(_) => next_rows.push(row),
                Ok(idx) => {
                    let factor = row[idx].1.mul(&pv_inv);
                    for &(c, _) in &row {
                        col_count[c] -= 1;
                    }
                    let mut merged: Vec<(usize, Rat)> =
                        Vec::with_capacity(row.len() + pivot_row.len());
                    let (mut i, mut j) = (0, 0);
                    while i < row.len() || j < pivot_row.len() {
                        let take_row =
                            j == pivot_row.len() || (i < row.len() && row[i].0 < pivot_row[j].0);
                        let take_piv =
                            i == row.len() || (j < pivot_row.len() && pivot_row[j].0 < row[i].0);
                        if take_row {
                            merged.push(row[i].clone());
                            i += 1;
                        } else if take_piv {
                            let (c, v) = &pivot_row[j];
                            merged.push((*c, v.mul(&factor).neg()));
                            j += 1;
                        } else {
                            let (c, v) = &pivot_row[j];
                            let nv = row[i].1.sub(&v.mul(&factor));
                            if !Field::is_zero(&nv) {
                                merged.push((*c, nv));
                            }
                            i += 1;
                            j += 1;
                        }
                    }
                    if !merged.is_empty() {
                        for &(c, _) in &merged {
                            col_count[c] += 1;
                        }
                        next_rows.push(merged);
                    }
                }
            }
        }
        rows = next_rows;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::super::rat;
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix<Rat> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::<Rat>::identity(3).rank(), 3);
        assert_eq!(Matrix::<Rat>::zero(2, 2).rank(), 0);
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::<Rat>::identity(2).kernel().is_empty());
        let k = m(&[&[1, -1]]).kernel();
        assert_eq!(k, vec![vec![rat(1), rat(1)]]);
        let k = m(&[&[1, 2], &[2, 4]]).kernel();
        assert_eq!(k.len(), 1);
        // spanned by (2, -1) up to scale
        let v = &k[0];
        assert!(Field::is_zero(&v[0].add(&v[1].mul(&rat(2)))));
    }

    #[test]
    fn rank_plus_nullity() {
        let a = m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert_eq!(a.rank() + a.kernel().len(), a.cols());
    }

    #[test]
    fn sparse_matches_dense() {
        let a = m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9], &[1, 0, 1]]);
        let rows = (0..a.rows())
            .map(|i| {
                (0..a.cols())
                    .map(|j| (j, a.at(i, j).clone()))
                    .collect::<Vec<_>>()
            })
            .collect();
        assert_eq!(sparse_rank(rows, 3), a.rank());
    }
}
