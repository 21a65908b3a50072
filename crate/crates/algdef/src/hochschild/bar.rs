use crate::algstruct::FDAlgebra;
use crate::exactnum::{Field, Rat};
use std::collections::HashMap;

/// Entry budget for one coboundary matrix, measured as `rows × columns`.
/// `kMax = 2` at dimension 12 stays under it; `kMax = 3` needs tiny
/// algebras or an explicit override.
pub const DEFAULT_ENTRY_BUDGET: usize = 100_000_000;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum HochschildError {
    #[error("coboundary matrix for k = {k} would have {entries} entries, over the budget {budget}")]
    CostGuardExceeded {
        k: usize,
        entries: usize,
        budget: usize,
    },
}

/// Dimensions `[dim HH⁰, …, dim HH^kMax]` together with the cochain-space
/// dimensions used along the way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HochschildReport {
    pub dims: Vec<usize>,
    pub cochain_dims: Vec<usize>,
    pub k_max: usize,
}

/// Sparse column-major matrix over the rationals.
#[derive(Debug, Clone, Default)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: Vec<Vec<(usize, Rat)>>,
}

impl SparseMatrix {
    pub fn entry_bound(&self) -> usize {
        self.rows * self.cols.len()
    }

    /// Apply the matrix to a sparse vector indexed by column.
    #[cfg(test)]
    fn apply(&self, v: &HashMap<usize, Rat>) -> HashMap<usize, Rat> {
        let mut out: HashMap<usize, Rat> = HashMap::new();
        for (&c, coef) in v {
            for (r, val) in &self.cols[c] {
                let e = out.entry(*r).or_insert_with(Rat::zero);
                *e = e.clone() + coef.clone() * val.clone();
            }
        }
        out.retain(|_, x| !x.is_zero());
        out
    }
}

/// Exact rank by sparse Gaussian elimination, column by column.
pub fn sparse_rank(m: &SparseMatrix) -> usize {
    // pivot row -> reduced column with a 1 in that row
    let mut pivots: HashMap<usize, HashMap<usize, Rat>> = HashMap::new();
    for col in &m.cols {
        let mut v: HashMap<usize, Rat> = col
            .iter()
            .filter(|(_, x)| !x.is_zero())
            .map(|(r, x)| (*r, x.clone()))
            .collect();
        loop {
            let hit = v
                .keys()
                .filter(|r| pivots.contains_key(r))
                .min()
                .copied();
            match hit {
                None => break,
                Some(r) => {
                    let coef = v.remove(&r).expect("key present");
                    let pivot = pivots.get(&r).expect("pivot present").clone();
                    for (pr, pv) in pivot {
                        if pr == r {
                            continue;
                        }
                        let e = v.entry(pr).or_insert_with(Rat::zero);
                        *e = e.clone() - coef.clone() * pv;
                        if e.is_zero() {
                            v.remove(&pr);
                        }
                    }
                }
            }
        }
        if let Some(r) = v.keys().min().copied() {
            let lead = v.get(&r).expect("nonzero lead").clone();
            for x in v.values_mut() {
                *x = x.clone() / lead.clone();
            }
            pivots.insert(r, v);
        }
    }
    pivots.len()
}

/// Index a tuple `(t_0, …, t_{k})` of basis indices as a single number in
/// base `d`, most significant first.
fn tuple_index(tuple: &[usize], d: usize) -> usize {
    tuple.iter().fold(0, |acc, &t| acc * d + t)
}

fn unrank(mut idx: usize, len: usize, d: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in (0..len).rev() {
        out[slot] = idx % d;
        idx /= d;
    }
    out
}

/// The Hochschild coboundary `δ^k : C^k → C^{k+1}` on the (unreduced) bar
/// complex, as a sparse matrix over the elementary-cochain bases:
/// `C^k = Hom(A^{⊗k}, A)` with basis `[(w_1..w_k) ↦ e_j]`.
fn coboundary(a: &FDAlgebra<Rat>, k: usize) -> SparseMatrix {
    let d = a.dim();
    let ck = d.pow(k as u32) * d;
    let rows = d.pow(k as u32 + 1) * d;
    let mut cols = vec![Vec::new(); ck];
    let sign = |i: usize| if i % 2 == 0 { 1i64 } else { -1i64 };
    for col in 0..ck {
        let j = col % d;
        let w = unrank(col / d, k, d);
        let mut entries: HashMap<usize, Rat> = HashMap::new();
        let mut add = |row: usize, val: Rat| {
            let e = entries.entry(row).or_insert_with(Rat::zero);
            *e = e.clone() + val;
        };
        // first face: t0 · f(w), summed over t0
        for t0 in 0..d {
            let prod = a.product_basis(t0, j);
            let mut tuple = vec![t0];
            tuple.extend_from_slice(&w);
            let base = tuple_index(&tuple, d) * d;
            for (r, c) in prod.iter().enumerate() {
                if !c.is_zero() {
                    add(base + r, c.clone());
                }
            }
        }
        // inner faces: f with slot i collapsed from a product e_p·e_q
        for i in 1..=k {
            for p in 0..d {
                for q in 0..d {
                    let c = &a.product_basis(p, q)[w[i - 1]];
                    if c.is_zero() {
                        continue;
                    }
                    let mut tuple = Vec::with_capacity(k + 1);
                    tuple.extend_from_slice(&w[..i - 1]);
                    tuple.push(p);
                    tuple.push(q);
                    tuple.extend_from_slice(&w[i..]);
                    let row = tuple_index(&tuple, d) * d + j;
                    add(row, Rat::from_integer(sign(i).into()) * c.clone());
                }
            }
        }
        // last face: f(w) · t_{k+1}
        for tk in 0..d {
            let prod = a.product_basis(j, tk);
            let mut tuple = w.clone();
            tuple.push(tk);
            let base = tuple_index(&tuple, d) * d;
            let s = Rat::from_integer(sign(k + 1).into());
            for (r, c) in prod.iter().enumerate() {
                if !c.is_zero() {
                    add(base + r, s.clone() * c.clone());
                }
            }
        }
        let mut v: Vec<(usize, Rat)> = entries
            .into_iter()
            .filter(|(_, x)| !x.is_zero())
            .collect();
        v.sort_by_key(|(r, _)| *r);
        cols[col] = v;
    }
    SparseMatrix { rows, cols }
}

fn dims_from_coboundaries(
    deltas: &[SparseMatrix],
    cochain_dims: &[usize],
    k_max: usize,
) -> Vec<usize> {
    let ranks: Vec<usize> = deltas.iter().map(sparse_rank).collect();
    let mut dims = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let kernel = cochain_dims[k] - ranks[k];
        let image_prev = if k == 0 { 0 } else { ranks[k - 1] };
        dims.push(kernel - image_prev);
    }
    dims
}

/// Hochschild cohomology dimensions `HH⁰ … HH^kMax` by exact sparse ranks
/// of the bar-complex coboundaries, with a configurable entry budget.
pub fn hochschild_dims_with_budget(
    a: &FDAlgebra<Rat>,
    k_max: usize,
    budget: usize,
) -> Result<HochschildReport, HochschildError> {
    let d = a.dim();
    let cochain_dims: Vec<usize> = (0..=k_max + 1).map(|k| d.pow(k as u32) * d).collect();
    for k in 0..=k_max {
        let entries = cochain_dims[k] * cochain_dims[k + 1];
        if entries > budget {
            return Err(HochschildError::CostGuardExceeded { k, entries, budget });
        }
    }
    let deltas: Vec<SparseMatrix> = (0..=k_max).map(|k| coboundary(a, k)).collect();
    let dims = dims_from_coboundaries(&deltas, &cochain_dims, k_max);
    Ok(HochschildReport {
        dims,
        cochain_dims: cochain_dims[..=k_max + 1].to_vec(),
        k_max,
    })
}

/// [`hochschild_dims_with_budget`] with the default budget; `kMax ≤ 3`.
pub fn hochschild_dims(
    a: &FDAlgebra<Rat>,
    k_max: usize,
) -> Result<HochschildReport, HochschildError> {
    assert!(k_max <= 3, "kMax > 3 requires the explicit budget entry point");
    hochschild_dims_with_budget(a, k_max, DEFAULT_ENTRY_BUDGET)
}

/// Independent implementation on the reduced bar complex
/// `Hom((A/k·1)^{⊗k}, A)`: the cohomology agrees with the unreduced one,
/// but all cochain spaces are smaller. Used as an oracle.
pub fn hochschild_dims_reduced(
    a: &FDAlgebra<Rat>,
    k_max: usize,
) -> Result<HochschildReport, HochschildError> {
    // change basis so the unit is the first basis vector; the remaining
    // vectors span a complement of k·1
    let unit = a.unit().to_vec();
    let p = unit
        .iter()
        .position(|c| !c.is_zero())
        .expect("the unit is nonzero");
    let d = a.dim();
    let mut basis = vec![unit];
    let mut labels = vec!["1".to_string()];
    for i in 0..d {
        if i != p {
            basis.push(a.basis_element(i));
            labels.push(a.basis_labels()[i].clone());
        }
    }
    let b = a.subalgebra_on_basis(&basis, labels);
    let v = d - 1; // dim of the complement

    // reduced elementary cochains: tuples over indices 1..d, values in B;
    // collapsed products drop their component along the unit (index 0)
    let tuple_count = |k: usize| v.pow(k as u32);
    let cochain_dims: Vec<usize> = (0..=k_max + 1).map(|k| tuple_count(k) * d).collect();
    let unrank_v = |mut idx: usize, len: usize| -> Vec<usize> {
        let mut out = vec![0; len];
        for slot in (0..len).rev() {
            out[slot] = idx % v + 1;
            idx /= v;
        }
        out
    };
    let rank_v = |tuple: &[usize]| tuple.iter().fold(0, |acc, &t| acc * v + (t - 1));
    let sign = |i: usize| Rat::from_integer(if i % 2 == 0 { 1 } else { -1 }.into());

    let coboundary_reduced = |k: usize| -> SparseMatrix {
        let ck = tuple_count(k) * d;
        let rows = tuple_count(k + 1) * d;
        let mut cols = vec![Vec::new(); ck];
        for col in 0..ck {
            let j = col % d;
            let w = unrank_v(col / d, k);
            let mut entries: HashMap<usize, Rat> = HashMap::new();
            let mut add = |row: usize, val: Rat| {
                let e = entries.entry(row).or_insert_with(Rat::zero);
                *e = e.clone() + val;
            };
            for t0 in 1..d {
                let prod = b.product_basis(t0, j);
                let mut tuple = vec![t0];
                tuple.extend_from_slice(&w);
                let base = rank_v(&tuple) * d;
                for (r, c) in prod.iter().enumerate() {
                    if !c.is_zero() {
                        add(base + r, c.clone());
                    }
                }
            }
            for i in 1..=k {
                for p in 1..d {
                    for q in 1..d {
                        let c = &b.product_basis(p, q)[w[i - 1]];
                        if c.is_zero() {
                            continue;
                        }
                        let mut tuple = Vec::with_capacity(k + 1);
                        tuple.extend_from_slice(&w[..i - 1]);
                        tuple.push(p);
                        tuple.push(q);
                        tuple.extend_from_slice(&w[i..]);
                        let row = rank_v(&tuple) * d + j;
                        add(row, sign(i) * c.clone());
                    }
                }
            }
            for tk in 1..d {
                let prod = b.product_basis(j, tk);
                let mut tuple = w.clone();
                tuple.push(tk);
                let base = rank_v(&tuple) * d;
                for (r, c) in prod.iter().enumerate() {
                    if !c.is_zero() {
                        add(base + r, sign(k + 1).clone() * c.clone());
                    }
                }
            }
            let mut out: Vec<(usize, Rat)> = entries
                .into_iter()
                .filter(|(_, x)| !x.is_zero())
                .collect();
            out.sort_by_key(|(r, _)| *r);
            cols[col] = out;
        }
        SparseMatrix { rows, cols }
    };

    let deltas: Vec<SparseMatrix> = (0..=k_max).map(coboundary_reduced).collect();
    let dims = dims_from_coboundaries(&deltas, &cochain_dims, k_max);
    Ok(HochschildReport {
        dims,
        cochain_dims: cochain_dims[..=k_max + 1].to_vec(),
        k_max,
    })
}

/// The smoothness-criterion record: `HH⁰` against the centre, and the
/// tangent/obstruction comparison `dim HH¹ = dim HH²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HHConsistency {
    pub hh0: usize,
    pub centre_dim: usize,
    pub hh0_matches: bool,
    pub hh1: usize,
    pub hh2: usize,
    pub tangent_obstruction_equal: bool,
}

pub fn hh_consistency(a: &FDAlgebra<Rat>) -> Result<HHConsistency, HochschildError> {
    let report = hochschild_dims(a, 2)?;
    let centre_dim = a.centre().dim();
    Ok(HHConsistency {
        hh0: report.dims[0],
        centre_dim,
        hh0_matches: report.dims[0] == centre_dim,
        hh1: report.dims[1],
        hh2: report.dims[2],
        tangent_obstruction_equal: report.dims[1] == report.dims[2],
    })
}
