//! Exact factorization of rational polynomials.
//!
//! Pipeline: Yun's squarefree decomposition over the rationals, then for
//! each squarefree part a factorization over the integers — reduction
//! modulo a small prime keeping the polynomial squarefree, deterministic
//! Berlekamp factorization there, linear Hensel lifting past the Mignotte
//! coefficient bound, and subset recombination of the modular factors.

use super::WedderburnError;
use crate::exactnum::{Int, Rat, UniPoly};
use num::{BigInt, One, Signed, Zero};

/// Complete factorization `constant · Π factorᵢ^{multᵢ}` with monic
/// irreducible rational factors, pairwise distinct.
#[derive(Clone, Debug, PartialEq)]
pub struct IrreducibleFactorization {
    pub factors: Vec<(UniPoly, usize)>,
    pub constant: Rat,
}

impl IrreducibleFactorization {
    /// Multiply the factorization back out (used as a test oracle).
    pub fn expand(&self) -> UniPoly {
        let mut out = UniPoly::constant(self.constant.clone());
        for (f, m) in &self.factors {
            out = out.mul(&f.pow(*m));
        }
        out
    }
}

pub fn factor_poly_rational(p: &UniPoly) -> Result<IrreducibleFactorization, WedderburnError> {
    let Some(deg) = p.degree() else {
        return Err(WedderburnError::ZeroPolynomial);
    };
    let constant = p.leading_coeff().clone();
    if deg == 0 {
        return Ok(IrreducibleFactorization {
            factors: Vec::new(),
            constant,
        });
    }
    let monic = p.monic();
    let mut factors = Vec::new();
    for (part, mult) in squarefree_decomposition(&monic) {
        let zpoly = clear_denominators(&part);
        for zfac in factor_squarefree_integer(&zpoly) {
            factors.push((integer_to_monic(&zfac), mult));
        }
    }
    factors.sort_by(|a, b| {
        a.0.degree()
            .cmp(&b.0.degree())
            .then_with(|| format!("{}", a.0).cmp(&format!("{}", b.0)))
    });
    Ok(IrreducibleFactorization { factors, constant })
}

/// Yun's algorithm: monic `f` = Π partᵢ^{multᵢ} with the parts squarefree
/// and pairwise coprime.
fn squarefree_decomposition(f: &UniPoly) -> Vec<(UniPoly, usize)> {
    let df = f.derivative();
    let u = f.gcd(&df).expect("f nonzero");
    let mut v = f.div_rem(&u).0;
    let mut w = df.div_rem(&u).0;
    let mut out = Vec::new();
    let mut i = 1;
    while v.degree() != Some(0) {
        let s = w.sub(&v.derivative());
        let a = v.gcd(&s).expect("v nonzero");
        if a.degree() != Some(0) {
            out.push((a.clone(), i));
        }
        v = v.div_rem(&a).0;
        w = s.div_rem(&a).0;
        i += 1;
    }
    out
}

/// Scale a monic rational polynomial to a primitive integer polynomial with
/// positive leading coefficient.
fn clear_denominators(p: &UniPoly) -> Vec<Int> {
    let deg = p.degree().expect("nonzero");
    let mut lcm = BigInt::one();
    for i in 0..=deg {
        let d = p.coeff(i).denom().clone();
        lcm = &lcm / num::Integer::gcd(&lcm, &d) * d;
    }
    let coeffs: Vec<Int> = (0..=deg)
        .map(|i| {
            let c = p.coeff(i);
            c.numer() * (&lcm / c.denom())
        })
        .collect();
    primitive_part(&coeffs)
}

fn integer_to_monic(z: &[Int]) -> UniPoly {
    let lead = z.last().expect("nonzero").clone();
    UniPoly::new(
        z.iter()
            .map(|c| Rat::new(c.clone(), lead.clone()))
            .collect(),
    )
}

// ---- integer polynomial helpers (dense, ascending, no leading zeros) ----

fn znormalize(mut v: Vec<Int>) -> Vec<Int> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn zmul(a: &[Int], b: &[Int]) -> Vec<Int> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    znormalize(out)
}

fn zsub(a: &[Int], b: &[Int]) -> Vec<Int> {
    let n = a.len().max(b.len());
    let mut out = vec![BigInt::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    znormalize(out)
}

/// Division by a monic divisor; returns (quotient, remainder).
fn zdiv_monic(a: &[Int], b: &[Int]) -> (Vec<Int>, Vec<Int>) {
    assert!(b.last().is_some_and(|c| c.is_one()));
    let mut rem = a.to_vec();
    if a.len() < b.len() {
        return (Vec::new(), znormalize(rem));
    }
    let mut quot = vec![BigInt::zero(); a.len() - b.len() + 1];
    for k in (0..quot.len()).rev() {
        let c = rem[k + b.len() - 1].clone();
        if c.is_zero() {
            continue;
        }
        quot[k] = c.clone();
        for (j, bj) in b.iter().enumerate() {
            rem[k + j] -= &c * bj;
        }
    }
    (znormalize(quot), znormalize(rem))
}

fn content(v: &[Int]) -> Int {
    let mut g = BigInt::zero();
    for c in v {
        g = num::Integer::gcd(&g, c);
    }
    g
}

fn primitive_part(v: &[Int]) -> Vec<Int> {
    let v = znormalize(v.to_vec());
    if v.is_empty() {
        return v;
    }
    let mut g = content(&v);
    if v.last().expect("nonzero").is_negative() {
        g = -g;
    }
    v.iter().map(|c| c / &g).collect()
}

// ---- arithmetic modulo a small prime ----

type FpPoly = Vec<i64>;

fn fp_normalize(mut v: FpPoly) -> FpPoly {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn fp_reduce(a: &[Int], p: i64) -> FpPoly {
    let bp = BigInt::from(p);
    fp_normalize(
        a.iter()
            .map(|c| {
                let m = ((c % &bp) + &bp) % &bp;
                i64::try_from(&m).expect("residue fits")
            })
            .collect(),
    )
}

fn fp_mul(a: &[i64], b: &[i64], p: i64) -> FpPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + (ai as i128 * bj as i128 % p as i128) as i64) % p;
        }
    }
    fp_normalize(out)
}

fn fp_sub(a: &[i64], b: &[i64], p: i64) -> FpPoly {
    let n = a.len().max(b.len());
    let mut out = vec![0i64; n];
    for (i, &c) in a.iter().enumerate() {
        out[i] = c;
    }
    for (i, &c) in b.iter().enumerate() {
        out[i] = ((out[i] - c) % p + p) % p;
    }
    fp_normalize(out)
}

fn fp_scale(a: &[i64], c: i64, p: i64) -> FpPoly {
    fp_normalize(
        a.iter()
            .map(|&x| (x as i128 * c as i128 % p as i128) as i64)
            .collect(),
    )
}

fn inv_mod(a: i64, p: i64) -> i64 {
    // Fermat; p prime
    let mut result: i128 = 1;
    let mut base = (a % p + p) as i128 % p as i128;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as i128;
        }
        base = base * base % p as i128;
        e >>= 1;
    }
    result as i64
}

fn fp_rem(a: &[i64], b: &[i64], p: i64) -> FpPoly {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p);
    while rem.len() > db {
        let k = rem.len() - 1 - db;
        let c = (rem[rem.len() - 1] as i128 * lead_inv as i128 % p as i128) as i64;
        if c != 0 {
            for (j, &bj) in b.iter().enumerate() {
                rem[k + j] = ((rem[k + j] - (c as i128 * bj as i128 % p as i128) as i64) % p + p) % p;
            }
        }
        rem.pop();
        rem = fp_normalize(rem);
        if rem.len() <= db {
            break;
        }
    }
    fp_normalize(rem)
}

fn fp_divmod(a: &[i64], b: &[i64], p: i64) -> (FpPoly, FpPoly) {
    let db = b.len() - 1;
    if a.len() < b.len() {
        return (Vec::new(), a.to_vec());
    }
    let lead_inv = inv_mod(b[db], p);
    let mut rem = a.to_vec();
    let mut quot = vec![0i64; a.len() - db];
    for k in (0..quot.len()).rev() {
        if rem.len() < k + db + 1 {
            continue;
        }
        let c = (rem[k + db] as i128 * lead_inv as i128 % p as i128) as i64;
        if c == 0 {
            continue;
        }
        quot[k] = c;
        for (j, &bj) in b.iter().enumerate() {
            rem[k + j] = ((rem[k + j] - (c as i128 * bj as i128 % p as i128) as i64) % p + p) % p;
        }
        rem = fp_normalize(rem);
    }
    (fp_normalize(quot), fp_normalize(rem))
}

fn fp_monic(a: &[i64], p: i64) -> FpPoly {
    match a.last() {
        None => Vec::new(),
        Some(&l) => fp_scale(a, inv_mod(l, p), p),
    }
}

fn fp_gcd(a: &[i64], b: &[i64], p: i64) -> FpPoly {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    while !b.is_empty() {
        let r = fp_rem(&a, &b, p);
        a = b;
        b = r;
    }
    fp_monic(&a, p)
}

/// Extended Euclid: `(g, s, t)` monic with `s·a + t·b = g`.
fn fp_xgcd(a: &[i64], b: &[i64], p: i64) -> (FpPoly, FpPoly, FpPoly) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![1i64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1i64]);
    while !r1.is_empty() {
        let (q, r) = fp_divmod(&r0, &r1, p);
        let ns = fp_sub(&s0, &fp_mul(&q, &s1, p), p);
        let nt = fp_sub(&t0, &fp_mul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = ns;
        t0 = t1;
        t1 = nt;
    }
    let l = r0.last().copied().unwrap_or(1);
    let li = inv_mod(l, p);
    (fp_scale(&r0, li, p), fp_scale(&s0, li, p), fp_scale(&t0, li, p))
}

fn fp_derivative(a: &[i64], p: i64) -> FpPoly {
    fp_normalize(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| ((i as i128 % p as i128) * c as i128 % p as i128) as i64)
            .collect(),
    )
}

/// `x^e mod f` by repeated squaring.
fn fp_xpow_mod(e: i64, f: &[i64], p: i64) -> FpPoly {
    let mut result = vec![1i64];
    let mut base = fp_rem(&[0, 1], f, p);
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result = fp_rem(&fp_mul(&result, &base, p), f, p);
        }
        base = fp_rem(&fp_mul(&base, &base, p), f, p);
        e >>= 1;
    }
    result
}

/// Deterministic Berlekamp factorization of a monic squarefree polynomial
/// over F_p. Returns monic irreducible factors.
fn berlekamp(f: &[i64], p: i64) -> Vec<FpPoly> {
    let d = f.len() - 1;
    if d <= 1 {
        return vec![f.to_vec()];
    }
    // rows of the Frobenius matrix: x^{ip} mod f
    let xp = fp_xpow_mod(p, f, p);
    let mut rows = Vec::with_capacity(d);
    let mut cur = vec![1i64];
    for _ in 0..d {
        let mut row = vec![0i64; d];
        for (j, &c) in cur.iter().enumerate() {
            row[j] = c;
        }
        rows.push(row);
        cur = fp_rem(&fp_mul(&cur, &xp, p), f, p);
    }
    // kernel of (Q − I)ᵀ: vectors v with v·Q = v
    let mut mat = vec![vec![0i64; d]; d];
    for i in 0..d {
        for j in 0..d {
            mat[j][i] = rows[i][j]; // transpose
        }
        mat[i][i] = ((mat[i][i] - 1) % p + p) % p;
    }
    let kernel = fp_kernel(&mat, p);
    let r = kernel.len();
    if r == 1 {
        return vec![f.to_vec()];
    }
    let mut factors = vec![f.to_vec()];
    'outer: for v in &kernel {
        let vpoly = fp_normalize(v.clone());
        if vpoly.len() <= 1 {
            continue; // constant vector splits nothing
        }
        let mut next = Vec::new();
        for g in factors.drain(..) {
            if g.len() - 1 <= 1 {
                next.push(g);
                continue;
            }
            let mut pieces = vec![g];
            for c in 0..p {
                let mut still = Vec::new();
                for piece in pieces.drain(..) {
                    if piece.len() - 1 <= 1 {
                        still.push(piece);
                        continue;
                    }
                    let shifted = fp_sub(&vpoly, &[c], p);
                    let h = fp_gcd(&piece, &shifted, p);
                    if h.len() > 1 && h.len() < piece.len() {
                        let (q, _) = fp_divmod(&piece, &h, p);
                        still.push(h);
                        still.push(fp_monic(&q, p));
                    } else {
                        still.push(piece);
                    }
                }
                pieces = still;
            }
            next.extend(pieces);
        }
        factors = next;
        if factors.len() == r {
            break 'outer;
        }
    }
    factors
}

/// Gaussian elimination kernel basis over F_p.
fn fp_kernel(mat: &[Vec<i64>], p: i64) -> Vec<Vec<i64>> {
    let rows = mat.len();
    let cols = if rows == 0 { 0 } else { mat[0].len() };
    let mut m: Vec<Vec<i64>> = mat.to_vec();
    let mut pivot_col_of_row = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pr);
        let inv = inv_mod(m[r][c], p);
        for j in 0..cols {
            m[r][j] = (m[r][j] as i128 * inv as i128 % p as i128) as i64;
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    m[i][j] = ((m[i][j] - (f as i128 * m[r][j] as i128 % p as i128) as i64) % p
                        + p)
                        % p;
                }
            }
        }
        pivot_col_of_row.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let pivots: std::collections::BTreeSet<usize> = pivot_col_of_row.iter().copied().collect();
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0i64; cols];
        v[free] = 1;
        for (row, &pc) in pivot_col_of_row.iter().enumerate() {
            v[pc] = (p - m[row][free] % p) % p;
        }
        basis.push(v);
    }
    basis
}

// ---- Hensel lifting ----

/// Linear Hensel lift of the pair `(u, v)` with `G ≡ u·v (mod p)` up to
/// modulus at least `target`; all of `G`, `u`, `v` monic.
fn hensel_pair(
    g: &[Int],
    u0: &[i64],
    v0: &[i64],
    p: i64,
    target: &Int,
) -> (Vec<Int>, Vec<Int>) {
    let (one, a, b) = fp_xgcd(u0, v0, p);
    assert_eq!(one, vec![1i64], "modular factors must be coprime");
    let mut u: Vec<Int> = u0.iter().map(|&c| BigInt::from(c)).collect();
    let mut v: Vec<Int> = v0.iter().map(|&c| BigInt::from(c)).collect();
    let mut q = BigInt::from(p);
    while &q < target {
        let diff = zsub(g, &zmul(&u, &v));
        let e: Vec<Int> = diff.iter().map(|c| c / &q).collect();
        let e_p = fp_reduce(&e, p);
        let s = fp_rem(&fp_mul(&b, &e_p, p), u0, p);
        let t = fp_rem(&fp_mul(&a, &e_p, p), v0, p);
        add_scaled(&mut u, &s, &q);
        add_scaled(&mut v, &t, &q);
        q *= p;
    }
    (u, v)
}

fn add_scaled(target: &mut Vec<Int>, delta: &[i64], q: &Int) {
    if target.len() < delta.len() {
        target.resize(delta.len(), BigInt::zero());
    }
    for (i, &c) in delta.iter().enumerate() {
        target[i] += q * c;
    }
}

/// Lift the full list of pairwise-coprime monic modular factors of monic `g`.
fn hensel_list(g: &[Int], factors: &[FpPoly], p: i64, target: &Int) -> Vec<Vec<Int>> {
    if factors.len() == 1 {
        return vec![reduce_symmetric(g, target)];
    }
    let u0 = &factors[0];
    let mut v0 = vec![1i64];
    for f in &factors[1..] {
        v0 = fp_mul(&v0, f, p);
    }
    let (u, v) = hensel_pair(g, u0, &v0, p, target);
    let mut out = vec![reduce_symmetric(&u, target)];
    out.extend(hensel_list(
        &reduce_nonneg(&v, target),
        &factors[1..],
        p,
        target,
    ));
    out
}

fn reduce_nonneg(a: &[Int], q: &Int) -> Vec<Int> {
    znormalize(a.iter().map(|c| ((c % q) + q) % q).collect())
}

fn reduce_symmetric(a: &[Int], q: &Int) -> Vec<Int> {
    let half = q / 2;
    znormalize(
        a.iter()
            .map(|c| {
                let m = ((c % q) + q) % q;
                if m > half {
                    m - q
                } else {
                    m
                }
            })
            .collect(),
    )
}

// ---- top level over the integers ----

const PRIMES: &[i64] = &[
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149,
];

/// Factor a primitive squarefree integer polynomial of degree ≥ 1 into
/// primitive irreducible integer polynomials.
fn factor_squarefree_integer(f: &[Int]) -> Vec<Vec<Int>> {
    let d = f.len() - 1;
    if d == 1 {
        return vec![f.to_vec()];
    }
    // monic transform G(x) = ℓ^{d−1}·f(x/ℓ): coefficient i picks up ℓ^{d−1−i}
    let lead = f.last().expect("nonzero").clone();
    let g: Vec<Int> = f
        .iter()
        .enumerate()
        .map(|(i, c)| {
            if i == d {
                BigInt::one()
            } else {
                c * lead.pow((d - 1 - i) as u32)
            }
        })
        .collect();
    debug_assert!(g.last().is_some_and(|c| c.is_one()));

    let p = *PRIMES
        .iter()
        .find(|&&p| {
            let gp = fp_reduce(&g, p);
            gp.len() == d + 1 && fp_gcd(&gp, &fp_derivative(&gp, p), p).len() == 1
        })
        .expect("some small prime keeps the polynomial squarefree");

    let gp = fp_monic(&fp_reduce(&g, p), p);
    let modular = berlekamp(&gp, p);
    if modular.len() == 1 {
        return vec![f.to_vec()];
    }

    // Mignotte-style bound: factors of monic G have coefficients bounded by
    // 2^d · ‖G‖₂
    let norm_sq: Int = g.iter().map(|c| c * c).sum();
    let bound = (BigInt::one() << d) * (norm_sq.sqrt() + 1);
    let mut target = BigInt::from(p);
    while target <= &bound * 2 {
        target *= p;
    }

    let lifted = hensel_list(&g, &modular, p, &target);

    // subset recombination against G, mapping each true factor back to f
    let mut remaining: Vec<Vec<Int>> = lifted;
    let mut g_cur = g;
    let mut out = Vec::new();
    let mut size = 1;
    while 2 * size <= remaining.len() {
        let mut found = None;
        'search: for combo in combinations(remaining.len(), size) {
            let mut h = vec![BigInt::one()];
            for &i in &combo {
                h = reduce_nonneg(&zmul(&h, &remaining[i]), &target);
            }
            let h = reduce_symmetric(&h, &target);
            if h.last().is_some_and(|c| c.is_one()) {
                let (q, r) = zdiv_monic(&g_cur, &h);
                if r.is_empty() {
                    found = Some((combo, h, q));
                    break 'search;
                }
            }
        }
        match found {
            Some((combo, h, q)) => {
                out.push(h);
                g_cur = q;
                let keep: Vec<Vec<Int>> = remaining
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !combo.contains(i))
                    .map(|(_, v)| v.clone())
                    .collect();
                remaining = keep;
            }
            None => size += 1,
        }
    }
    if g_cur.len() > 1 {
        out.push(g_cur);
    }
    // undo the monic transform: H(x) ↦ primitivePart(H(ℓ·x))
    out.iter()
        .map(|h| {
            let scaled: Vec<Int> = h
                .iter()
                .enumerate()
                .map(|(i, c)| c * lead.pow(i as u32))
                .collect();
            primitive_part(&scaled)
        })
        .collect()
}

/// All size-`k` index subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, rat_frac};

    fn poly(coeffs: &[i64]) -> UniPoly {
        UniPoly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn difference_of_squares() {
        let f = factor_poly_rational(&poly(&[-1, 0, 1])).unwrap();
        assert_eq!(
            f.factors,
            vec![(poly(&[-1, 1]), 1), (poly(&[1, 1]), 1)]
        );
        assert_eq!(f.constant, rat(1));
    }

    #[test]
    fn irreducible_quadratic() {
        let f = factor_poly_rational(&poly(&[1, 0, 1])).unwrap();
        assert_eq!(f.factors, vec![(poly(&[1, 0, 1]), 1)]);
    }

    #[test]
    fn fourth_power_minus_one() {
        let f = factor_poly_rational(&poly(&[-1, 0, 0, 0, 1])).unwrap();
        assert_eq!(
            f.factors,
            vec![
                (poly(&[-1, 1]), 1),
                (poly(&[1, 1]), 1),
                (poly(&[1, 0, 1]), 1)
            ]
        );
    }

    #[test]
    fn multiplicities_and_constant() {
        // 6·(x−1)²·(x²+x+1)
        let input = poly(&[6])
            .mul(&poly(&[-1, 1]).pow(2))
            .mul(&poly(&[1, 1, 1]));
        let f = factor_poly_rational(&input).unwrap();
        assert_eq!(f.constant, rat(6));
        assert_eq!(
            f.factors,
            vec![(poly(&[-1, 1]), 2), (poly(&[1, 1, 1]), 1)]
        );
        assert_eq!(f.expand(), input);
    }

    #[test]
    fn nonmonic_and_rational_coefficients() {
        // (2x−3)(3x+5)(x²−2) scaled by 1/7
        let input = poly(&[-3, 2])
            .mul(&poly(&[5, 3]))
            .mul(&poly(&[-2, 0, 1]))
            .scale(&rat_frac(1, 7));
        let f = factor_poly_rational(&input).unwrap();
        assert_eq!(f.expand(), input);
        assert_eq!(f.factors.len(), 3);
        assert!(f.factors.iter().all(|(p, _)| p.leading_coeff() == rat(1)));
        assert_eq!(f.constant, rat_frac(6, 7));
    }

    #[test]
    fn swinnerton_dyer_style_recombination() {
        // minimal polynomial of √2+√3: x⁴ − 10x² + 1, irreducible over Q but
        // split into quadratics modulo every prime — exercises recombination
        let input = poly(&[1, 0, -10, 0, 1]);
        let f = factor_poly_rational(&input).unwrap();
        assert_eq!(f.factors, vec![(input.clone(), 1)]);
    }

    #[test]
    fn large_mixed_example() {
        // (x³+x+1)(x⁴−10x²+1)(x−7)³·(x²+1)
        let input = poly(&[1, 1, 0, 1])
            .mul(&poly(&[1, 0, -10, 0, 1]))
            .mul(&poly(&[-7, 1]).pow(3))
            .mul(&poly(&[1, 0, 1]));
        let f = factor_poly_rational(&input).unwrap();
        assert_eq!(f.expand(), input);
        let degrees: Vec<(Option<usize>, usize)> =
            f.factors.iter().map(|(p, m)| (p.degree(), *m)).collect();
        assert!(degrees.contains(&(Some(1), 3)));
        assert!(degrees.contains(&(Some(3), 1)));
        assert!(degrees.contains(&(Some(4), 1)));
        assert!(degrees.contains(&(Some(2), 1)));
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert_eq!(
            factor_poly_rational(&UniPoly::zero()),
            Err(WedderburnError::ZeroPolynomial)
        );
    }

    #[test]
    fn constant_polynomial() {
        let f = factor_poly_rational(&poly(&[5])).unwrap();
        assert!(f.factors.is_empty());
        assert_eq!(f.constant, rat(5));
    }
}
