//! Univariate polynomials over the rationals, dense representation.

use super::{rat, Field, Rat};
use std::fmt;

/// A univariate polynomial in the deformation parameter, with rational
/// coefficients indexed by degree. Trailing zeros are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| Field::is_zero(c)) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UniPoly::constant(rat(1))
    }

    pub fn constant(c: Rat) -> Self {
        UniPoly::new(vec![c])
    }

    /// The monomial `t`.
    pub fn var() -> Self {
        UniPoly::new(vec![rat(0), rat(1)])
    }

    /// `c * t^k`.
    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut coeffs = vec![rat(0); k + 1];
        coeffs[k] = c;
        UniPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(|| rat(0))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(|| rat(0))
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        UniPoly::new(out)
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![rat(0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if Field::is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = UniPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Euclidean division. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.degree().unwrap();
        let lc_inv = Field::inv(&divisor.leading_coeff());
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![rat(0); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = &rem[k] * &lc_inv;
            if !Field::is_zero(&c) {
                for (j, b) in divisor.coeffs.iter().enumerate() {
                    let sub = &c * b;
                    rem[k - dd + j] -= sub;
                }
            }
            quot[k - dd] = c;
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Divide through by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return UniPoly::zero();
        }
        self.scale(&Field::inv(&self.leading_coeff()))
    }

    /// Monic greatest common divisor. Errors only when both inputs are zero.
    pub fn gcd(&self, other: &Self) -> Result<Self, BothZero> {
        if self.is_zero() && other.is_zero() {
            return Err(BothZero);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Extended gcd: returns `(g, u, v)` with `u*self + v*other = g` and `g`
    /// monic.
    pub fn xgcd(&self, other: &Self) -> Result<(Self, Self, Self), BothZero> {
        if self.is_zero() && other.is_zero() {
            return Err(BothZero);
        }
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let (mut u0, mut u1) = (UniPoly::one(), UniPoly::zero());
        let (mut v0, mut v1) = (UniPoly::zero(), UniPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let nu = u0.sub(&q.mul(&u1));
            u0 = std::mem::replace(&mut u1, nu);
            let nv = v0.sub(&q.mul(&v1));
            v0 = std::mem::replace(&mut v1, nv);
        }
        let lc_inv = Field::inv(&r0.leading_coeff());
        Ok((r0.scale(&lc_inv), u0.scale(&lc_inv), v0.scale(&lc_inv)))
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rat(k as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = rat(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("gcd of two zero polynomials")]
pub struct BothZero;

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if Field::is_zero(c) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 if Field::is_one(c) => write!(f, "t")?,
                1 => write!(f, "{c}*t")?,
                _ if Field::is_one(c) => write!(f, "t^{k}")?,
                _ => write!(f, "{c}*t^{k}")?,
            }
        }
        Ok(())
    }
}
