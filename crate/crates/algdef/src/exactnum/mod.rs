//! Exact arithmetic kernel: arbitrary-precision rationals, univariate
//! polynomials, rational functions and exact linear algebra over any of them.

mod matrix;
mod ratfunc;
mod unipoly;

pub use matrix::{sparse_rank, Matrix};
pub use ratfunc::RatFunc;
pub use unipoly::UniPoly;

use num::BigInt;
use num::BigRational;
use std::fmt;

pub type Int = BigInt;
pub type Rat = BigRational;

/// Exact coefficient field. Implemented by [`Rat`] and [`RatFunc`].
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;
    fn from_rat(r: &Rat) -> Self;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn from_int(n: i64) -> Self {
        Self::from_rat(&Rat::from_integer(Int::from(n)))
    }

    /// Whether the value may be inverted when a rewrite rule is normalized
    /// to leading coefficient 1. Over a plain field every nonzero value
    /// qualifies; rational functions restrict this to nonzero constants so
    /// that rules stay specializable at every parameter value.
    fn unit_for_rules(&self) -> bool {
        !self.is_zero()
    }
}

impl Field for Rat {
    fn zero() -> Self {
        num::Zero::zero()
    }
    fn one() -> Self {
        num::One::one()
    }
    fn is_zero(&self) -> bool {
        num::Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn inv(&self) -> Self {
        assert!(!Field::is_zero(self), "inverse of zero");
        self.recip()
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
}

/// Shorthand for building a rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Shorthand for building a rational `p/q`.
pub fn rat_frac(p: i64, q: i64) -> Rat {
    Rat::new(Int::from(p), Int::from(q))
}
