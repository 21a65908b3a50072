//! Rational functions in the deformation parameter, always stored reduced
//! with a monic denominator.

use super::{Field, Rat, UniPoly};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc {
    num: UniPoly,
    den: UniPoly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("denominator vanishes at the evaluation point")]
pub struct PoleAtEvaluationPoint;

impl RatFunc {
    /// Build `num/den` in reduced form. Panics if `den` is zero.
    pub fn new(num: UniPoly, den: UniPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc {
                num: UniPoly::zero(),
                den: UniPoly::one(),
            };
        }
        let g = num.gcd(&den).expect("nonzero inputs");
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lc_inv = Field::inv(&den.leading_coeff());
        RatFunc {
            num: num.scale(&lc_inv),
            den: den.monic(),
        }
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RatFunc {
            num: p,
            den: UniPoly::one(),
        }
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UniPoly {
        &self.den
    }

    /// True when the stored reduced form has trivial denominator.
    pub fn is_polynomial(&self) -> bool {
        self.den == UniPoly::one()
    }

    /// The underlying polynomial, when [`is_polynomial`](Self::is_polynomial).
    pub fn as_poly(&self) -> Option<&UniPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    /// True for a nonzero constant, i.e. a unit of the polynomial ring.
    pub fn is_unit_constant(&self) -> bool {
        self.is_polynomial() && self.num.is_constant() && !self.num.is_zero()
    }

    /// Evaluate the stored reduced form at `t = x`.
    pub fn eval(&self, x: &Rat) -> Result<Rat, PoleAtEvaluationPoint> {
        let d = self.den.eval(x);
        if Field::is_zero(&d) {
            return Err(PoleAtEvaluationPoint);
        }
        Ok(self.num.eval(x) * Field::inv(&d))
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc::from_poly(UniPoly::zero())
    }
    fn one() -> Self {
        RatFunc::from_poly(UniPoly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        RatFunc::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }
    fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        RatFunc::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }
    fn inv(&self) -> Self {
        assert!(!self.num.is_zero(), "inverse of zero rational function");
        RatFunc::new(self.den.clone(), self.num.clone())
    }
    fn from_rat(r: &Rat) -> Self {
        RatFunc::from_poly(UniPoly::constant(r.clone()))
    }
    fn unit_for_rules(&self) -> bool {
        self.is_unit_constant()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::rat;
    use super::*;

    #[test]
    fn eval_uses_reduced_form() {
        // (t^2-1)/(t-1) reduces to t+1, which evaluates to 2 at t = 1.
        let f = RatFunc::new(
            UniPoly::new(vec![rat(-1), rat(0), rat(1)]),
            UniPoly::new(vec![rat(-1), rat(1)]),
        );
        assert!(f.is_polynomial());
        assert_eq!(f.eval(&rat(1)).unwrap(), rat(2));
    }

    #[test]
    fn pole_detection() {
        let f = RatFunc::new(UniPoly::one(), UniPoly::var());
        assert_eq!(f.eval(&rat(0)), Err(PoleAtEvaluationPoint));
        assert_eq!(f.eval(&rat(2)).unwrap(), rat_half(1, 2));
        fn rat_half(p: i64, q: i64) -> Rat {
            super::super::rat_frac(p, q)
        }
    }

    #[test]
    fn poly_eval() {
        let f = RatFunc::from_poly(UniPoly::new(vec![rat(-1), rat(0), rat(1)]));
        assert_eq!(f.eval(&rat(2)).unwrap(), rat(3));
    }
}
