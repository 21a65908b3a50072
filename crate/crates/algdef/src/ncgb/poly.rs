use super::{WeightedDeglexOrder, Word};
use crate::exactnum::{Field, Rat, RatFunc};
use std::collections::BTreeMap;
use std::fmt;

/// A noncommutative polynomial: a finite map from words to nonzero
/// coefficients in a coefficient field.
#[derive(Clone, PartialEq, Debug)]
pub struct NCPoly<F: Field> {
    terms: BTreeMap<Word, F>,
}

impl<F: Field> NCPoly<F> {
    pub fn zero() -> Self {
        NCPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        NCPoly::from_term(Word::one(), F::one())
    }

    pub fn from_term(w: Word, c: F) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        NCPoly { terms }
    }

    pub fn generator(g: u8) -> Self {
        NCPoly::from_term(Word::letter(g), F::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> F {
        self.terms.get(w).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, w: Word, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&w) {
            None => {
                self.terms.insert(w, c);
            }
            Some(old) => {
                let s = old.add(&c);
                if !s.is_zero() {
                    self.terms.insert(w, s);
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        NCPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return NCPoly::zero();
        }
        NCPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, a)| (w.clone(), a.mul(c)))
                .collect(),
        }
    }

    /// Concatenation product; noncommutative between distinct generators.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = NCPoly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a.mul(b));
            }
        }
        out
    }

    /// `a * self * b` for words `a`, `b`.
    pub fn sandwich(&self, a: &Word, b: &Word) -> Self {
        NCPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (a.concat(w).concat(b), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = NCPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// The order-largest word and its coefficient.
    pub fn leading(&self, order: &WeightedDeglexOrder) -> Option<(&Word, &F)> {
        self.terms
            .iter()
            .max_by(|(u, _), (v, _)| match order.compare(u, v) {
                super::Ordering3::LT => std::cmp::Ordering::Less,
                super::Ordering3::EQ => std::cmp::Ordering::Equal,
                super::Ordering3::GT => std::cmp::Ordering::Greater,
            })
    }

    pub fn max_word_len(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    pub fn map_coeffs<G: Field>(&self, mut f: impl FnMut(&F) -> G) -> NCPoly<G> {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }

    pub fn display<'a>(&'a self, alphabet: &'a [String]) -> NCPolyDisplay<'a, F> {
        NCPolyDisplay {
            poly: self,
            alphabet,
        }
    }
}

impl NCPoly<RatFunc> {
    /// Evaluate every coefficient at `t = lambda`.
    pub fn specialize(&self, lambda: &Rat) -> Result<NCPoly<Rat>, crate::exactnum::RatFunc> {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            match c.eval(lambda) {
                Ok(v) => out.add_term(w.clone(), v),
                Err(_) => return Err(c.clone()),
            }
        }
        Ok(out)
    }
}

pub struct NCPolyDisplay<'a, F: Field> {
    poly: &'a NCPoly<F>,
    alphabet: &'a [String],
}

impl<F: Field> fmt::Display for NCPolyDisplay<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.poly.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.is_one() && !w.is_empty() {
                write!(f, "{}", w.display(self.alphabet))?;
            } else if w.is_empty() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*{}", w.display(self.alphabet))?;
            }
        }
        Ok(())
    }
}
