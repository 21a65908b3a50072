use std::fmt;

/// A word in the generators of the free algebra: a sequence of generator
/// indices. The empty word is the monomial `1`.
///
/// The derived `Ord` is only a storage order for maps; the monomial order
/// lives in [`super::WeightedDeglexOrder`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn one() -> Self {
        Word(Vec::new())
    }

    pub fn letter(g: u8) -> Self {
        Word(vec![g])
    }

    /// `g^k`.
    pub fn power(g: u8, k: usize) -> Self {
        Word(vec![g; k])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }

    /// First position at which `sub` occurs as a factor, if any.
    pub fn find_subword(&self, sub: &Word) -> Option<usize> {
        if sub.is_empty() {
            return Some(0);
        }
        if sub.len() > self.len() {
            return None;
        }
        (0..=self.len() - sub.len()).find(|&i| self.0[i..i + sub.len()] == sub.0[..])
    }

    pub fn contains_subword(&self, sub: &Word) -> bool {
        self.find_subword(sub).is_some()
    }

    pub fn ends_with(&self, suffix: &[u8]) -> bool {
        self.0.ends_with(suffix)
    }

    pub fn display<'a>(&'a self, alphabet: &'a [String]) -> WordDisplay<'a> {
        WordDisplay {
            word: self,
            alphabet,
        }
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    alphabet: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "1");
        }
        let mut i = 0;
        let mut first = true;
        while i < self.word.len() {
            let g = self.word.0[i];
            let mut run = 1;
            while i + run < self.word.len() && self.word.0[i + run] == g {
                run += 1;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            let name = self
                .alphabet
                .get(g as usize)
                .map(|s| s.as_str())
                .unwrap_or("?");
            if run == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{run}")?;
            }
            i += run;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subword_search() {
        let w = Word(vec![0, 0, 1, 0]);
        assert_eq!(w.find_subword(&Word(vec![0, 1])), Some(1));
        assert_eq!(w.find_subword(&Word(vec![1, 1])), None);
        assert!(w.contains_subword(&Word::one()));
    }

    #[test]
    fn display_powers() {
        let alphabet = vec!["x".to_string(), "y".to_string()];
        let w = Word(vec![0, 0, 0, 1]);
        assert_eq!(w.display(&alphabet).to_string(), "x^3*y");
        assert_eq!(Word::one().display(&alphabet).to_string(), "1");
    }
}
