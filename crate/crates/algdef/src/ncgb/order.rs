use super::Word;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Ordering3 {
    LT,
    EQ,
    GT,
}

/// Weighted deglex word order: compare total weight, break ties left-to-right
/// with higher generator index larger.
///
/// Admissibility: the order is total, multiplicative and well-founded on
/// words of bounded length, with the empty word minimal. Two distinct words
/// of equal weight can never be prefixes of one another (all weights are
/// positive), so the lexicographic tie-break is multiplicative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedDeglexOrder {
    weights: Vec<u64>,
}

impl WeightedDeglexOrder {
    pub fn new(weights: Vec<u64>) -> Self {
        assert!(weights.iter().all(|&w| w > 0), "weights must be positive");
        WeightedDeglexOrder { weights }
    }

    /// The order used for the contraction-algebra presentations: weight 1 on
    /// every generator except the last, which is heavy enough that its square
    /// exceeds every word within the degree bound.
    pub fn heavy_last(num_generators: usize, degree_bound: usize) -> Self {
        let mut weights = vec![1u64; num_generators];
        if let Some(last) = weights.last_mut() {
            *last = degree_bound as u64 + 1;
        }
        WeightedDeglexOrder::new(weights)
    }

    pub fn weight(&self, w: &Word) -> u64 {
        w.0.iter().map(|&g| self.weights[g as usize]).sum()
    }

    pub fn compare(&self, u: &Word, v: &Word) -> Ordering3 {
        let (wu, wv) = (self.weight(u), self.weight(v));
        if wu != wv {
            return if wu < wv {
                Ordering3::LT
            } else {
                Ordering3::GT
            };
        }
        for (a, b) in u.0.iter().zip(v.0.iter()) {
            if a != b {
                return if a < b { Ordering3::LT } else { Ordering3::GT };
            }
        }
        // equal weight, one a prefix of the other only when equal
        match u.len().cmp(&v.len()) {
            std::cmp::Ordering::Less => Ordering3::LT,
            std::cmp::Ordering::Equal => Ordering3::EQ,
            std::cmp::Ordering::Greater => Ordering3::GT,
        }
    }

    pub fn lt(&self, u: &Word, v: &Word) -> bool {
        self.compare(u, v) == Ordering3::LT
    }
}
