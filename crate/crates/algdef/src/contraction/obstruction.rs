use super::{ContractionSpec, DIndex};
use crate::algstruct::FDAlgebra;
use crate::exactnum::Rat;
use crate::ncgb::Word;
use crate::wedderburn::GeometricType;

/// The unique semisimple algebra a contraction algebra can deform to,
/// as a geometric type.
pub fn semisimple_target(spec: &ContractionSpec) -> GeometricType {
    match *spec {
        ContractionSpec::A { n } => GeometricType::from_pairs(&[(1, n - 1)]),
        ContractionSpec::D {
            n,
            m: DIndex::Finite(m),
        } if m <= n => GeometricType::from_pairs(&[(2, n - 1), (1, 2 * m)]),
        ContractionSpec::D { n, .. } => GeometricType::from_pairs(&[(2, n - 1), (1, 2 * n + 1)]),
    }
}

/// All semisimple algebras `M₂(k)^k × k^l` compatible with deforming a
/// `d`-dimensional algebra with centre dimension `z` containing a nilpotent
/// of index `p`:
///
/// * `4k + l = d` — deformations preserve dimension;
/// * `k + l ≤ z` — the centre dimension can only grow in the limit, and the
///   target's centre has dimension `k + l`;
/// * `2k + l ≥ p` — a nilpotent of index `p` forces matrices of total size
///   ≥ `p` in the target, and `M₂^k × k^l` caps that size at `2k + l`.
pub fn obstruction_solver(d: usize, z: usize, p: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for k in 0..=d / 4 {
        let l = d - 4 * k;
        if k + l <= z && 2 * k + l >= p {
            out.push((k, l));
        }
    }
    out
}

/// Verdict of the spanning argument bounding matrix block sizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockBound {
    /// The words `{aⁱ} ∪ {aⁱ·b}` span the algebra. Any `M_s(k)` quotient of
    /// any deformation target is then spanned by `s + s = 2s` elements of
    /// this shape, so `2s ≥ s²` and `s ≤ 2`.
    BoundTwo,
    NoBound,
}

/// Check whether powers of `a` together with powers of `a` times `b` span.
pub fn matrix_block_bound(alg: &FDAlgebra<Rat>, a: &[Rat], b: &[Rat]) -> BlockBound {
    let d = alg.dim();
    let mut vectors = Vec::with_capacity(2 * (d + 1));
    let mut power = alg.unit().to_vec();
    for _ in 0..=d {
        vectors.push(power.clone());
        vectors.push(alg.mul(&power, b));
        power = alg.mul(&power, a);
    }
    let span = crate::algstruct::Subspace::from_spanning(d, vectors);
    if span.dim() == d {
        BlockBound::BoundTwo
    } else {
        BlockBound::NoBound
    }
}

/// Words `x^i` and `x^i·y` used by the spanning argument, for reporting.
pub fn spanning_words(dim: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for i in 0..=dim {
        out.push(Word::power(0, i));
        out.push(Word::power(0, i).concat(&Word::letter(1)));
    }
    out
}
