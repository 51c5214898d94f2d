use super::{ExactColoring, FiniteColoring};
use crate::largesets::FinSet;

/// Exactly-large coloring that reads a dimension-`n` coloring off the first
/// `n` elements: `C'(s) = C(s_0, ..., s_{n-1})` when `s_0 >= n`, else 0.
pub struct EmbedFinite<C> {
    inner: C,
}

pub fn embed_finite<C: FiniteColoring>(inner: C) -> EmbedFinite<C> {
    assert!(inner.dimension() >= 1, "embedding needs dimension >= 1");
    EmbedFinite { inner }
}

impl<C: FiniteColoring> ExactColoring for EmbedFinite<C> {
    fn color(&self, s: &[u64]) -> u64 {
        let n = self.inner.dimension();
        if s[0] >= n as u64 {
            self.inner.color(&s[..n])
        } else {
            0
        }
    }
}

/// `H ∩ [n, ∞)`: turns a homogeneous set for the embedding into one for the
/// original dimension-`n` coloring.
pub fn embed_witness(h: &FinSet, n: usize) -> FinSet {
    FinSet::from_unsorted(h.iter().copied().filter(|&x| x >= n as u64))
}
