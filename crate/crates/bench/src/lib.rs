//! Fixtures shared by the benchmarks.

use xramsey_core::colorings::FnFinite;
use xramsey_core::FinSet;

/// Deterministic hash of a tuple under `seed`.
pub fn mix(seed: u64, t: &[u64]) -> u64 {
    let mut h = seed ^ 0x9e37_79b9_7f4a_7c15;
    for &x in t {
        h = (h ^ x).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        h ^= h >> 29;
    }
    h = h.wrapping_mul(0x94d0_49bb_1331_11eb);
    h ^ (h >> 32)
}

/// A seeded pseudo-random 2-coloring of `dim`-tuples.
pub fn random_coloring(dim: usize, seed: u64) -> FnFinite<impl Fn(&[u64]) -> u64 + Send + Sync> {
    FnFinite::new(dim, move |t: &[u64]| mix(seed, t) & 1)
}

pub fn evens(lo: u64, hi: u64) -> FinSet {
    FinSet::from_unsorted((lo..=hi).filter(|x| x % 2 == 0))
}
