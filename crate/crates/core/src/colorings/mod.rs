//! Colorings of exactly large sets and of fixed-size tuples.
//!
//! All colorings here are pure: a coloring may memoize internally, but equal
//! inputs always get equal colors and evaluation is safe from many threads.

mod capture;
mod embed;
mod hard;
mod regressive;
mod tower;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

pub use capture::{c2_coloring, cn_coloring, comega_coloring, COmega, CaptureFamily, CnColoring, Direction};
pub use embed::{embed_finite, embed_witness, EmbedFinite};
pub use hard::{dh_coloring, km_dh_coloring, DhColoring};
pub use regressive::{km_to_rt, km_witness, rt_via_km, KmToRt};
pub use tower::{
    diagonal_coloring, tower_step, DiagonalColoring, Instantiated, OracleColoring, ProgramColoring, Tower, TowerStep,
};

/// A coloring of exactly large sets.
///
/// `color` is only called on strictly increasing, exactly large input.
pub trait ExactColoring: Send + Sync {
    fn color(&self, set: &[u64]) -> u64;

    /// Number of colors; two-colorings return only 0 and 1.
    fn palette(&self) -> u64 {
        2
    }
}

/// An exactly-large coloring with `C(S) < min(S)` whenever `min(S) > 0`.
pub trait RegressiveColoring: ExactColoring {}

/// A coloring of strictly increasing `dimension()`-tuples.
pub trait FiniteColoring: Send + Sync {
    fn dimension(&self) -> usize;
    fn color(&self, tuple: &[u64]) -> u64;
}

impl<T: ExactColoring + ?Sized> ExactColoring for Arc<T> {
    fn color(&self, set: &[u64]) -> u64 {
        (**self).color(set)
    }
    fn palette(&self) -> u64 {
        (**self).palette()
    }
}

impl<T: ExactColoring + ?Sized> ExactColoring for &T {
    fn color(&self, set: &[u64]) -> u64 {
        (**self).color(set)
    }
    fn palette(&self) -> u64 {
        (**self).palette()
    }
}

impl<T: RegressiveColoring + ?Sized> RegressiveColoring for Arc<T> {}
impl<T: RegressiveColoring + ?Sized> RegressiveColoring for &T {}

impl<T: FiniteColoring + ?Sized> FiniteColoring for Arc<T> {
    fn dimension(&self) -> usize {
        (**self).dimension()
    }
    fn color(&self, tuple: &[u64]) -> u64 {
        (**self).color(tuple)
    }
}

impl<T: FiniteColoring + ?Sized> FiniteColoring for &T {
    fn dimension(&self) -> usize {
        (**self).dimension()
    }
    fn color(&self, tuple: &[u64]) -> u64 {
        (**self).color(tuple)
    }
}

/// Closure-backed exactly-large coloring.
pub struct FnExact<F> {
    f: F,
    palette: u64,
}

impl<F: Fn(&[u64]) -> u64 + Send + Sync> FnExact<F> {
    pub fn new(f: F) -> Self {
        FnExact { f, palette: 2 }
    }

    pub fn with_palette(f: F, palette: u64) -> Self {
        FnExact { f, palette }
    }
}

impl<F: Fn(&[u64]) -> u64 + Send + Sync> ExactColoring for FnExact<F> {
    fn color(&self, set: &[u64]) -> u64 {
        (self.f)(set)
    }
    fn palette(&self) -> u64 {
        self.palette
    }
}

/// Closure-backed regressive coloring. The closure is trusted to be regressive.
pub struct FnRegressive<F>(pub F);

impl<F: Fn(&[u64]) -> u64 + Send + Sync> ExactColoring for FnRegressive<F> {
    fn color(&self, set: &[u64]) -> u64 {
        (self.0)(set)
    }
    fn palette(&self) -> u64 {
        u64::MAX
    }
}

impl<F: Fn(&[u64]) -> u64 + Send + Sync> RegressiveColoring for FnRegressive<F> {}

/// Closure-backed tuple coloring.
pub struct FnFinite<F> {
    dim: usize,
    f: F,
}

impl<F: Fn(&[u64]) -> u64 + Send + Sync> FnFinite<F> {
    pub fn new(dim: usize, f: F) -> Self {
        FnFinite { dim, f }
    }
}

impl<F: Fn(&[u64]) -> u64 + Send + Sync> FiniteColoring for FnFinite<F> {
    fn dimension(&self) -> usize {
        self.dim
    }
    fn color(&self, tuple: &[u64]) -> u64 {
        debug_assert_eq!(tuple.len(), self.dim);
        (self.f)(tuple)
    }
}

/// Caches colors of an expensive coloring by input.
pub struct Memoized<C> {
    inner: C,
    cache: Mutex<HashMap<Vec<u64>, u64>>,
}

impl<C> Memoized<C> {
    pub fn new(inner: C) -> Self {
        Memoized { inner, cache: Mutex::new(HashMap::new()) }
    }

    pub fn inner(&self) -> &C {
        &self.inner
    }

    fn lookup(&self, key: &[u64], f: impl FnOnce() -> u64) -> u64 {
        if let Some(&c) = self.cache.lock().unwrap().get(key) {
            return c;
        }
        let c = f();
        self.cache.lock().unwrap().insert(key.to_vec(), c);
        c
    }
}

impl<C: ExactColoring> ExactColoring for Memoized<C> {
    fn color(&self, set: &[u64]) -> u64 {
        self.lookup(set, || self.inner.color(set))
    }
    fn palette(&self) -> u64 {
        self.inner.palette()
    }
}

impl<C: RegressiveColoring> RegressiveColoring for Memoized<C> {}

impl<C: FiniteColoring> FiniteColoring for Memoized<C> {
    fn dimension(&self) -> usize {
        self.inner.dimension()
    }
    fn color(&self, tuple: &[u64]) -> u64 {
        self.lookup(tuple, || self.inner.color(tuple))
    }
}

/// `C(S) = min(S) mod 2`.
pub fn parity_of_min() -> impl ExactColoring {
    FnExact::new(|s: &[u64]| s[0] % 2)
}

/// `C(S) = (Σ S) mod 2`.
pub fn parity_of_sum() -> impl ExactColoring {
    FnExact::new(|s: &[u64]| s.iter().sum::<u64>() % 2)
}

pub fn constant_exact(c: u64) -> impl ExactColoring {
    FnExact::new(move |_: &[u64]| c)
}

pub fn constant_finite(dim: usize, c: u64) -> impl FiniteColoring {
    FnFinite::new(dim, move |_: &[u64]| c)
}

/// `C(S) = min(S) - 1` (0 on min 0). Every set is min-homogeneous for it.
pub fn min_minus_one() -> impl RegressiveColoring {
    FnRegressive(|s: &[u64]| s[0].saturating_sub(1))
}

/// `C(S) = s_2 mod min(S)` (0 when min(S) = 0).
pub fn second_mod_min() -> impl RegressiveColoring {
    FnRegressive(|s: &[u64]| if s[0] == 0 { 0 } else { s[1] % s[0] })
}
