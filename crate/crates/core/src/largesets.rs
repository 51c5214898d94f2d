//! Finite sets of naturals and the exactly large (thin Schreier) family.
//!
//! A finite set `S` is *exactly large* when `card(S) = min(S) + 1`. Every such
//! set splits into its minimum `m` and an `m`-element tail lying strictly above
//! `m`; the colorings and searches in this crate are all organized around that
//! split.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A strictly increasing finite sequence of naturals.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct FinSet(Vec<u64>);

impl FinSet {
    pub fn new(elems: Vec<u64>) -> Result<Self> {
        if elems.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotIncreasing(elems));
        }
        Ok(FinSet(elems))
    }

    /// Builds a set from arbitrary input, sorting and deduplicating.
    pub fn from_unsorted<I: IntoIterator<Item = u64>>(it: I) -> Self {
        let mut v: Vec<u64> = it.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        FinSet(v)
    }

    pub fn empty() -> Self {
        FinSet(Vec::new())
    }

    pub fn interval(lo: u64, hi: u64) -> Self {
        FinSet((lo..=hi).collect())
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn min(&self) -> Option<u64> {
        self.0.first().copied()
    }

    pub fn max(&self) -> Option<u64> {
        self.0.last().copied()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn is_subset(&self, other: &FinSet) -> bool {
        self.0.iter().all(|&x| other.contains(x))
    }

    pub fn iter(&self) -> std::slice::Iter<'_, u64> {
        self.0.iter()
    }

    /// Elements strictly greater than `x`.
    pub fn above(&self, x: u64) -> FinSet {
        let start = self.0.partition_point(|&y| y <= x);
        FinSet(self.0[start..].to_vec())
    }

    pub fn is_exactly_large(&self) -> bool {
        is_exactly_large(self.as_slice())
    }
}

impl From<FinSet> for Vec<u64> {
    fn from(s: FinSet) -> Vec<u64> {
        s.0
    }
}

impl TryFrom<Vec<u64>> for FinSet {
    type Error = Error;
    fn try_from(v: Vec<u64>) -> Result<Self> {
        FinSet::new(v)
    }
}

impl<'a> IntoIterator for &'a FinSet {
    type Item = &'a u64;
    type IntoIter = std::slice::Iter<'a, u64>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl FromStr for FinSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner =
            t.strip_prefix('{').and_then(|r| r.strip_suffix('}')).ok_or_else(|| Error::ParseSet(s.to_string()))?;
        if inner.trim().is_empty() {
            return Ok(FinSet::empty());
        }
        let elems = inner
            .split(',')
            .map(|p| p.trim().parse::<u64>().map_err(|_| Error::ParseSet(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        FinSet::new(elems)
    }
}

/// True iff `s` is nonempty and `card(s) = min(s) + 1`.
///
/// `s` is assumed strictly increasing.
pub fn is_exactly_large(s: &[u64]) -> bool {
    match s.first() {
        Some(&m) => s.len() as u64 == m + 1,
        None => false,
    }
}

/// An exactly large set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactlyLarge(FinSet);

impl ExactlyLarge {
    pub fn new(set: FinSet) -> Result<Self> {
        if set.is_exactly_large() {
            Ok(ExactlyLarge(set))
        } else {
            Err(Error::NotExactlyLarge(set.to_string()))
        }
    }

    pub fn set(&self) -> &FinSet {
        &self.0
    }

    pub fn as_slice(&self) -> &[u64] {
        self.0.as_slice()
    }

    pub fn min(&self) -> u64 {
        self.0.as_slice()[0]
    }

    /// Splits off the minimum; the tail has exactly `head` elements.
    pub fn min_decompose(&self) -> (u64, FinSet) {
        let s = self.0.as_slice();
        (s[0], FinSet(s[1..].to_vec()))
    }
}

impl TryFrom<FinSet> for ExactlyLarge {
    type Error = Error;
    fn try_from(s: FinSet) -> Result<Self> {
        ExactlyLarge::new(s)
    }
}

impl fmt::Display for ExactlyLarge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Decomposes an arbitrary set, rejecting ones that are not exactly large.
pub fn min_decompose(s: &FinSet) -> Result<(u64, FinSet)> {
    Ok(ExactlyLarge::new(s.clone())?.min_decompose())
}

/// Lazily yields every exactly large subset of `universe` in lexicographic order.
pub fn enumerate_exactly_large(universe: &FinSet) -> ExactlyLargeIter<'_> {
    ExactlyLargeIter { elems: universe.as_slice(), head: 0, idx: Vec::new(), started: false }
}

/// Number of exactly large subsets of `universe`, by the minimum-split formula.
pub fn count_exactly_large(universe: &FinSet) -> u128 {
    let n = universe.len();
    universe.iter().enumerate().map(|(i, &m)| binomial((n - i - 1) as u64, m)).sum()
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Streaming enumerator behind [`enumerate_exactly_large`].
///
/// For each candidate minimum (in increasing order) it walks the
/// `min`-combinations of the later elements in lexicographic order, which
/// gives global lexicographic order on the yielded sequences.
pub struct ExactlyLargeIter<'a> {
    elems: &'a [u64],
    head: usize,
    // indices into `elems` of the tail for the current head
    idx: Vec<usize>,
    started: bool,
}

impl ExactlyLargeIter<'_> {
    // Position on the first combination for `self.head`, skipping heads whose
    // tail cannot be filled.
    fn seek_head(&mut self) -> bool {
        while self.head < self.elems.len() {
            let m = self.elems[self.head];
            let avail = (self.elems.len() - self.head - 1) as u64;
            if m <= avail {
                let k = m as usize;
                self.idx = (self.head + 1..self.head + 1 + k).collect();
                return true;
            }
            self.head += 1;
        }
        false
    }

    fn advance_combination(&mut self) -> bool {
        let n = self.elems.len();
        let k = self.idx.len();
        for pos in (0..k).rev() {
            if self.idx[pos] < n - (k - pos) {
                self.idx[pos] += 1;
                for q in pos + 1..k {
                    self.idx[q] = self.idx[q - 1] + 1;
                }
                return true;
            }
        }
        false
    }

    fn current(&self) -> FinSet {
        let mut v = Vec::with_capacity(self.idx.len() + 1);
        v.push(self.elems[self.head]);
        v.extend(self.idx.iter().map(|&i| self.elems[i]));
        FinSet(v)
    }
}

impl Iterator for ExactlyLargeIter<'_> {
    type Item = FinSet;

    fn next(&mut self) -> Option<FinSet> {
        if !self.started {
            self.started = true;
            if !self.seek_head() {
                return None;
            }
            return Some(self.current());
        }
        if self.head >= self.elems.len() {
            return None;
        }
        if !self.advance_combination() {
            self.head += 1;
            if !self.seek_head() {
                return None;
            }
        }
        Some(self.current())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[u64]) -> FinSet {
        FinSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn recognition() {
        assert!(is_exactly_large(&[2, 3, 4]));
        assert!(!is_exactly_large(&[3, 4, 5]));
        assert!(is_exactly_large(&[0]));
        assert!(!is_exactly_large(&[]));
    }

    #[test]
    fn decompose() {
        assert_eq!(min_decompose(&set(&[2, 5, 9])).unwrap(), (2, set(&[5, 9])));
        assert_eq!(min_decompose(&set(&[1, 7])).unwrap(), (1, set(&[7])));
        assert_eq!(min_decompose(&set(&[3, 4, 5, 6])).unwrap(), (3, set(&[4, 5, 6])));
        assert!(min_decompose(&set(&[3, 4])).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let got: Vec<FinSet> = enumerate_exactly_large(&set(&[2, 3, 4, 5])).collect();
        assert_eq!(got, vec![set(&[2, 3, 4]), set(&[2, 3, 5]), set(&[2, 4, 5])]);
        let got: Vec<FinSet> = enumerate_exactly_large(&set(&[1, 2])).collect();
        assert_eq!(got, vec![set(&[1, 2])]);
        assert_eq!(enumerate_exactly_large(&FinSet::empty()).count(), 0);
        let got: Vec<FinSet> = enumerate_exactly_large(&set(&[0, 1, 2])).collect();
        assert_eq!(got, vec![set(&[0]), set(&[1, 2])]);
    }

    #[test]
    fn rendering_and_parsing() {
        let s = set(&[2, 5, 9]);
        assert_eq!(s.to_string(), "{2,5,9}");
        assert_eq!("{ 2, 5 ,9 }".parse::<FinSet>().unwrap(), s);
        assert_eq!("{}".parse::<FinSet>().unwrap(), FinSet::empty());
        assert!("{3,2}".parse::<FinSet>().is_err());
        assert!("2,3".parse::<FinSet>().is_err());
    }

    #[test]
    fn rejects_unsorted() {
        assert!(FinSet::new(vec![1, 1]).is_err());
        assert!(FinSet::new(vec![2, 1]).is_err());
    }
}
