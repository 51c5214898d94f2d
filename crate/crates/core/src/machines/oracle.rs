use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::largesets::FinSet;

/// Membership interface over the naturals.
///
/// Implementations must be pure: repeated queries give the same answer.
pub trait OracleSet: Send + Sync {
    fn contains(&self, n: u64) -> bool;

    /// The members below `bound`, materialized.
    fn members_below(&self, bound: u64) -> FinSet {
        FinSet::from_unsorted((0..bound).filter(|&n| self.contains(n)))
    }
}

pub type Oracle = Arc<dyn OracleSet>;

impl<T: OracleSet + ?Sized> OracleSet for Arc<T> {
    fn contains(&self, n: u64) -> bool {
        (**self).contains(n)
    }
}

impl<T: OracleSet + ?Sized> OracleSet for &T {
    fn contains(&self, n: u64) -> bool {
        (**self).contains(n)
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct EmptyOracle;

impl OracleSet for EmptyOracle {
    fn contains(&self, _: u64) -> bool {
        false
    }
}

/// An explicit finite set.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FiniteOracle(BTreeSet<u64>);

impl FiniteOracle {
    pub fn new<I: IntoIterator<Item = u64>>(it: I) -> Self {
        FiniteOracle(it.into_iter().collect())
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<&FinSet> for FiniteOracle {
    fn from(s: &FinSet) -> Self {
        FiniteOracle::new(s.iter().copied())
    }
}

impl OracleSet for FiniteOracle {
    fn contains(&self, n: u64) -> bool {
        self.0.contains(&n)
    }
}

impl OracleSet for FinSet {
    fn contains(&self, n: u64) -> bool {
        FinSet::contains(self, n)
    }
}

impl fmt::Display for FiniteOracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        FinSet::from_unsorted(self.0.iter().copied()).fmt(f)
    }
}

/// `A ⊕ B`: `A` on the even numbers, `B` on the odd numbers.
pub struct Join<A, B>(pub A, pub B);

impl<A: OracleSet, B: OracleSet> OracleSet for Join<A, B> {
    fn contains(&self, n: u64) -> bool {
        if n.is_multiple_of(2) {
            self.0.contains(n / 2)
        } else {
            self.1.contains(n / 2)
        }
    }
}

/// `X ∩ [0, bound)`.
pub struct Below<X>(pub X, pub u64);

impl<X: OracleSet> OracleSet for Below<X> {
    fn contains(&self, n: u64) -> bool {
        n < self.1 && self.0.contains(n)
    }
}

/// Pure predicate memoized behind a lock; concurrent readers share the cache.
pub(crate) struct MemoTable {
    table: Mutex<HashMap<u64, bool>>,
}

impl MemoTable {
    pub(crate) fn new() -> Self {
        MemoTable { table: Mutex::new(HashMap::new()) }
    }

    pub(crate) fn get_or(&self, n: u64, f: impl FnOnce() -> bool) -> bool {
        if let Some(&v) = self.table.lock().unwrap().get(&n) {
            return v;
        }
        // computed outside the lock: f may query other memoized oracles
        let v = f();
        self.table.lock().unwrap().insert(n, v);
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn join_interleaves() {
        let a = FiniteOracle::new([1, 2]);
        let b = FiniteOracle::new([0]);
        let j = Join(a, b);
        let members: Vec<u64> = (0..8).filter(|&n| j.contains(n)).collect();
        assert_eq!(members, vec![1, 2, 4]);
    }

    #[test]
    fn restriction() {
        let x = Below(FiniteOracle::new([1, 5, 9]), 6);
        assert_eq!(x.members_below(20).as_slice(), &[1, 5]);
        assert!(!EmptyOracle.contains(0));
    }
}
