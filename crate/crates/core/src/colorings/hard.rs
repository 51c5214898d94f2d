use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::{ExactColoring, RegressiveColoring};
use crate::machines::{Numbering, Oracle, PairJump};

/// Staged pair-jump disagreement coloring.
///
/// For `A = {2n, a_1, ..., a_{2n}}` it looks for the least `i ∈ [1, n]` and a
/// code below `a_{n-i}` on which `X^{(i)}` staged at `(a_n, ..., a_{n-i+1})`
/// and at `(a_{2n}, ..., a_{2n-i+1})` disagree. Odd minimum colors 0.
pub struct DhColoring {
    numbering: Numbering,
    oracle: Oracle,
    regressive: bool,
    chains: Mutex<HashMap<Vec<u64>, Oracle>>,
}

impl DhColoring {
    pub fn new(numbering: Numbering, oracle: Oracle, regressive: bool) -> Self {
        DhColoring { numbering, oracle, regressive, chains: Mutex::new(HashMap::new()) }
    }

    /// Lazy staged jump for `stages`, innermost first; shares every prefix.
    fn chain(&self, stages: &[u64]) -> Oracle {
        if stages.is_empty() {
            return self.oracle.clone();
        }
        if let Some(o) = self.chains.lock().unwrap().get(stages) {
            return o.clone();
        }
        let (&last, init) = stages.split_last().unwrap();
        let inner = self.chain(init);
        let o: Oracle = Arc::new(PairJump::new(self.numbering.clone(), inner, last));
        self.chains.lock().unwrap().entry(stages.to_vec()).or_insert(o).clone()
    }

    /// Least witnessing level, if any.
    pub fn witness_level(&self, a: &[u64]) -> Option<u64> {
        let a0 = a[0];
        if a0 == 0 || a0 % 2 == 1 {
            return None;
        }
        let n = (a0 / 2) as usize;
        for i in 1..=n {
            let bound = a[n - i];
            let left: Vec<u64> = (n - i + 1..=n).rev().map(|k| a[k]).collect();
            let right: Vec<u64> = (2 * n - i + 1..=2 * n).rev().map(|k| a[k]).collect();
            let l = self.chain(&left);
            let r = self.chain(&right);
            if (0..bound).any(|c| l.contains(c) != r.contains(c)) {
                return Some(i as u64);
            }
        }
        None
    }
}

impl ExactColoring for DhColoring {
    fn color(&self, a: &[u64]) -> u64 {
        match self.witness_level(a) {
            None => 0,
            Some(i) if self.regressive => i,
            Some(_) => 1,
        }
    }

    fn palette(&self) -> u64 {
        if self.regressive {
            u64::MAX
        } else {
            2
        }
    }
}

impl RegressiveColoring for DhColoring {}

pub fn dh_coloring(numbering: &Numbering, x: Oracle) -> DhColoring {
    DhColoring::new(numbering.clone(), x, false)
}

pub fn km_dh_coloring(numbering: &Numbering, x: Oracle) -> DhColoring {
    DhColoring::new(numbering.clone(), x, true)
}
