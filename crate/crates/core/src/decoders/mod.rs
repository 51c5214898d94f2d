//! Readers that recover jump information from homogeneous tuples.
//!
//! `Decoder` holds the `M_n` machines for one numbering and base oracle `A`.
//! Verdicts are only meaningful on tuples drawn from suitable homogeneous sets;
//! elsewhere they are still total and deterministic.

mod reconstruct;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::largesets::FinSet;
use crate::machines::{FiniteOracle, JumpFlavor, Numbering, Oracle};

pub use reconstruct::{dh_reconstruct, Reconstruction};

/// Result of one top-level `(i, j)` query.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecodeVerdict {
    pub level: u64,
    pub element: u64,
    /// `None` when `H` has no usable tuple.
    pub answer: Option<bool>,
    pub tuple_used: Option<FinSet>,
    /// Program index actually decoded at level `min(tuple_used) - 1`.
    pub reduced_index: Option<u64>,
    /// Agreement with ground truth, when ground truth was supplied.
    pub consistent: Option<bool>,
}

impl DecodeVerdict {
    pub fn insufficient(&self) -> bool {
        self.answer.is_none()
    }

    /// Record agreement with `truth`; insufficient verdicts stay unjudged.
    pub fn with_truth(mut self, truth: bool) -> Self {
        self.consistent = self.answer.map(|a| a == truth);
        self
    }
}

type YKey = (usize, Vec<u64>);

pub struct Decoder {
    numbering: Numbering,
    oracle: Oracle,
    ys: Mutex<HashMap<YKey, Arc<FiniteOracle>>>,
}

impl Decoder {
    pub fn new(numbering: Numbering, oracle: Oracle) -> Self {
        Decoder { numbering, oracle, ys: Mutex::new(HashMap::new()) }
    }

    pub fn numbering(&self) -> &Numbering {
        &self.numbering
    }

    pub fn oracle(&self) -> &Oracle {
        &self.oracle
    }

    /// `M_2(e, (k, b, b'))`: does `{e}^A_b(0)` halt.
    pub fn m2(&self, e: u64, tuple: &[u64]) -> Result<bool> {
        check_arity(tuple, 3)?;
        if e > tuple[0] {
            return Err(Error::QueryAboveBound { e, bound: tuple[0] });
        }
        Ok(self.numbering.halts(e, &*self.oracle, 0, tuple[1]))
    }

    /// `M_n(e, (a_1, ..., a_{n+1}))`.
    pub fn mn(&self, n: usize, e: u64, tuple: &[u64]) -> Result<bool> {
        if n < 2 {
            return Err(Error::Invalid(format!("decoder level {n} is below 2")));
        }
        if n == 2 {
            return self.m2(e, tuple);
        }
        check_arity(tuple, n + 1)?;
        if e > tuple[0] {
            return Err(Error::QueryAboveBound { e, bound: tuple[0] });
        }
        let y = self.y_set(n, tuple)?;
        Ok(self.numbering.halts(e, &*y, 0, tuple[1]))
    }

    /// `Y = { i <= a_2 : M_{n-1}(i, (a_2, ..., a_{n+1})) }` for `n >= 3`.
    pub fn y_set(&self, n: usize, tuple: &[u64]) -> Result<Arc<FiniteOracle>> {
        check_arity(tuple, n + 1)?;
        let key = (n, tuple.to_vec());
        if let Some(y) = self.ys.lock().unwrap().get(&key) {
            return Ok(y.clone());
        }
        let tail = &tuple[1..];
        let mut members = Vec::new();
        for i in 0..=tail[0] {
            if self.mn(n - 1, i, tail)? {
                members.push(i);
            }
        }
        let y = Arc::new(FiniteOracle::new(members));
        self.ys.lock().unwrap().insert(key, y.clone());
        Ok(y)
    }

    /// `M_ω(e, S) = M_{min S}(e, S)`.
    pub fn momega(&self, e: u64, s: &[u64]) -> Result<bool> {
        if !crate::is_exactly_large(s) {
            return Err(Error::NotExactlyLarge(format!("{s:?}")));
        }
        if s[0] < 2 {
            return Err(Error::Invalid("M_ω needs min(S) >= 2".into()));
        }
        self.mn(s[0] as usize, e, s)
    }

    /// Decide `j ∈ A^{(i)}` from `H`.
    ///
    /// Walks `a_1 ∈ H` upward from the least element above `i` and `j`, taking
    /// the first `a_1` whose reduced index `f_{i, a_1 - 1}(j)` exists and is at
    /// most `a_1`, and with `a_1` more elements of `H` after it.
    pub fn m(&self, i: u64, j: u64, h: &FinSet) -> DecodeVerdict {
        let mut verdict = DecodeVerdict {
            level: i,
            element: j,
            answer: None,
            tuple_used: None,
            reduced_index: None,
            consistent: None,
        };
        let elems = h.as_slice();
        for (pos, &a1) in elems.iter().enumerate() {
            if a1 <= i.max(j) || a1 < 2 {
                continue;
            }
            let need = a1 as usize;
            if elems.len() - pos - 1 < need {
                break;
            }
            let Ok(r) = self.numbering.mone_reduction(i, a1 - 1, j, JumpFlavor::Halt0) else {
                continue;
            };
            if r > a1 {
                continue;
            }
            let tuple = &elems[pos..=pos + need];
            if let Ok(ans) = self.mn(need, r, tuple) {
                verdict.answer = Some(ans);
                verdict.tuple_used = Some(FinSet::new(tuple.to_vec()).expect("increasing"));
                verdict.reduced_index = Some(r);
                return verdict;
            }
        }
        verdict
    }
}

fn check_arity(tuple: &[u64], expected: usize) -> Result<()> {
    if tuple.len() != expected {
        return Err(Error::TupleArity { got: tuple.len(), expected });
    }
    if !tuple.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::NotIncreasing(tuple.to_vec()));
    }
    Ok(())
}

pub fn m2_decode(numbering: &Numbering, e: u64, tuple: &[u64], a: Oracle) -> Result<bool> {
    Decoder::new(numbering.clone(), a).m2(e, tuple)
}

pub fn mn_decode(numbering: &Numbering, n: usize, e: u64, tuple: &[u64], a: Oracle) -> Result<bool> {
    Decoder::new(numbering.clone(), a).mn(n, e, tuple)
}

pub fn momega_decode(numbering: &Numbering, e: u64, s: &[u64], a: Oracle) -> Result<bool> {
    Decoder::new(numbering.clone(), a).momega(e, s)
}

pub fn m_decode(numbering: &Numbering, i: u64, j: u64, h: &FinSet, a: Oracle) -> DecodeVerdict {
    Decoder::new(numbering.clone(), a).m(i, j, h)
}

/// Cutoff ground truth for `A^{(level)}` in the halt-on-0 flavor.
pub fn halt0_truth(numbering: &Numbering, a: Oracle, level: u64, cutoff: u64) -> Oracle {
    numbering.halt0_tower(a, level, cutoff)
}
