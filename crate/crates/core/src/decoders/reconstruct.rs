use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::largesets::FinSet;
use crate::machines::{JumpStageSpec, Numbering, Oracle};

/// One reconstructed level `X_i`, known exactly on codes below `covered_below`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Level {
    pub members: FinSet,
    pub covered_below: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reconstruction {
    pub n: u64,
    pub levels: Vec<Level>,
    /// `(level, first uncovered code)` for levels that stop short of `max(H)`.
    pub uncovered: Vec<(u64, u64)>,
}

/// Lexicographically least exactly large `A ⊆ H` with `min(A) = h` and
/// `code < a_{n-i}`, built greedily.
fn least_tuple(elems: &[u64], start: usize, n: usize, i: usize, code: u64) -> Option<Vec<u64>> {
    let len = 2 * n + 1;
    let pivot = n - i;
    let mut out = Vec::with_capacity(len);
    let mut pos = start;
    while out.len() < len {
        let slot = out.len();
        if slot == pivot {
            while pos < elems.len() && elems[pos] <= code {
                pos += 1;
            }
        }
        if pos >= elems.len() || (slot == pivot && slot == 0 && elems[pos] != elems[start]) {
            return None;
        }
        out.push(elems[pos]);
        pos += 1;
    }
    Some(out)
}

/// Rebuild `X_0, ..., X_{n-1}` from a color-0 homogeneous `H` for the pair
/// flavor hardness coloring, using `h = 2n ∈ H`.
pub fn dh_reconstruct(numbering: &Numbering, h_set: &FinSet, h: u64, x: Oracle) -> Result<Reconstruction> {
    if !h.is_multiple_of(2) || h == 0 {
        return Err(Error::Invalid(format!("{h} is not a positive even number")));
    }
    let elems = h_set.as_slice();
    let start = elems.iter().position(|&v| v == h).ok_or_else(|| Error::Invalid(format!("{h} is not in H")))?;
    let n = (h / 2) as usize;
    let top = h_set.max().unwrap_or(0);
    let mut levels = vec![Level { members: x.members_below(top), covered_below: top }];
    let mut uncovered = Vec::new();
    let mut cache: HashMap<Vec<u64>, Oracle> = HashMap::new();
    for i in 1..n {
        let mut members = Vec::new();
        let mut covered = top;
        for c in 0..top {
            let Some(tuple) = least_tuple(elems, start, n, i, c) else {
                covered = c;
                uncovered.push((i as u64, c));
                break;
            };
            let stages: Vec<u64> = (n - i + 1..=n).rev().map(|k| tuple[k]).collect();
            let oracle = cache
                .entry(stages.clone())
                .or_insert_with(|| numbering.staged_jump_oracle(x.clone(), &JumpStageSpec(stages)))
                .clone();
            if oracle.contains(c) {
                members.push(c);
            }
        }
        levels.push(Level { members: FinSet::from_unsorted(members), covered_below: covered });
    }
    Ok(Reconstruction { n: n as u64, levels, uncovered })
}

#[cfg(test)]
pub(crate) fn least_tuple_for_tests(elems: &[u64], start: usize, n: usize, i: usize, code: u64) -> Option<Vec<u64>> {
    least_tuple(elems, start, n, i, code)
}
