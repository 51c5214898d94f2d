use itertools::Itertools;

use super::{ExactColoring, RegressiveColoring};
use crate::error::{Error, Result};
use crate::largesets::FinSet;
use crate::ramsey::verify_min_homogeneous;

/// Two-coloring whose homogeneous sets shift down to min-homogeneous sets of
/// the regressive coloring it wraps.
///
/// `C'(A) = 1` iff every tuple `(a_0 - 1, c_1, ..., c_{a_0 - 1})` with the
/// `c`'s drawn from `{a_1 - 1, ..., a_{a_0} - 1}` gets the same color.
pub struct KmToRt<C> {
    inner: C,
}

pub fn km_to_rt<C: RegressiveColoring>(inner: C) -> KmToRt<C> {
    KmToRt { inner }
}

impl<C: RegressiveColoring> ExactColoring for KmToRt<C> {
    fn color(&self, a: &[u64]) -> u64 {
        let a0 = a[0];
        if a0 == 0 {
            return 0;
        }
        let head = a0 - 1;
        let shifted: Vec<u64> = a[1..].iter().map(|x| x - 1).collect();
        let mut colors = shifted.iter().copied().combinations(head as usize).map(|rest| {
            let mut t = Vec::with_capacity(rest.len() + 1);
            t.push(head);
            t.extend(rest);
            self.inner.color(&t)
        });
        let first = colors.next().expect("at least one tuple");
        colors.all(|c| c == first) as u64
    }
}

/// `Y = { x - 1 : x ∈ X, x >= 1 }`.
pub fn km_witness(x: &FinSet) -> FinSet {
    FinSet::from_unsorted(x.iter().filter(|&&v| v >= 1).map(|v| v - 1))
}

/// Thin a min-homogeneous `H` to a homogeneous `H'` by the color each minimum
/// induces. The larger class wins, ties go to color 0, and minima that head
/// no exactly large subset of `H` stay in.
pub fn rt_via_km<C: ExactColoring + ?Sized>(c: &C, h: &FinSet) -> Result<FinSet> {
    let report = verify_min_homogeneous(h, c);
    if !report.passed {
        return Err(Error::NotMinHomogeneous(h.to_string()));
    }
    let mut induced: Vec<(u64, Option<u64>)> = Vec::with_capacity(h.len());
    let elems = h.as_slice();
    for (pos, &x) in elems.iter().enumerate() {
        let end = pos + 1 + x as usize;
        let color = (end <= elems.len()).then(|| c.color(&elems[pos..end]));
        induced.push((x, color));
    }
    let zeros = induced.iter().filter(|(_, k)| *k == Some(0)).count();
    let ones = induced.iter().filter(|(_, k)| *k == Some(1)).count();
    let keep = if ones > zeros { 1 } else { 0 };
    Ok(FinSet::from_unsorted(induced.into_iter().filter(|(_, k)| k.is_none_or(|k| k == keep)).map(|(x, _)| x)))
}
