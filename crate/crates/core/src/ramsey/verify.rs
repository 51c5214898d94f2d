use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::colorings::{ExactColoring, FiniteColoring};
use crate::largesets::{enumerate_exactly_large, FinSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub first: FinSet,
    pub first_color: u64,
    pub second: FinSet,
    pub second_color: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub passed: bool,
    /// Colored sets or tuples inspected.
    pub checked: u64,
    pub counterexample: Option<Counterexample>,
    pub note: String,
}

const SCOPE: &str = "only subsets lying inside the given set are inspected";

/// Every exactly large subset of `h` gets one color.
pub fn verify_exact_homogeneous<C: ExactColoring + ?Sized>(h: &FinSet, c: &C) -> VerifyReport {
    let mut first: Option<(FinSet, u64)> = None;
    let mut checked = 0;
    for s in enumerate_exactly_large(h) {
        checked += 1;
        let col = c.color(s.as_slice());
        match &first {
            None => first = Some((s, col)),
            Some((f, fc)) if *fc != col => {
                return fail(checked, f.clone(), *fc, s, col);
            }
            Some(_) => {}
        }
    }
    pass(checked)
}

/// Exactly large subsets of `h` with equal minimum get equal colors.
pub fn verify_min_homogeneous<C: ExactColoring + ?Sized>(h: &FinSet, c: &C) -> VerifyReport {
    // lexicographic order keeps each minimum's sets contiguous
    let mut first: Option<(FinSet, u64)> = None;
    let mut checked = 0;
    for s in enumerate_exactly_large(h) {
        checked += 1;
        let col = c.color(s.as_slice());
        match &first {
            Some((f, fc)) if FinSet::min(f) == FinSet::min(&s) => {
                if *fc != col {
                    return fail(checked, f.clone(), *fc, s, col);
                }
            }
            _ => first = Some((s, col)),
        }
    }
    pass(checked)
}

/// Every `dimension()`-subset of `h` gets one color.
pub fn verify_finite_homogeneous<C: FiniteColoring + ?Sized>(h: &FinSet, c: &C) -> VerifyReport {
    let mut first: Option<(Vec<u64>, u64)> = None;
    let mut checked = 0;
    for t in h.iter().copied().combinations(c.dimension()) {
        checked += 1;
        let col = c.color(&t);
        match &first {
            None => first = Some((t, col)),
            Some((f, fc)) if *fc != col => {
                let f = FinSet::from_unsorted(f.iter().copied());
                return fail(checked, f, *fc, FinSet::from_unsorted(t), col);
            }
            Some(_) => {}
        }
    }
    pass(checked)
}

fn pass(checked: u64) -> VerifyReport {
    VerifyReport { passed: true, checked, counterexample: None, note: SCOPE.into() }
}

fn fail(checked: u64, first: FinSet, first_color: u64, second: FinSet, second_color: u64) -> VerifyReport {
    VerifyReport {
        passed: false,
        checked,
        counterexample: Some(Counterexample { first, first_color, second, second_color }),
        note: SCOPE.into(),
    }
}
