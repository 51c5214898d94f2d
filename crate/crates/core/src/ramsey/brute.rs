use serde::{Deserialize, Serialize};

use super::{verify_finite_homogeneous, ColorData, SearchStats, Witness, WitnessKind};
use crate::colorings::FiniteColoring;
use crate::largesets::{binomial, FinSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum SearchOutcome {
    Found(Witness),
    /// Nothing exists; all `subsets` candidate sets were ruled out.
    Exhausted {
        subsets: u128,
        stats: SearchStats,
    },
}

impl SearchOutcome {
    pub fn witness(&self) -> Option<&Witness> {
        match self {
            SearchOutcome::Found(w) => Some(w),
            SearchOutcome::Exhausted { .. } => None,
        }
    }
}

/// Lexicographically least size-`k` subset of `u` that `c` colors with one color.
pub fn brute_homogeneous<C: FiniteColoring + ?Sized>(c: &C, u: &FinSet, k: usize) -> SearchOutcome {
    let n = c.dimension();
    assert!(k >= n && n >= 1, "need k >= dimension >= 1");
    let elems = u.as_slice();
    let mut stats = SearchStats::default();
    let mut chosen = Vec::with_capacity(k);
    let mut sub = Vec::with_capacity(n);
    if let Some(color) = extend(c, elems, 0, k, &mut chosen, None, &mut stats, &mut sub) {
        let set = FinSet::new(chosen).expect("increasing");
        let verified = verify_finite_homogeneous(&set, c).passed;
        return SearchOutcome::Found(Witness {
            set,
            kind: WitnessKind::Homogeneous,
            color: ColorData::Single(color),
            verified,
            complete: true,
            stats,
        });
    }
    SearchOutcome::Exhausted { subsets: binomial(elems.len() as u64, k as u64), stats }
}

#[allow(clippy::too_many_arguments)]
fn extend<C: FiniteColoring + ?Sized>(
    c: &C,
    elems: &[u64],
    from: usize,
    k: usize,
    chosen: &mut Vec<u64>,
    color: Option<u64>,
    stats: &mut SearchStats,
    sub: &mut Vec<u64>,
) -> Option<u64> {
    if chosen.len() == k {
        return Some(color.unwrap_or(0));
    }
    let n = c.dimension();
    let remaining = k - chosen.len();
    for i in from..elems.len() {
        if elems.len() - i < remaining {
            break;
        }
        stats.nodes += 1;
        let x = elems[i];
        // every n-subset ending at x must match
        let mut col = color;
        let mut ok = true;
        if chosen.len() + 1 >= n {
            for_each_subset(chosen, n - 1, &mut |head| {
                if !ok {
                    return;
                }
                sub.clear();
                sub.extend_from_slice(head);
                sub.push(x);
                stats.evaluations += 1;
                let cc = c.color(sub);
                match col {
                    None => col = Some(cc),
                    Some(c0) if c0 != cc => ok = false,
                    _ => {}
                }
            });
        }
        if !ok {
            continue;
        }
        chosen.push(x);
        if let Some(found) = extend(c, elems, i + 1, k, chosen, col, stats, sub) {
            return Some(found);
        }
        chosen.pop();
    }
    None
}

/// Calls `f` on every `r`-subset of `items`, in lexicographic order.
pub(crate) fn for_each_subset(items: &[u64], r: usize, f: &mut dyn FnMut(&[u64])) {
    fn go(items: &[u64], r: usize, start: usize, acc: &mut Vec<u64>, f: &mut dyn FnMut(&[u64])) {
        if acc.len() == r {
            f(acc);
            return;
        }
        let need = r - acc.len();
        for i in start..items.len() {
            if items.len() - i < need {
                break;
            }
            acc.push(items[i]);
            go(items, r, i + 1, acc, f);
            acc.pop();
        }
    }
    let mut acc = Vec::with_capacity(r);
    go(items, r, 0, &mut acc, f);
}
