use std::collections::HashMap;

use super::{leftmost_path, verify_finite_homogeneous, ColorData, SearchBudget, SearchStats, Witness, WitnessKind};
use crate::colorings::FiniteColoring;
use crate::largesets::FinSet;

/// `C'(x_1, ..., x_{a-1}) = C(x_1, ..., x_{a-1}, next(x_{a-1}))` along a path.
struct AlongPath<'a, C: ?Sized> {
    inner: &'a C,
    next: HashMap<u64, u64>,
}

impl<C: FiniteColoring + ?Sized> FiniteColoring for AlongPath<'_, C> {
    fn dimension(&self) -> usize {
        self.inner.dimension() - 1
    }

    fn color(&self, t: &[u64]) -> u64 {
        let mut full = t.to_vec();
        full.push(self.next[t.last().unwrap()]);
        self.inner.color(&full)
    }
}

/// Homogeneous subset of `u` for `c`, with its color when some tuple lies inside.
fn extract(
    c: &dyn FiniteColoring,
    u: &[u64],
    target: usize,
    budget: &SearchBudget,
    stats: &mut SearchStats,
) -> (Vec<u64>, Option<u64>) {
    let a = c.dimension();
    if u.len() < a {
        return (u.to_vec(), None);
    }
    if a == 1 {
        let (mut zero, mut one) = (Vec::new(), Vec::new());
        for &x in u {
            stats.evaluations += 1;
            if c.color(&[x]) == 0 {
                zero.push(x);
            } else {
                one.push(x);
            }
        }
        // color 0 first, then color 1, then whichever class is larger
        return if zero.len() >= target || (one.len() < target && zero.len() >= one.len()) {
            (zero, Some(0))
        } else {
            (one, Some(1))
        };
    }
    if u.len() == a {
        stats.evaluations += 1;
        return (u.to_vec(), Some(c.color(u)));
    }
    let universe = FinSet::new(u.to_vec()).expect("increasing");
    let path = leftmost_path(c, &universe, u.len(), budget);
    stats.absorb(&path.stats);
    let p = path.path.as_slice();
    if p.len() < 2 {
        return (p.to_vec(), None);
    }
    let next: HashMap<u64, u64> = p.windows(2).map(|w| (w[0], w[1])).collect();
    let reduced = AlongPath { inner: c, next };
    let (mut found, color) = extract(&reduced, &p[..p.len() - 1], target, budget, stats);
    // tuples ending at the last path element read C' as well
    found.push(p[p.len() - 1]);
    (found, color)
}

/// A size-`target` homogeneous set for the dimension-`a` coloring `c`.
///
/// Dimension `a` reduces to `a - 1` along the leftmost deepest branch of the
/// tree for `c`, where colors no longer depend on the last entry. Dimension 1
/// is a pigeonhole that prefers color 0. If fewer than `target` elements
/// survive, the witness holds what was found and `complete` is false.
pub fn f_a_extract<C: FiniteColoring + ?Sized>(
    a: usize,
    c: &C,
    u: &FinSet,
    target: usize,
    budget: &SearchBudget,
) -> Witness {
    assert!(a >= 1 && c.dimension() == a, "coloring must have dimension a >= 1");
    let mut stats = SearchStats::default();
    let wrapped: &dyn FiniteColoring = &Dyn(c);
    let (found, color) = extract(wrapped, u.as_slice(), target, budget, &mut stats);
    let set = FinSet::new(found.into_iter().take(target).collect()).expect("increasing");
    let color = if set.len() >= a {
        ColorData::Single(color.unwrap_or_else(|| c.color(&set.as_slice()[..a])))
    } else {
        ColorData::Vacuous
    };
    let verified = verify_finite_homogeneous(&set, c).passed;
    Witness { complete: set.len() >= target, set, kind: WitnessKind::Homogeneous, color, verified, stats }
}

struct Dyn<'a, C: ?Sized>(&'a C);

impl<C: FiniteColoring + ?Sized> FiniteColoring for Dyn<'_, C> {
    fn dimension(&self) -> usize {
        self.0.dimension()
    }
    fn color(&self, t: &[u64]) -> u64 {
        self.0.color(t)
    }
}
