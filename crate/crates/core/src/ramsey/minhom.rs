use std::collections::BTreeMap;

use super::brute::for_each_subset;
use super::{verify_min_homogeneous, ColorData, SearchOutcome, SearchStats, Witness, WitnessKind};
use crate::colorings::ExactColoring;
use crate::largesets::{binomial, FinSet};

struct State<'a, C: ?Sized> {
    c: &'a C,
    elems: &'a [u64],
    k: usize,
    chosen: Vec<u64>,
    colors: BTreeMap<u64, u64>,
    stats: SearchStats,
}

impl<C: ExactColoring + ?Sized> State<'_, C> {
    /// Colors of the new exactly large sets ending at `x`, checked against the
    /// colors already recorded per minimum. Returns the minima it recorded.
    fn admit(&mut self, x: u64) -> Option<Vec<u64>> {
        let c = self.c;
        let colors = &mut self.colors;
        let stats = &mut self.stats;
        let mut recorded = Vec::new();
        let mut check = |min: u64, s: &[u64]| {
            stats.evaluations += 1;
            let col = c.color(s);
            match colors.get(&min) {
                Some(&c0) => c0 == col,
                None => {
                    colors.insert(min, col);
                    recorded.push(min);
                    true
                }
            }
        };
        let mut ok = x != 0 || check(0, &[0]);
        let mut buf = Vec::new();
        for (i, &m) in self.chosen.iter().enumerate() {
            if !ok {
                break;
            }
            let between = &self.chosen[i + 1..];
            let need = (m as usize).wrapping_sub(1);
            if m == 0 || between.len() < need {
                continue;
            }
            for_each_subset(between, need, &mut |mid| {
                if !ok {
                    return;
                }
                buf.clear();
                buf.push(m);
                buf.extend_from_slice(mid);
                buf.push(x);
                ok = check(m, &buf);
            });
        }
        if !ok {
            for m in &recorded {
                self.colors.remove(m);
            }
            return None;
        }
        Some(recorded)
    }

    fn go(&mut self, from: usize) -> bool {
        if self.chosen.len() == self.k {
            return true;
        }
        let remaining = self.k - self.chosen.len();
        for i in from..self.elems.len() {
            if self.elems.len() - i < remaining {
                break;
            }
            self.stats.nodes += 1;
            let x = self.elems[i];
            let Some(recorded) = self.admit(x) else { continue };
            self.chosen.push(x);
            if self.go(i + 1) {
                return true;
            }
            self.chosen.pop();
            for m in recorded {
                self.colors.remove(&m);
            }
        }
        false
    }
}

/// Lexicographically least size-`k` min-homogeneous subset of `u`.
pub fn min_homog_search<C: ExactColoring + ?Sized>(c: &C, u: &FinSet, k: usize) -> SearchOutcome {
    let mut st = State {
        c,
        elems: u.as_slice(),
        k,
        chosen: Vec::with_capacity(k),
        colors: BTreeMap::new(),
        stats: SearchStats::default(),
    };
    if st.go(0) {
        let set = FinSet::new(st.chosen).expect("increasing");
        let verified = verify_min_homogeneous(&set, c).passed;
        return SearchOutcome::Found(Witness {
            set,
            kind: WitnessKind::MinHomogeneous,
            color: ColorData::PerMinimum(st.colors),
            verified,
            complete: true,
            stats: st.stats,
        });
    }
    SearchOutcome::Exhausted { subsets: binomial(u.len() as u64, k as u64), stats: st.stats }
}
