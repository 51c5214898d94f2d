//! Erdős–Rado trees for a coloring of `(a+1)`-tuples.
//!
//! A node is an increasing sequence `t_0 < ... < t_k`. Its pool is the set of
//! later universe elements `j` with `C(T, j) = C(T, t_{i+1})` for every
//! `a`-subset `T` whose largest entry is `t_i`, `i < k`. The children of a node
//! are the least pool members of each class of the signature
//! `T ↦ C(T, j)` over the `a`-subsets `T` that contain `t_k`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::brute::for_each_subset;
use super::{SearchBudget, SearchStats};
use crate::colorings::FiniteColoring;
use crate::largesets::FinSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Children {
    pub children: Vec<u64>,
    /// False when the candidate budget ran out before the pool was scanned.
    pub complete: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathResult {
    pub path: FinSet,
    /// The requested length was reached without any budget cut.
    pub stable: bool,
    pub stats: SearchStats,
}

fn arity<C: FiniteColoring + ?Sized>(c: &C) -> usize {
    assert!(c.dimension() >= 2, "tree colorings need dimension >= 2");
    c.dimension() - 1
}

/// The pool of `node`, recomputed from scratch.
pub fn er_pool<C: FiniteColoring + ?Sized>(node: &[u64], c: &C, u: &FinSet) -> Vec<u64> {
    let a = arity(c);
    let last = node.last().copied();
    let mut buf = Vec::with_capacity(a + 1);
    u.iter()
        .copied()
        .filter(|&j| last.is_none_or(|m| j > m))
        .filter(|&j| {
            if node.len() <= a {
                return true;
            }
            let mut ok = true;
            for_each_subset(&node[..node.len() - 1], a, &mut |t| {
                if !ok {
                    return;
                }
                let idx = node.iter().position(|&v| v == t[a - 1]).unwrap();
                buf.clear();
                buf.extend_from_slice(t);
                buf.push(j);
                let cj = c.color(&buf);
                buf[a] = node[idx + 1];
                ok = cj == c.color(&buf);
            });
            ok
        })
        .collect()
}

/// Split `pool` (all above `node`'s last entry) into signature classes.
fn classes<C: FiniteColoring + ?Sized>(
    node: &[u64],
    pool: &[u64],
    c: &C,
    a: usize,
    max_candidates: u64,
    stats: &mut SearchStats,
) -> (Vec<Vec<u64>>, bool) {
    if pool.is_empty() {
        return (Vec::new(), true);
    }
    if node.len() < a {
        return (vec![pool.to_vec()], true);
    }
    let (&last, init) = node.split_last().unwrap();
    let mut groups: BTreeMap<Vec<u64>, Vec<u64>> = BTreeMap::new();
    let mut order: Vec<Vec<u64>> = Vec::new();
    let mut complete = true;
    let mut buf = Vec::with_capacity(a + 1);
    for (scanned, &j) in pool.iter().enumerate() {
        if scanned as u64 >= max_candidates {
            complete = false;
            stats.truncated = true;
            break;
        }
        let mut sig = Vec::new();
        for_each_subset(init, a - 1, &mut |t| {
            buf.clear();
            buf.extend_from_slice(t);
            buf.push(last);
            buf.push(j);
            sig.push(c.color(&buf));
        });
        stats.evaluations += sig.len() as u64;
        let entry = groups.entry(sig.clone()).or_default();
        if entry.is_empty() {
            order.push(sig);
        }
        entry.push(j);
    }
    let mut out: Vec<Vec<u64>> = order.into_iter().map(|s| groups.remove(&s).unwrap()).collect();
    out.sort_by_key(|g| g[0]);
    (out, complete)
}

/// Children of `node`, ordered by value.
pub fn er_children<C: FiniteColoring + ?Sized>(node: &[u64], c: &C, u: &FinSet, budget: &SearchBudget) -> Children {
    let a = arity(c);
    let pool = er_pool(node, c, u);
    let mut stats = SearchStats::default();
    let (groups, complete) = classes(node, &pool, c, a, budget.max_candidates, &mut stats);
    Children { children: groups.iter().map(|g| g[0]).collect(), complete }
}

struct Dfs<'a, C: ?Sized> {
    c: &'a C,
    a: usize,
    len: usize,
    budget: &'a SearchBudget,
    stats: SearchStats,
    best: Vec<u64>,
}

impl<C: FiniteColoring + ?Sized> Dfs<'_, C> {
    /// True once a branch of length `len` is found (left in `best`).
    fn go(&mut self, node: &mut Vec<u64>, pool: Vec<u64>) -> bool {
        if node.len() > self.best.len() {
            self.best = node.clone();
        }
        if node.len() >= self.len {
            return true;
        }
        if self.stats.nodes >= self.budget.max_nodes {
            self.stats.truncated = true;
            return false;
        }
        self.stats.nodes += 1;
        let (groups, _) = classes(node, &pool, self.c, self.a, self.budget.max_candidates, &mut self.stats);
        for g in groups {
            node.push(g[0]);
            let found = self.go(node, g[1..].to_vec());
            node.pop();
            if found {
                return true;
            }
        }
        false
    }
}

/// Leftmost branch of length `len`, or the leftmost deepest branch otherwise.
pub fn leftmost_path<C: FiniteColoring + ?Sized>(c: &C, u: &FinSet, len: usize, budget: &SearchBudget) -> PathResult {
    let a = arity(c);
    let mut dfs = Dfs { c, a, len, budget, stats: SearchStats::default(), best: Vec::new() };
    let found = dfs.go(&mut Vec::new(), u.as_slice().to_vec());
    let path: Vec<u64> = dfs.best.into_iter().take(len).collect();
    PathResult { path: FinSet::new(path).expect("increasing"), stable: found && !dfs.stats.truncated, stats: dfs.stats }
}
