use serde::{Deserialize, Serialize};

use super::{f_a_extract, verify_exact_homogeneous, ColorData, SearchBudget, SearchStats, Witness, WitnessKind};
use crate::colorings::{ExactColoring, FiniteColoring};
use crate::largesets::FinSet;

/// `C_a(T) = C({a} ∪ T)` on `a`-subsets above `a`.
struct Section<'a, C: ?Sized> {
    c: &'a C,
    a: u64,
}

impl<C: ExactColoring + ?Sized> FiniteColoring for Section<'_, C> {
    fn dimension(&self) -> usize {
        self.a as usize
    }

    fn color(&self, t: &[u64]) -> u64 {
        let mut s = Vec::with_capacity(t.len() + 1);
        s.push(self.a);
        s.extend_from_slice(t);
        self.c.color(&s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainStage {
    pub element: u64,
    /// The set the stage searched in (everything above `element` still alive).
    pub ground: FinSet,
    /// The homogeneous part kept for later stages.
    pub kept: FinSet,
    /// `None` when no exactly large set with this minimum fits in `kept`.
    pub color: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainWitness {
    /// The unthinned chain `a_0 < a_1 < ...`.
    pub chain: Vec<u64>,
    pub stages: Vec<ChainStage>,
    /// Chain after the final pigeonhole, with its verification.
    pub witness: Witness,
}

/// Build `a_0 = min U`, `a_{i+1} = min X_i` where `X_i` is homogeneous for
/// `C_{a_i}` inside `X_{i-1}`, then keep the chain elements whose stage color
/// is the more frequent one (ties to 0).
pub fn iterate_rtomega<C: ExactColoring + ?Sized>(c: &C, u: &FinSet, budget: &SearchBudget) -> ChainWitness {
    let mut stats = SearchStats::default();
    let mut chain = Vec::new();
    let mut stages = Vec::new();
    let Some(mut a) = u.min() else {
        return finish(c, chain, stages, stats);
    };
    let mut ground = u.above(a);
    loop {
        chain.push(a);
        let (kept, color) = if a == 0 {
            (ground.clone(), Some(c.color(&[0])))
        } else {
            let section = Section { c, a };
            let w = f_a_extract(a as usize, &section, &ground, ground.len(), budget);
            stats.absorb(&w.stats);
            let color = match w.color {
                ColorData::Single(k) => Some(k),
                _ => None,
            };
            (w.set, color)
        };
        stages.push(ChainStage { element: a, ground: ground.clone(), kept: kept.clone(), color });
        let Some(next) = FinSet::min(&kept) else { break };
        a = next;
        ground = kept.above(next);
    }
    finish(c, chain, stages, stats)
}

fn finish<C: ExactColoring + ?Sized>(
    c: &C,
    chain: Vec<u64>,
    stages: Vec<ChainStage>,
    stats: SearchStats,
) -> ChainWitness {
    let zeros = stages.iter().filter(|s| s.color == Some(0)).count();
    let ones = stages.iter().filter(|s| s.color == Some(1)).count();
    let keep = if ones > zeros { 1 } else { 0 };
    let thinned =
        FinSet::from_unsorted(stages.iter().filter(|s| s.color.is_none_or(|k| k == keep)).map(|s| s.element));
    let report = verify_exact_homogeneous(&thinned, c);
    let colored = stages.iter().any(|s| s.color == Some(keep) && thinned.contains(s.element));
    let witness = Witness {
        set: thinned,
        kind: WitnessKind::Chain,
        color: if colored { ColorData::Single(keep) } else { ColorData::Vacuous },
        verified: report.passed,
        complete: !stats.truncated,
        stats,
    };
    ChainWitness { chain, stages, witness }
}
