use std::sync::Arc;

use super::{ExactColoring, FiniteColoring};
use crate::machines::{code, HaltJump, Numbering, Oracle};

/// A tuple coloring that takes its oracle and run bound as arguments, so it
/// can be re-evaluated against stage approximations of a jump.
pub trait OracleColoring: Send + Sync {
    fn dimension(&self) -> usize;
    fn color_with(&self, oracle: Oracle, bound: u64, tuple: &[u64]) -> u64;
}

/// Base of a tower: program `index` run on `<x1, x2>`, output clamped to {0, 1}.
/// A run that does not halt within `min(bound, cutoff)` colors 0.
pub struct ProgramColoring {
    numbering: Numbering,
    index: u64,
    cutoff: u64,
}

impl ProgramColoring {
    pub fn new(numbering: Numbering, index: u64, cutoff: u64) -> Self {
        ProgramColoring { numbering, index, cutoff }
    }
}

impl OracleColoring for ProgramColoring {
    fn dimension(&self) -> usize {
        2
    }

    fn color_with(&self, oracle: Oracle, bound: u64, tuple: &[u64]) -> u64 {
        let input = code(tuple[0], tuple[1]);
        let s = bound.min(self.cutoff);
        self.numbering.run_bounded(self.index, &*oracle, input, s).value().map_or(0, |v| v.min(1))
    }
}

/// `e_{n+1}^X(x_1, ..., x_{n+2}, s) = e_n` evaluated against the stage-`s`
/// approximation of `X'` under bound `s`.
pub struct TowerStep {
    numbering: Numbering,
    prev: Arc<dyn OracleColoring>,
}

impl TowerStep {
    pub fn new(numbering: Numbering, prev: Arc<dyn OracleColoring>) -> Self {
        TowerStep { numbering, prev }
    }
}

impl OracleColoring for TowerStep {
    fn dimension(&self) -> usize {
        self.prev.dimension() + 1
    }

    fn color_with(&self, oracle: Oracle, bound: u64, tuple: &[u64]) -> u64 {
        let (&s, head) = tuple.split_last().expect("non-empty tuple");
        if s == 0 {
            return 0;
        }
        let stage: Oracle = Arc::new(HaltJump::new(self.numbering.clone(), oracle, s));
        self.prev.color_with(stage, bound.min(s), head)
    }
}

/// An oracle coloring pinned to one oracle.
pub struct Instantiated {
    coloring: Arc<dyn OracleColoring>,
    oracle: Oracle,
}

impl Instantiated {
    pub fn new(coloring: Arc<dyn OracleColoring>, oracle: Oracle) -> Self {
        Instantiated { coloring, oracle }
    }
}

impl FiniteColoring for Instantiated {
    fn dimension(&self) -> usize {
        self.coloring.dimension()
    }

    fn color(&self, tuple: &[u64]) -> u64 {
        self.coloring.color_with(self.oracle.clone(), u64::MAX, tuple)
    }
}

/// One step up the tower, pinned to `x`.
pub fn tower_step(numbering: &Numbering, e_n: Arc<dyn OracleColoring>, x: Oracle) -> Instantiated {
    Instantiated::new(Arc::new(TowerStep::new(numbering.clone(), e_n)), x)
}

/// The sequence `e_0, e_1, ...` grown from one base coloring.
#[derive(Clone)]
pub struct Tower {
    numbering: Numbering,
    base: Arc<dyn OracleColoring>,
}

impl Tower {
    pub fn new(numbering: Numbering, base: Arc<dyn OracleColoring>) -> Self {
        Tower { numbering, base }
    }

    /// `e_n`, of dimension `n + 2` when the base has dimension 2.
    pub fn level(&self, n: usize) -> Arc<dyn OracleColoring> {
        (0..n).fold(self.base.clone(), |prev, _| {
            Arc::new(TowerStep::new(self.numbering.clone(), prev)) as Arc<dyn OracleColoring>
        })
    }
}

/// `C(S) = e_{s_1 - 1}^X(S)`; 0 when `min(S) < 2`.
pub struct DiagonalColoring {
    tower: Tower,
    oracle: Oracle,
}

pub fn diagonal_coloring(tower: Tower, oracle: Oracle) -> DiagonalColoring {
    DiagonalColoring { tower, oracle }
}

impl ExactColoring for DiagonalColoring {
    fn color(&self, s: &[u64]) -> u64 {
        if s[0] < 2 {
            return 0;
        }
        let e = self.tower.level(s[0] as usize - 1);
        debug_assert_eq!(e.dimension(), s.len());
        e.color_with(self.oracle.clone(), u64::MAX, s)
    }
}
