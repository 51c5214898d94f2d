//! Jump approximations: stage domains `W_{i,s}^X`, the limit function `g^X`,
//! both jump flavors and their staged versions, and the many-one reductions
//! between jump levels.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use super::oracle::{MemoTable, Oracle, OracleSet};
use super::pairing::{code, uncode};
use super::program::Program;
use super::run::Numbering;
use crate::error::{Error, Result};
use crate::largesets::FinSet;

/// `W_{i,s}^X = { x : {i}^X_s(x) halts }`, lazily.
pub struct StageDomain {
    numbering: Numbering,
    program: u64,
    inner: Oracle,
    stage: u64,
    memo: MemoTable,
}

impl StageDomain {
    pub fn new(numbering: Numbering, program: u64, inner: Oracle, stage: u64) -> Self {
        StageDomain { numbering, program, inner, stage, memo: MemoTable::new() }
    }
}

impl OracleSet for StageDomain {
    fn contains(&self, x: u64) -> bool {
        if x >= self.stage {
            return false;
        }
        self.memo.get_or(x, || self.numbering.halts(self.program, &*self.inner, x, self.stage))
    }
}

/// Halt-on-0 jump with a cutoff: `e` is a member iff `{e}^X_cutoff(0)` halts.
///
/// With a small cutoff this is the stage approximation of `X'`; with a large
/// one it stands in for the true jump on programs known to halt early.
pub struct HaltJump {
    numbering: Numbering,
    inner: Oracle,
    cutoff: u64,
    memo: MemoTable,
}

impl HaltJump {
    pub fn new(numbering: Numbering, inner: Oracle, cutoff: u64) -> Self {
        HaltJump { numbering, inner, cutoff, memo: MemoTable::new() }
    }

    pub fn cutoff(&self) -> u64 {
        self.cutoff
    }
}

impl OracleSet for HaltJump {
    fn contains(&self, e: u64) -> bool {
        self.memo.get_or(e, || self.numbering.halts(e, &*self.inner, 0, self.cutoff))
    }
}

/// Pair-flavor jump approximation `X'_s = { <m,e> : (∃ t < s) m ∈ W_{e,t}^X }`, lazily.
///
/// By monotonicity of bounded runs the witness `t` can always be taken to be
/// `s - 1`.
pub struct PairJump {
    numbering: Numbering,
    inner: Oracle,
    stage: u64,
    memo: MemoTable,
}

impl PairJump {
    pub fn new(numbering: Numbering, inner: Oracle, stage: u64) -> Self {
        PairJump { numbering, inner, stage, memo: MemoTable::new() }
    }

    pub fn stage(&self) -> u64 {
        self.stage
    }
}

impl OracleSet for PairJump {
    fn contains(&self, c: u64) -> bool {
        if self.stage < 2 {
            return false;
        }
        let (m, e) = uncode(c);
        let t = self.stage - 1;
        if m >= t || e >= t {
            return false;
        }
        self.memo.get_or(c, || self.numbering.halts(e, &*self.inner, m, t))
    }
}

/// Stage list `(u_n, ..., u_1, s)`, innermost jump first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JumpStageSpec(pub Vec<u64>);

impl JumpStageSpec {
    pub fn stages(&self) -> &[u64] {
        &self.0
    }
}

impl fmt::Display for JumpStageSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for JumpStageSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let stages = s
            .split(',')
            .map(|p| p.trim().parse::<u64>().map_err(|_| Error::Invalid(format!("bad stage list `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(JumpStageSpec(stages))
    }
}

/// Which jump a many-one reduction targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JumpFlavor {
    /// `X' = { <m,e> : m ∈ W_e^X }`.
    Pair,
    /// `X' = { e : {e}^X(0) halts }`.
    Halt0,
}

impl Numbering {
    /// `g^X(i, e, s, x)`: run `e` on `x` for bound `s` against the oracle
    /// `W_{i,s}^X`; 0 when that run does not halt.
    pub fn g_limit(&self, i: u64, e: u64, s: u64, x: u64, oracle: Oracle) -> u64 {
        if s == 0 {
            return 0;
        }
        let dom = StageDomain::new(self.clone(), i, oracle, s);
        self.run_bounded(e, &dom, x, s).value().unwrap_or(0)
    }

    /// Materialized `X'_s`.
    pub fn jump_pairs_approx(&self, oracle: &dyn OracleSet, s: u64) -> FinSet {
        if s < 2 {
            return FinSet::empty();
        }
        let t = s - 1;
        let mut out = Vec::new();
        for e in 0..t {
            for m in 0..t {
                if self.halts(e, oracle, m, t) {
                    out.push(code(m, e));
                }
            }
        }
        FinSet::from_unsorted(out)
    }

    /// Materialized staged jump `X^{(n)}_{u_n,...,u_1}`, innermost stage first.
    pub fn staged_jump(&self, oracle: Oracle, spec: &JumpStageSpec) -> FinSet {
        let mut cur: Option<FinSet> = None;
        for &s in spec.stages() {
            let next = match &cur {
                None => self.jump_pairs_approx(&*oracle, s),
                Some(set) => self.jump_pairs_approx(set, s),
            };
            cur = Some(next);
        }
        cur.unwrap_or_else(|| oracle.members_below(0))
    }

    /// Lazy staged jump; only the codes actually asked about get simulated.
    pub fn staged_jump_oracle(&self, oracle: Oracle, spec: &JumpStageSpec) -> Oracle {
        spec.stages().iter().fold(oracle, |inner, &s| Arc::new(PairJump::new(self.clone(), inner, s)) as Oracle)
    }

    /// `X' = { e : {e}^X_cutoff(0) halts }`.
    pub fn jump_halt0(&self, oracle: Oracle, cutoff: u64) -> Oracle {
        Arc::new(HaltJump::new(self.clone(), oracle, cutoff))
    }

    /// `n`-fold halt-on-0 jump tower with one cutoff at every level.
    pub fn halt0_tower(&self, oracle: Oracle, levels: u64, cutoff: u64) -> Oracle {
        (0..levels).fold(oracle, |inner, _| self.jump_halt0(inner, cutoff))
    }

    /// `n`-fold pair jump with one stage at every level.
    pub fn pair_tower(&self, oracle: Oracle, levels: u64, stage: u64) -> Oracle {
        (0..levels).fold(oracle, |inner, _| Arc::new(PairJump::new(self.clone(), inner, stage)) as Oracle)
    }

    /// `f_{i,j}(m)`: a many-one reduction from the `i`-th to the `j`-th jump.
    pub fn mone_reduction(&self, i: u64, j: u64, m: u64, flavor: JumpFlavor) -> Result<u64> {
        if i > j {
            return Err(Error::BadReductionLevels { i, j });
        }
        let mut v = m;
        match flavor {
            JumpFlavor::Pair => {
                let q = self.index_of(&Program::query_input())?;
                for _ in i..j {
                    v = checked_code(v, q)?;
                }
            }
            JumpFlavor::Halt0 => {
                for _ in i..j {
                    if v > 64 {
                        return Err(Error::IndexOverflow);
                    }
                    v = self.index_of(&Program::query_constant(v))?;
                }
            }
        }
        Ok(v)
    }
}

fn checked_code(m: u64, e: u64) -> Result<u64> {
    let x = m.checked_add(e).ok_or(Error::IndexOverflow)?;
    let t = (x as u128) * (x as u128 + 1) / 2 + e as u128;
    if t > u64::MAX as u128 {
        return Err(Error::IndexOverflow);
    }
    Ok(code(m, e))
}

pub fn g_limit(i: u64, e: u64, s: u64, x: u64, oracle: Oracle) -> u64 {
    Numbering::standard().g_limit(i, e, s, x, oracle)
}

pub fn jump_pairs_approx(oracle: &dyn OracleSet, s: u64) -> FinSet {
    Numbering::standard().jump_pairs_approx(oracle, s)
}

pub fn staged_jump(oracle: Oracle, spec: &JumpStageSpec) -> FinSet {
    Numbering::standard().staged_jump(oracle, spec)
}

pub fn jump_halt0(oracle: Oracle, cutoff: u64) -> Oracle {
    Numbering::standard().jump_halt0(oracle, cutoff)
}

pub fn mone_reduction(i: u64, j: u64, m: u64, flavor: JumpFlavor) -> Result<u64> {
    Numbering::standard().mone_reduction(i, j, m, flavor)
}
