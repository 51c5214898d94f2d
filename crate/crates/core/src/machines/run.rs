use std::borrow::Cow;
use std::sync::Arc;

use super::curated::curated16;
use super::oracle::OracleSet;
use super::program::{decode_program, encode_program, Instr, Program, REGISTERS};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RunStatus {
    Halted(u64),
    ExceededBound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunOutcome {
    pub status: RunStatus,
    pub steps_used: u64,
    pub max_value_seen: u64,
}

impl RunOutcome {
    fn exceeded(steps_used: u64, max_value_seen: u64) -> Self {
        RunOutcome { status: RunStatus::ExceededBound, steps_used, max_value_seen }
    }

    pub fn halted(&self) -> bool {
        matches!(self.status, RunStatus::Halted(_))
    }

    pub fn value(&self) -> Option<u64> {
        match self.status {
            RunStatus::Halted(y) => Some(y),
            RunStatus::ExceededBound => None,
        }
    }
}

/// What indices past the curated list mean.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tail {
    /// Index `len + k` is `decode_program(k)`; the numbering stays a bijection.
    Standard,
    /// Every index past the list is the empty program.
    Diverge,
}

/// A numbering of programs: which program each index names.
///
/// `Numbering::standard()` is the bijective decoding. Experiments inject a
/// curated list in front so that every small index has known behavior.
#[derive(Clone, Debug)]
pub struct Numbering {
    curated: Arc<Vec<Program>>,
    tail: Tail,
}

impl Default for Numbering {
    fn default() -> Self {
        Numbering::standard()
    }
}

impl Numbering {
    pub fn standard() -> Self {
        Numbering { curated: Arc::new(Vec::new()), tail: Tail::Standard }
    }

    pub fn curated(programs: Vec<Program>, tail: Tail) -> Self {
        Numbering { curated: Arc::new(programs), tail }
    }

    /// The bundled 16-program universe with a diverging tail.
    pub fn curated16() -> Self {
        Numbering::curated(curated16(), Tail::Diverge)
    }

    pub fn curated_len(&self) -> u64 {
        self.curated.len() as u64
    }

    pub fn tail(&self) -> Tail {
        self.tail
    }

    pub fn program(&self, e: u64) -> Cow<'_, Program> {
        let n = self.curated_len();
        if e < n {
            Cow::Borrowed(&self.curated[e as usize])
        } else {
            match self.tail {
                Tail::Standard => Cow::Owned(decode_program(e - n)),
                Tail::Diverge => Cow::Owned(Program::default()),
            }
        }
    }

    /// Least index naming `p`.
    pub fn index_of(&self, p: &Program) -> Result<u64> {
        if let Some(i) = self.curated.iter().position(|q| q == p) {
            return Ok(i as u64);
        }
        let n = self.curated_len();
        match self.tail {
            Tail::Standard => encode_program(p)?.checked_add(n).ok_or(Error::IndexOverflow),
            Tail::Diverge if p.is_empty() => Ok(n),
            Tail::Diverge => Err(Error::Invalid(format!("program is not indexed by this numbering:\n{p}"))),
        }
    }

    /// `{e}^X_s(x)`: run program `e` on input `x` with oracle `X` under bound `s`.
    ///
    /// Halts with `y` iff `s > 0`, `e, x, y < s`, the run halts within fewer
    /// than `s` steps (HALT counts as a step), and every register value and
    /// every queried number stays below `s`. Running off either end of the
    /// program never halts.
    pub fn run_bounded(&self, e: u64, oracle: &dyn OracleSet, x: u64, s: u64) -> RunOutcome {
        if s == 0 || e >= s || x >= s {
            return RunOutcome::exceeded(0, x);
        }
        run_program(&self.program(e), oracle, x, s)
    }

    pub fn halts(&self, e: u64, oracle: &dyn OracleSet, x: u64, s: u64) -> bool {
        self.run_bounded(e, oracle, x, s).halted()
    }
}

/// The bound-`s` run of an explicit program (the index check is the caller's).
pub fn run_program(p: &Program, oracle: &dyn OracleSet, x: u64, s: u64) -> RunOutcome {
    let code = p.instrs();
    let mut regs = [0u64; REGISTERS];
    regs[0] = x;
    let mut max_seen = x;
    if s == 0 || x >= s {
        return RunOutcome::exceeded(0, max_seen);
    }
    let mut pc: i64 = 0;
    let mut steps: u64 = 0;
    loop {
        if pc < 0 || pc as usize >= code.len() {
            return RunOutcome::exceeded(steps, max_seen);
        }
        if steps + 1 >= s {
            return RunOutcome::exceeded(steps, max_seen);
        }
        steps += 1;
        match code[pc as usize] {
            Instr::Halt => {
                return RunOutcome { status: RunStatus::Halted(regs[0]), steps_used: steps, max_value_seen: max_seen };
            }
            Instr::Inc(r) => {
                let v = regs[r as usize] + 1;
                max_seen = max_seen.max(v);
                if v >= s {
                    return RunOutcome::exceeded(steps, max_seen);
                }
                regs[r as usize] = v;
                pc += 1;
            }
            Instr::Dec(r) => {
                regs[r as usize] = regs[r as usize].saturating_sub(1);
                pc += 1;
            }
            Instr::Jz(r, off) => {
                if regs[r as usize] == 0 {
                    if off == 0 {
                        // a taken self-jump never changes state
                        return RunOutcome::exceeded(steps, max_seen);
                    }
                    pc += off;
                } else {
                    pc += 1;
                }
            }
            Instr::Query(r) => {
                let v = regs[r as usize];
                regs[r as usize] = oracle.contains(v) as u64;
                pc += 1;
            }
        }
    }
}

/// `{e}^X_s(x)` under the standard numbering.
pub fn run_bounded(e: u64, oracle: &dyn OracleSet, x: u64, s: u64) -> RunOutcome {
    Numbering::standard().run_bounded(e, oracle, x, s)
}
