//! A toy oracle machine standing in for an acceptable numbering.
//!
//! Programs are 4-register counter machines with an oracle-query instruction.
//! Every natural names exactly one program, runs are step- and value-bounded
//! in the `{e}^X_s(x)` sense, and the jump operators are realized with explicit
//! stages or cutoffs so that every answer is decidable.

mod curated;
mod jump;
mod oracle;
mod pairing;
mod program;
mod run;

pub use curated::{curated16, CURATED16_SRC};
pub use jump::{
    g_limit, jump_halt0, jump_pairs_approx, mone_reduction, staged_jump, HaltJump, JumpFlavor, JumpStageSpec, PairJump,
    StageDomain,
};
pub use oracle::{Below, EmptyOracle, FiniteOracle, Join, Oracle, OracleSet};
pub use pairing::{code, pair, triangular, uncode, unpair};
pub use program::{decode_program, encode_program, parse_program_list, Instr, Program, REGISTERS};
pub use run::{run_bounded, run_program, Numbering, RunOutcome, RunStatus, Tail};

use std::sync::Arc;

/// Shared empty oracle.
pub fn empty() -> Oracle {
    Arc::new(EmptyOracle)
}

/// Shared explicit finite oracle.
pub fn finite<I: IntoIterator<Item = u64>>(it: I) -> Oracle {
    Arc::new(FiniteOracle::new(it))
}
