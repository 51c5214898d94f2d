//! The curated 16-program universe used by the decoder experiments.
//!
//! Every halting program halts within 1000 steps (on input 0, with any
//! oracle), every non-halting one provably loops, and every oracle query made
//! on input 0 asks about a value smaller than the program's own slot.
//!
//! | slot | behavior on input 0                           |
//! |------|-----------------------------------------------|
//! | 0    | empty program, diverges                       |
//! | 1    | `HALT`                                        |
//! | 2    | self-loop                                     |
//! | 3    | halts iff 0 is in the oracle                  |
//! | 4    | halts iff 1 is in the oracle                  |
//! | 5    | counting loop, halts after a few dozen steps  |
//! | 6    | halts iff 2 is in the oracle                  |
//! | 7    | unbounded increment loop                      |
//! | 8    | counting loop, a few hundred steps            |
//! | 9    | halts iff 3 is not in the oracle              |
//! | 10   | halts iff 5 is in the oracle                  |
//! | 11   | counting loop, then halts iff 4 is in the oracle |
//! | 12   | `DEC 0; HALT`                                 |
//! | 13   | counting loop, several hundred steps          |
//! | 14   | `INC 0; INC 0; HALT`                          |
//! | 15   | halts iff 1 and 2 are both in the oracle      |

use super::program::{parse_program_list, Program};

pub const CURATED16_SRC: &str = include_str!("curated16.prog");

pub fn curated16() -> Vec<Program> {
    parse_program_list(CURATED16_SRC).expect("bundled curated universe parses")
}
