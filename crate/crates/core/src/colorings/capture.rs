use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::{ExactColoring, FiniteColoring};
use crate::decoders::Decoder;
use crate::machines::{Numbering, Oracle, OracleSet};

/// Which way the stage implication in `C_2`, `C_n` points.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// `{e}_z↓ → {e}_y↓`: every halt seen by stage `z` was already seen by `y`.
    #[default]
    Capture,
    /// `{e}_y↓ → {e}_z↓`, verbatim. Constant 1 under monotone runs.
    Literal,
}

/// Shared state behind `C_2, C_3, ...` for one oracle `A`.
pub struct CaptureFamily {
    decoder: Decoder,
    direction: Direction,
    memo: Mutex<HashMap<(usize, Vec<u64>), u64>>,
}

impl CaptureFamily {
    pub fn new(numbering: Numbering, oracle: Oracle, direction: Direction) -> Self {
        CaptureFamily { decoder: Decoder::new(numbering, oracle), direction, memo: Mutex::new(HashMap::new()) }
    }

    pub fn decoder(&self) -> &Decoder {
        &self.decoder
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    fn implication(&self, k: u64, y: u64, z: u64, oracle: &dyn OracleSet) -> bool {
        let nb = self.decoder.numbering();
        (0..=k).all(|e| {
            let at_y = nb.halts(e, oracle, 0, y);
            let at_z = nb.halts(e, oracle, 0, z);
            match self.direction {
                Direction::Capture => !at_z || at_y,
                Direction::Literal => !at_y || at_z,
            }
        })
    }

    /// `C_n` on an `(n+1)`-tuple.
    pub fn color(&self, n: usize, t: &[u64]) -> u64 {
        assert!(n >= 2, "C_n needs n >= 2");
        assert_eq!(t.len(), n + 1, "C_{n} takes {} arguments", n + 1);
        let key = (n, t.to_vec());
        if let Some(&c) = self.memo.lock().unwrap().get(&key) {
            return c;
        }
        let c = if n == 2 {
            self.implication(t[0], t[1], t[2], &**self.decoder.oracle()) as u64
        } else {
            let mut colors = t.iter().copied().combinations(n).map(|sub| self.color(n - 1, &sub));
            let first = colors.next().expect("n+1 >= 1 subsets");
            let homogeneous = colors.all(|c| c == first);
            if !homogeneous {
                0
            } else {
                let y = self.decoder.y_set(n, t).expect("tuple checked above");
                self.implication(t[0], t[1], t[2], &*y) as u64
            }
        };
        self.memo.lock().unwrap().insert(key, c);
        c
    }
}

/// `C_n` as a tuple coloring of dimension `n + 1`.
#[derive(Clone)]
pub struct CnColoring {
    family: Arc<CaptureFamily>,
    n: usize,
}

impl CnColoring {
    pub fn new(family: Arc<CaptureFamily>, n: usize) -> Self {
        assert!(n >= 2, "C_n needs n >= 2");
        CnColoring { family, n }
    }

    pub fn family(&self) -> &Arc<CaptureFamily> {
        &self.family
    }
}

impl FiniteColoring for CnColoring {
    fn dimension(&self) -> usize {
        self.n + 1
    }

    fn color(&self, tuple: &[u64]) -> u64 {
        self.family.color(self.n, tuple)
    }
}

pub fn c2_coloring(numbering: &Numbering, a: Oracle, direction: Direction) -> CnColoring {
    cn_coloring(numbering, 2, a, direction)
}

pub fn cn_coloring(numbering: &Numbering, n: usize, a: Oracle, direction: Direction) -> CnColoring {
    CnColoring::new(Arc::new(CaptureFamily::new(numbering.clone(), a, direction)), n)
}

/// `C_ω(a_1, ..., a_k) = C_{a_1}(a_1, ..., a_k)`; 0 when `a_1 < 2`.
#[derive(Clone)]
pub struct COmega {
    family: Arc<CaptureFamily>,
}

impl COmega {
    pub fn new(family: Arc<CaptureFamily>) -> Self {
        COmega { family }
    }

    pub fn family(&self) -> &Arc<CaptureFamily> {
        &self.family
    }
}

impl ExactColoring for COmega {
    fn color(&self, s: &[u64]) -> u64 {
        if s[0] < 2 {
            return 0;
        }
        self.family.color(s[0] as usize, s)
    }
}

pub fn comega_coloring(numbering: &Numbering, a: Oracle, direction: Direction) -> COmega {
    COmega::new(Arc::new(CaptureFamily::new(numbering.clone(), a, direction)))
}
