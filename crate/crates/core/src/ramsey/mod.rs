//! Search and extraction of homogeneous sets, plus the brute-force verifiers
//! every search result is checked against.

mod brute;
mod chain;
mod extract;
mod minhom;
mod tree;
mod verify;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::largesets::FinSet;

pub use brute::{brute_homogeneous, SearchOutcome};
pub use chain::{iterate_rtomega, ChainStage, ChainWitness};
pub use extract::f_a_extract;
pub use minhom::min_homog_search;
pub use tree::{er_children, er_pool, leftmost_path, Children, PathResult};
pub use verify::{
    verify_exact_homogeneous, verify_finite_homogeneous, verify_min_homogeneous, Counterexample, VerifyReport,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    Homogeneous,
    MinHomogeneous,
    Chain,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", content = "value", rename_all = "kebab-case")]
pub enum ColorData {
    /// Nothing was colored inside the set.
    Vacuous,
    Single(u64),
    PerMinimum(BTreeMap<u64, u64>),
}

/// Bounds that stand in for unbounded searches.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    /// Largest universe a search accepts.
    pub max_universe: u64,
    /// Candidate scans allowed per tree expansion.
    pub max_candidates: u64,
    /// Tree nodes a path search may expand.
    pub max_nodes: u64,
    /// Cutoff for oracle answers.
    pub stage_cutoff: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_universe: 4096, max_candidates: 1 << 20, max_nodes: 1 << 20, stage_cutoff: 1_000_000 }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub evaluations: u64,
    /// Some search stopped on budget rather than by exhausting the universe.
    pub truncated: bool,
}

impl SearchStats {
    pub fn absorb(&mut self, other: &SearchStats) {
        self.nodes += other.nodes;
        self.evaluations += other.evaluations;
        self.truncated |= other.truncated;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub set: FinSet,
    pub kind: WitnessKind,
    pub color: ColorData,
    /// Set only after the matching verifier passed.
    pub verified: bool,
    /// The requested size was reached.
    pub complete: bool,
    pub stats: SearchStats,
}

#[cfg(test)]
mod tests;
