//! Experiment configuration: TOML sections, layered as
//! built-in defaults < `XRAMSEY_CUTOFF` < witness record < config file < flags.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};
use xramsey_core::colorings::Direction;
use xramsey_core::ramsey::SearchBudget;
use xramsey_core::FinSet;

use crate::CliError;

pub const CUTOFF_ENV: &str = "XRAMSEY_CUTOFF";
pub const DEFAULT_CUTOFF: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ColoringSpec {
    pub name: String,
    /// `empty` or an explicit set such as `{0,3}`.
    pub oracle: String,
    pub direction: Direction,
    /// Level of `cn`.
    pub n: u64,
    /// Color of `constant`.
    pub value: u64,
}

impl Default for ColoringSpec {
    fn default() -> Self {
        ColoringSpec {
            name: "parity-of-min".into(),
            oracle: "empty".into(),
            direction: Direction::Capture,
            n: 2,
            value: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct MachineSpec {
    /// `curated16` or `standard`; ignored when `programs` is set.
    pub numbering: String,
    /// Program-universe file; indices past the list diverge.
    pub programs: Option<PathBuf>,
    /// Ground-truth cutoff for decoders.
    pub cutoff: u64,
}

impl Default for MachineSpec {
    fn default() -> Self {
        MachineSpec { numbering: "curated16".into(), programs: None, cutoff: DEFAULT_CUTOFF }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct BudgetSpec {
    pub max_universe: u64,
    pub max_candidates: u64,
    pub max_nodes: u64,
}

impl Default for BudgetSpec {
    fn default() -> Self {
        let b = SearchBudget::default();
        BudgetSpec { max_universe: b.max_universe, max_candidates: b.max_candidates, max_nodes: b.max_nodes }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    pub coloring: ColoringSpec,
    /// `interval:a..b`, `evens:a..b`, `odds:a..b` (inclusive) or `{a,b,...}`.
    pub universe: Option<String>,
    pub machines: MachineSpec,
    pub budget: BudgetSpec,
    pub seed: u64,
}

impl ExperimentConfig {
    /// Defaults with the environment cutoff applied.
    pub fn from_env() -> Result<Self, CliError> {
        let mut cfg = ExperimentConfig::default();
        if let Ok(raw) = std::env::var(CUTOFF_ENV) {
            cfg.machines.cutoff = raw
                .trim()
                .parse()
                .map_err(|_| CliError::Config(format!("{CUTOFF_ENV}={raw} is not a natural number")))?;
        }
        Ok(cfg)
    }

    /// Overlay a (possibly partial) TOML document.
    pub fn merge_toml(self, text: &str) -> Result<Self, CliError> {
        let overlay: toml::Table = text.parse().map_err(|e| CliError::Config(format!("config: {e}")))?;
        let mut base = toml::Table::try_from(&self).map_err(|e| CliError::Config(e.to_string()))?;
        merge(&mut base, overlay);
        base.try_into().map_err(|e: toml::de::Error| CliError::Config(format!("config: {e}")))
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let b = &self.budget;
        if self.machines.cutoff == 0 || b.max_universe == 0 || b.max_candidates == 0 || b.max_nodes == 0 {
            return Err(CliError::Config("budgets and cutoffs must be positive".into()));
        }
        if self.coloring.name == "cn" && self.coloring.n < 2 {
            return Err(CliError::Config("cn needs n >= 2".into()));
        }
        Ok(())
    }

    pub fn budget(&self) -> SearchBudget {
        SearchBudget {
            max_universe: self.budget.max_universe,
            max_candidates: self.budget.max_candidates,
            max_nodes: self.budget.max_nodes,
            stage_cutoff: self.machines.cutoff,
        }
    }

    pub fn universe(&self) -> Result<FinSet, CliError> {
        let spec = self.universe.as_deref().ok_or_else(|| CliError::Config("no universe given".into()))?;
        let u = parse_universe(spec)?;
        if u.len() as u64 > self.budget.max_universe {
            return Err(CliError::Config(format!(
                "universe has {} elements, budget allows {}",
                u.len(),
                self.budget.max_universe
            )));
        }
        Ok(u)
    }
}

fn merge(base: &mut toml::Table, overlay: toml::Table) {
    for (k, v) in overlay {
        match (base.get_mut(&k), v) {
            (Some(toml::Value::Table(b)), toml::Value::Table(o)) => merge(b, o),
            (_, v) => {
                base.insert(k, v);
            }
        }
    }
}

pub fn parse_universe(spec: &str) -> Result<FinSet, CliError> {
    let spec = spec.trim();
    if spec.starts_with('{') {
        return spec.parse().map_err(|e| CliError::Config(format!("universe: {e}")));
    }
    let bad = || CliError::Config(format!("malformed universe `{spec}`"));
    let (kind, range) = spec.split_once(':').ok_or_else(bad)?;
    let (lo, hi) = range.split_once("..").ok_or_else(bad)?;
    let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: u64 = hi.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    let keep: fn(u64) -> bool = match kind.trim() {
        "interval" => |_| true,
        "evens" => |x| x % 2 == 0,
        "odds" => |x| x % 2 == 1,
        _ => return Err(bad()),
    };
    Ok(FinSet::from_unsorted((lo..=hi).filter(|&x| keep(x))))
}

pub fn parse_set(spec: &str) -> Result<FinSet, CliError> {
    spec.trim().parse().map_err(|e| CliError::Config(format!("{e}")))
}
