use std::sync::Arc;

use xramsey_core::colorings::{
    c2_coloring, cn_coloring, comega_coloring, constant_exact, dh_coloring, km_dh_coloring, min_minus_one,
    parity_of_min, parity_of_sum, second_mod_min, ExactColoring, FiniteColoring, RegressiveColoring,
};
use xramsey_core::machines::{empty, finite, parse_program_list, Numbering, Oracle, Tail};

use crate::config::{parse_set, ExperimentConfig};
use crate::CliError;

pub const COLORINGS: &[&str] = &[
    "parity-of-min",
    "parity-of-sum",
    "constant",
    "min-minus-one",
    "second-mod-min",
    "dh",
    "km-dh",
    "comega",
    "c2",
    "cn",
];

/// A built coloring: either of exactly large sets or of fixed-size tuples.
pub enum Built {
    Exact { exact: Arc<dyn ExactColoring>, regressive: Option<Arc<dyn RegressiveColoring>> },
    Finite(Arc<dyn FiniteColoring>),
}

impl Built {
    pub fn exact(&self) -> Result<&dyn ExactColoring, CliError> {
        match self {
            Built::Exact { exact, .. } => Ok(&**exact),
            Built::Finite(_) => Err(CliError::Config("this needs a coloring of exactly large sets".into())),
        }
    }

    pub fn finite(&self) -> Result<&dyn FiniteColoring, CliError> {
        match self {
            Built::Finite(c) => Ok(&**c),
            Built::Exact { .. } => Err(CliError::Config("this needs a tuple coloring (c2 or cn)".into())),
        }
    }

    pub fn regressive(&self) -> Result<&dyn RegressiveColoring, CliError> {
        match self {
            Built::Exact { regressive: Some(r), .. } => Ok(&**r),
            _ => {
                Err(CliError::Config("this needs a regressive coloring (km-dh, min-minus-one, second-mod-min)".into()))
            }
        }
    }
}

pub fn numbering(cfg: &ExperimentConfig) -> Result<Numbering, CliError> {
    if let Some(path) = &cfg.machines.programs {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        let programs = parse_program_list(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
        return Ok(Numbering::curated(programs, Tail::Diverge));
    }
    match cfg.machines.numbering.as_str() {
        "curated16" => Ok(Numbering::curated16()),
        "standard" => Ok(Numbering::standard()),
        other => Err(CliError::Config(format!("unknown numbering `{other}` (curated16, standard)"))),
    }
}

pub fn oracle(cfg: &ExperimentConfig) -> Result<Oracle, CliError> {
    match cfg.coloring.oracle.trim() {
        "empty" => Ok(empty()),
        spec => Ok(finite(parse_set(spec)?.into_vec())),
    }
}

fn exact<C: ExactColoring + 'static>(c: C) -> Built {
    Built::Exact { exact: Arc::new(c), regressive: None }
}

fn regressive<C: RegressiveColoring + 'static>(c: C) -> Built {
    let c = Arc::new(c);
    Built::Exact { exact: c.clone(), regressive: Some(c) }
}

pub fn coloring(cfg: &ExperimentConfig) -> Result<Built, CliError> {
    let spec = &cfg.coloring;
    let built = match spec.name.as_str() {
        "parity-of-min" => exact(parity_of_min()),
        "parity-of-sum" => exact(parity_of_sum()),
        "constant" => exact(constant_exact(spec.value)),
        "min-minus-one" => regressive(min_minus_one()),
        "second-mod-min" => regressive(second_mod_min()),
        "dh" => exact(dh_coloring(&numbering(cfg)?, oracle(cfg)?)),
        "km-dh" => regressive(km_dh_coloring(&numbering(cfg)?, oracle(cfg)?)),
        "comega" => exact(comega_coloring(&numbering(cfg)?, oracle(cfg)?, spec.direction)),
        "c2" => Built::Finite(Arc::new(c2_coloring(&numbering(cfg)?, oracle(cfg)?, spec.direction))),
        "cn" => Built::Finite(Arc::new(cn_coloring(&numbering(cfg)?, spec.n as usize, oracle(cfg)?, spec.direction))),
        other => {
            return Err(CliError::Config(format!("unknown coloring `{other}` (one of: {})", COLORINGS.join(", "))))
        }
    };
    Ok(built)
}
