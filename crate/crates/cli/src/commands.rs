use std::path::Path;

use clap::ValueEnum;
use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use xramsey_core::colorings::{km_to_rt, km_witness, rt_via_km, ExactColoring, FiniteColoring};
use xramsey_core::decoders::{dh_reconstruct, halt0_truth, DecodeVerdict, Decoder};
use xramsey_core::largesets::count_exactly_large;
use xramsey_core::machines::{Instr, Numbering, Program};
use xramsey_core::ramsey::{
    brute_homogeneous, f_a_extract, iterate_rtomega, min_homog_search, verify_exact_homogeneous,
    verify_finite_homogeneous, verify_min_homogeneous, SearchOutcome, VerifyReport, WitnessKind,
};
use xramsey_core::{enumerate_exactly_large, is_exactly_large, FinSet};

use crate::config::{parse_set, ExperimentConfig};
use crate::setup::{self, Built};
use crate::{Cli, CliError, Command, Common, KindArg, Mode, Output, ReduceDirection, SetSource, Status};

pub fn run(cli: Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Enumerate { count } => {
            let cfg = resolve(&cli.common, None)?;
            enumerate(&cfg, *count)
        }
        Command::Color { set, sample } => {
            let cfg = resolve(&cli.common, None)?;
            color(&cfg, set.as_deref(), *sample)
        }
        Command::Search { mode, size, a0 } => {
            let cfg = resolve(&cli.common, None)?;
            search(&cfg, *mode, *size, *a0)
        }
        Command::Verify { source, kind, trace } => {
            if let Some(trace) = trace {
                let cfg = resolve(&cli.common, None)?;
                return verify_trace(&cfg, trace);
            }
            let input = load_set(source)?;
            let cfg = resolve(&cli.common, input.config.clone())?;
            let kind = kind.map(|k| match k {
                KindArg::Homogeneous => WitnessKind::Homogeneous,
                KindArg::MinHomogeneous => WitnessKind::MinHomogeneous,
                KindArg::Chain => WitnessKind::Chain,
            });
            verify(&cfg, &input.set, kind.or(input.kind).unwrap_or(WitnessKind::Homogeneous))
        }
        Command::Decode { source, query, reconstruct } => {
            let input = load_set(source)?;
            let cfg = resolve(&cli.common, input.config.clone())?;
            match reconstruct {
                Some(h) => reconstruct_levels(&cfg, &input.set, *h),
                None => decode(&cfg, &input.set, query),
            }
        }
        Command::Reduce { which, source } => {
            let input = load_set(source)?;
            let cfg = resolve(&cli.common, input.config.clone())?;
            reduce(&cfg, *which, &input.set)
        }
    }
}

fn resolve(flags: &Common, recorded: Option<ExperimentConfig>) -> Result<ExperimentConfig, CliError> {
    let mut cfg = match recorded {
        Some(c) => c,
        None => ExperimentConfig::from_env()?,
    };
    if let Some(path) = &flags.config {
        cfg = cfg.merge_toml(&read(path)?)?;
    }
    let c = &mut cfg.coloring;
    if let Some(v) = &flags.coloring {
        c.name = v.clone();
    }
    if let Some(v) = &flags.oracle {
        c.oracle = v.clone();
    }
    if let Some(v) = flags.direction {
        c.direction = v.into();
    }
    if let Some(v) = flags.n {
        c.n = v;
    }
    if let Some(v) = flags.value {
        c.value = v;
    }
    if let Some(v) = &flags.universe {
        cfg.universe = Some(v.clone());
    }
    if let Some(v) = &flags.numbering {
        cfg.machines.numbering = v.clone();
        cfg.machines.programs = None;
    }
    if let Some(v) = &flags.programs {
        cfg.machines.programs = Some(v.clone());
    }
    if let Some(v) = flags.cutoff {
        cfg.machines.cutoff = v;
    }
    if let Some(v) = flags.seed {
        cfg.seed = v;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

#[derive(Serialize)]
struct Record<'a, T: Serialize> {
    command: &'a str,
    config: &'a ExperimentConfig,
    result: T,
}

fn record<T: Serialize>(command: &str, cfg: &ExperimentConfig, result: T, status: Status) -> Result<Output, CliError> {
    let mut text = serde_json::to_string_pretty(&Record { command, config: cfg, result })
        .map_err(|e| CliError::Internal(e.to_string()))?;
    text.push('\n');
    Ok(Output { text, status })
}

fn status_of(passed: bool) -> Status {
    if passed {
        Status::Ok
    } else {
        Status::VerificationFailed
    }
}

// ---- enumerate / color ----

fn enumerate(cfg: &ExperimentConfig, count: bool) -> Result<Output, CliError> {
    let u = cfg.universe()?;
    let text = if count {
        format!("{}\n", count_exactly_large(&u))
    } else {
        enumerate_exactly_large(&u).map(|s| format!("{s}\n")).collect()
    };
    Ok(Output { text, status: Status::Ok })
}

fn color_of(built: &Built, s: &FinSet) -> Result<u64, CliError> {
    match built {
        Built::Exact { exact, .. } => {
            if !is_exactly_large(s.as_slice()) {
                return Err(CliError::Config(format!("{s} is not exactly large")));
            }
            Ok(exact.color(s.as_slice()))
        }
        Built::Finite(c) => {
            if s.len() != c.dimension() {
                return Err(CliError::Config(format!("{s} does not have {} elements", c.dimension())));
            }
            Ok(c.color(s.as_slice()))
        }
    }
}

fn sample_set(built: &Built, u: &[u64], rng: &mut ChaCha8Rng) -> Option<FinSet> {
    let size = match built {
        Built::Finite(c) => c.dimension(),
        Built::Exact { .. } => {
            let heads: Vec<usize> = (0..u.len()).filter(|&i| (u.len() - i - 1) as u64 >= u[i]).collect();
            let i = *heads.get(rng.gen_range(0..heads.len().max(1)))?;
            let mut rest: Vec<u64> = u[i + 1..].to_vec();
            for k in 0..u[i] as usize {
                let j = rng.gen_range(k..rest.len());
                rest.swap(k, j);
            }
            rest.truncate(u[i] as usize);
            rest.push(u[i]);
            return Some(FinSet::from_unsorted(rest));
        }
    };
    if u.len() < size {
        return None;
    }
    let mut pool = u.to_vec();
    for k in 0..size {
        let j = rng.gen_range(k..pool.len());
        pool.swap(k, j);
    }
    pool.truncate(size);
    Some(FinSet::from_unsorted(pool))
}

fn color(cfg: &ExperimentConfig, set: Option<&str>, sample: Option<usize>) -> Result<Output, CliError> {
    let built = setup::coloring(cfg)?;
    let sets: Vec<FinSet> = if let Some(s) = set {
        vec![parse_set(s)?]
    } else {
        let u = cfg.universe()?;
        match (sample, &built) {
            (Some(n), _) => {
                let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
                (0..n).map_while(|_| sample_set(&built, u.as_slice(), &mut rng)).collect()
            }
            (None, Built::Exact { .. }) => enumerate_exactly_large(&u).collect(),
            (None, Built::Finite(c)) => {
                u.iter().copied().combinations(c.dimension()).map(FinSet::from_unsorted).collect()
            }
        }
    };
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["set", "color"]).map_err(csv_err)?;
    for s in &sets {
        let c = color_of(&built, s)?;
        w.write_record([s.to_string(), c.to_string()]).map_err(csv_err)?;
    }
    Ok(Output { text: csv_text(w)?, status: Status::Ok })
}

fn csv_err(e: csv::Error) -> CliError {
    CliError::Internal(e.to_string())
}

fn csv_text(w: csv::Writer<Vec<u8>>) -> Result<String, CliError> {
    let bytes = w.into_inner().map_err(|e| CliError::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Internal(e.to_string()))
}

// ---- search / verify ----

fn verify_as(built: &Built, set: &FinSet, kind: WitnessKind) -> Result<VerifyReport, CliError> {
    match (built, kind) {
        (Built::Exact { exact, .. }, WitnessKind::MinHomogeneous) => Ok(verify_min_homogeneous(set, &**exact)),
        (Built::Exact { exact, .. }, _) => Ok(verify_exact_homogeneous(set, &**exact)),
        (Built::Finite(c), WitnessKind::Homogeneous) => Ok(verify_finite_homogeneous(set, &**c)),
        (Built::Finite(_), k) => {
            Err(CliError::Config(format!("{k:?} witnesses need a coloring of exactly large sets")))
        }
    }
}

fn search(
    cfg: &ExperimentConfig,
    mode: Option<Mode>,
    size: Option<usize>,
    a0: Option<u64>,
) -> Result<Output, CliError> {
    let built = setup::coloring(cfg)?;
    let mut u = cfg.universe()?;
    if let Some(a0) = a0 {
        if !u.contains(a0) {
            return Err(CliError::Config(format!("a0 = {a0} is not in the universe")));
        }
        u = FinSet::from_unsorted(u.iter().copied().filter(|&x| x >= a0));
    }
    let budget = cfg.budget();
    let mode = mode.unwrap_or(match (&built, size) {
        (Built::Exact { .. }, _) => Mode::Chain,
        (Built::Finite(_), Some(_)) => Mode::Homogeneous,
        (Built::Finite(_), None) => Mode::Extract,
    });
    let need_size = || size.ok_or_else(|| CliError::Config("this mode needs --size".into()));
    let (outcome, extra) = match mode {
        Mode::Chain => {
            let chain = iterate_rtomega(built.exact()?, &u, &budget);
            let extra = json!({ "chain": chain.chain, "stages": chain.stages });
            (SearchOutcome::Found(chain.witness), extra)
        }
        Mode::MinHomogeneous => (min_homog_search(built.exact()?, &u, need_size()?), Value::Null),
        Mode::Homogeneous => {
            let c = built.finite()?;
            let k = need_size()?;
            if k < c.dimension() {
                return Err(CliError::Config(format!("--size must be at least {}", c.dimension())));
            }
            (brute_homogeneous(c, &u, k), Value::Null)
        }
        Mode::Extract => {
            let c = built.finite()?;
            let w = f_a_extract(c.dimension(), c, &u, size.unwrap_or(u.len()), &budget);
            (SearchOutcome::Found(w), Value::Null)
        }
    };
    let mode_name = mode.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    match outcome {
        SearchOutcome::Found(w) => {
            let report = verify_as(&built, &w.set, w.kind)?;
            let status = status_of(report.passed);
            let result = json!({
                "mode": mode_name,
                "outcome": "found",
                "witness": w,
                "verification": report,
                "details": extra,
            });
            record("search", cfg, result, status)
        }
        SearchOutcome::Exhausted { subsets, stats } => {
            let result = json!({
                "mode": mode_name,
                "outcome": "exhausted",
                "subsets_checked": subsets.to_string(),
                "stats": stats,
            });
            record("search", cfg, result, Status::Ok)
        }
    }
}

struct SetInput {
    set: FinSet,
    kind: Option<WitnessKind>,
    config: Option<ExperimentConfig>,
}

fn load_set(source: &SetSource) -> Result<SetInput, CliError> {
    match (&source.witness, &source.set) {
        (Some(_), Some(_)) => Err(CliError::Config("give either --witness or --set, not both".into())),
        (None, None) => Err(CliError::Config("give --witness or --set".into())),
        (None, Some(s)) => Ok(SetInput { set: parse_set(s)?, kind: None, config: None }),
        (Some(path), None) => {
            let v: Value =
                serde_json::from_str(&read(path)?).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
            parse_witness(&v).ok_or_else(|| CliError::Config(format!("{}: no witness set found", path.display())))
        }
    }
}

fn parse_witness(v: &Value) -> Option<SetInput> {
    let config = v.get("config").and_then(|c| serde_json::from_value(c.clone()).ok());
    let holders = [v.pointer("/result/witness"), v.pointer("/result"), v.get("witness"), Some(v)];
    for h in holders.into_iter().flatten() {
        let (set, kind) = match h {
            Value::Array(_) => (h, None),
            _ => match h.get("set").or_else(|| h.get("output")) {
                Some(s) => (s, h.get("kind")),
                None => continue,
            },
        };
        let set: FinSet = match set {
            Value::String(s) => s.parse().ok()?,
            other => serde_json::from_value(other.clone()).ok()?,
        };
        let kind = kind.and_then(|k| serde_json::from_value(k.clone()).ok());
        return Some(SetInput { set, kind, config });
    }
    None
}

fn verify(cfg: &ExperimentConfig, set: &FinSet, kind: WitnessKind) -> Result<Output, CliError> {
    let built = setup::coloring(cfg)?;
    let report = verify_as(&built, set, kind)?;
    let status = status_of(report.passed);
    record("verify", cfg, json!({ "set": set, "kind": kind, "report": report }), status)
}

fn verify_trace(cfg: &ExperimentConfig, path: &Path) -> Result<Output, CliError> {
    let built = setup::coloring(cfg)?;
    let mut rows = 0u64;
    let mut mismatches = Vec::new();
    let text = read(path)?;
    let mut r = csv::Reader::from_reader(text.as_bytes());
    for rec in r.records() {
        let rec = rec.map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
        let (Some(s), Some(c)) = (rec.get(0), rec.get(1)) else {
            return Err(CliError::Config(format!("{}: rows need set,color", path.display())));
        };
        let set = parse_set(s)?;
        let logged: u64 = c.trim().parse().map_err(|_| CliError::Config(format!("bad color `{c}`")))?;
        let actual = color_of(&built, &set)?;
        rows += 1;
        if actual != logged {
            mismatches.push(json!({ "set": set, "logged": logged, "actual": actual }));
        }
    }
    let passed = mismatches.is_empty();
    record("verify", cfg, json!({ "trace_rows": rows, "mismatches": mismatches, "passed": passed }), status_of(passed))
}

// ---- decode ----

fn halt_index(nb: &Numbering) -> Result<u64, CliError> {
    nb.index_of(&Program::new(vec![Instr::Halt])).map_err(|e| CliError::Config(e.to_string()))
}

fn parse_query(nb: &Numbering, q: &str) -> Result<(u64, u64), CliError> {
    let bad = || CliError::Config(format!("query `{q}` is not `i,j`"));
    let (i, j) = q.split_once(',').ok_or_else(bad)?;
    let i = i.trim().parse().map_err(|_| bad())?;
    let j = match j.trim() {
        "eH" | "halt" => halt_index(nb)?,
        j => j.parse().map_err(|_| bad())?,
    };
    Ok((i, j))
}

fn cell<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn decode(cfg: &ExperimentConfig, h: &FinSet, queries: &[String]) -> Result<Output, CliError> {
    if queries.is_empty() {
        return Err(CliError::Config("decode needs --query i,j or --reconstruct h".into()));
    }
    let nb = setup::numbering(cfg)?;
    let a = setup::oracle(cfg)?;
    let dec = Decoder::new(nb.clone(), a.clone());
    let mut verdicts: Vec<(DecodeVerdict, bool)> = Vec::new();
    for q in queries {
        let (i, j) = parse_query(&nb, q)?;
        let truth = halt0_truth(&nb, a.clone(), i, cfg.machines.cutoff).contains(j);
        verdicts.push((dec.m(i, j, h).with_truth(truth), truth));
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["level", "element", "answer", "truth", "consistent", "tuple", "reduced_index"]).map_err(csv_err)?;
    for (v, truth) in &verdicts {
        let answer = match v.answer {
            Some(a) => a.to_string(),
            None => "insufficient".into(),
        };
        w.write_record([
            v.level.to_string(),
            v.element.to_string(),
            answer,
            truth.to_string(),
            cell(v.consistent),
            cell(v.tuple_used.as_ref()),
            cell(v.reduced_index),
        ])
        .map_err(csv_err)?;
    }
    let passed = verdicts.iter().all(|(v, _)| v.consistent != Some(false));
    Ok(Output { text: csv_text(w)?, status: status_of(passed) })
}

fn reconstruct_levels(cfg: &ExperimentConfig, h: &FinSet, h0: u64) -> Result<Output, CliError> {
    let nb = setup::numbering(cfg)?;
    let r = dh_reconstruct(&nb, h, h0, setup::oracle(cfg)?).map_err(|e| CliError::Config(e.to_string()))?;
    record("decode", cfg, r, Status::Ok)
}

// ---- reduce ----

fn reduce(cfg: &ExperimentConfig, direction: ReduceDirection, input: &FinSet) -> Result<Output, CliError> {
    let built = setup::coloring(cfg)?;
    match direction {
        ReduceDirection::KmToRt => {
            let c = built.regressive()?;
            let transformed = km_to_rt(c);
            let pre = verify_exact_homogeneous(input, &transformed);
            let colored_one =
                enumerate_exactly_large(input).next().is_none_or(|s| transformed.color(s.as_slice()) == 1);
            let precondition = pre.passed && colored_one;
            let output = km_witness(input);
            let report = verify_min_homogeneous(&output, c);
            let result = json!({
                "direction": "km-to-rt",
                "input": input,
                "precondition": precondition,
                "precondition_report": pre,
                "output": output,
                "kind": WitnessKind::MinHomogeneous,
                "report": report,
            });
            record("reduce", cfg, result, status_of(precondition && report.passed))
        }
        ReduceDirection::RtViaKm => {
            let c = built.exact()?;
            match rt_via_km(c, input) {
                Ok(output) => {
                    let report = verify_exact_homogeneous(&output, c);
                    let status = status_of(report.passed);
                    let result = json!({
                        "direction": "rt-via-km",
                        "input": input,
                        "output": output,
                        "kind": WitnessKind::Homogeneous,
                        "report": report,
                    });
                    record("reduce", cfg, result, status)
                }
                Err(e) => {
                    let result = json!({ "direction": "rt-via-km", "input": input, "error": e.to_string() });
                    record("reduce", cfg, result, Status::VerificationFailed)
                }
            }
        }
    }
}
