use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn xramsey(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_xramsey"))
        .args(args)
        .current_dir(dir)
        .env_remove("XRAMSEY_CUTOFF")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

#[test]
fn dh_chain_search_reverifies_and_is_reproducible() {
    let dir = TempDir::new().unwrap();
    let args = ["search", "--coloring", "dh", "--oracle", "empty", "--universe", "evens:2..40", "--out", "w.json"];
    assert_eq!(code(&xramsey(dir.path(), &args)), 0);
    let first = std::fs::read(dir.path().join("w.json")).unwrap();
    assert_eq!(code(&xramsey(dir.path(), &args)), 0);
    assert_eq!(std::fs::read(dir.path().join("w.json")).unwrap(), first);

    let rec: Value = serde_json::from_slice(&first).unwrap();
    assert_eq!(rec["result"]["outcome"], "found");
    assert_eq!(rec["result"]["witness"]["verified"], true);
    assert!(rec["result"]["witness"]["set"].as_array().unwrap().len() >= 5);
    assert_eq!(rec["config"]["machines"]["cutoff"], 1_000_000);

    let v = xramsey(dir.path(), &["verify", "--witness", "w.json"]);
    assert_eq!(code(&v), 0);
    let v = json(&v);
    assert_eq!(v["config"]["coloring"]["name"], "dh");
    assert_eq!(v["result"]["report"]["passed"], true);

    let v = xramsey(dir.path(), &["verify", "--witness", "w.json", "--coloring", "parity-of-min"]);
    assert_eq!(code(&v), 0);
}

#[test]
fn failed_verification_exits_3() {
    let dir = TempDir::new().unwrap();
    let o = xramsey(dir.path(), &["verify", "--set", "{1,2,3,4}", "--coloring", "parity-of-sum"]);
    assert_eq!(code(&o), 3);
    let v = json(&o);
    assert_eq!(v["result"]["report"]["passed"], false);
    assert!(v["result"]["report"]["counterexample"].is_object());
}

#[test]
fn config_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    for args in [
        &["search", "--coloring", "nope", "--universe", "evens:2..10"][..],
        &["search", "--universe", "evens:9..2"],
        &["search", "--universe", "evens:2..10", "--cutoff", "0"],
        &["search"],
        &["search", "--coloring", "c2", "--universe", "evens:2..10", "--mode", "chain"],
        &["decode", "--set", "{2,3,4}"],
        &["verify", "--witness", "missing.json", "--set", "{2}"],
    ] {
        assert_eq!(code(&xramsey(dir.path(), args)), 2, "{args:?}");
    }
    assert_eq!(code(&xramsey(dir.path(), &["frobnicate"])), 2);
    assert_eq!(code(&xramsey(dir.path(), &["verify", "--witness", "missing.json"])), 1);
}

#[test]
fn decode_writes_consistency_column() {
    let dir = TempDir::new().unwrap();
    let s = xramsey(
        dir.path(),
        &["search", "--coloring", "c2", "--universe", "{2,3,4,1200,2400}", "--size", "5", "--out", "h.json"],
    );
    assert_eq!(code(&s), 0);
    let o =
        xramsey(dir.path(), &["decode", "--witness", "h.json", "--query", "1,eH", "--query", "1,0", "--query", "7,3"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "level,element,answer,truth,consistent,tuple,reduced_index");
    assert_eq!(lines[1], "1,1,true,true,true,\"{2,3,4}\",1");
    assert_eq!(lines[2], "1,0,false,false,true,\"{2,3,4}\",0");
    assert!(lines[3].starts_with("7,3,insufficient,"));
}

#[test]
fn reconstruct_reports_levels() {
    let dir = TempDir::new().unwrap();
    let o = xramsey(
        dir.path(),
        &["decode", "--set", "{4,6,8,10,12,2000,2500,3000,3500}", "--oracle", "{3}", "--reconstruct", "4"],
    );
    assert_eq!(code(&o), 0);
    let v = json(&o);
    let levels = v["result"]["levels"].as_array().unwrap();
    assert_eq!(levels.len(), 2);
    assert_eq!(levels[0]["members"], serde_json::json!([3]));
    assert!(levels[1]["covered_below"].as_u64().unwrap() > 100);
}

#[test]
fn cutoff_layers() {
    let dir = TempDir::new().unwrap();
    let run = |extra: &[&str], env: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_xramsey"));
        cmd.args(["search", "--universe", "evens:2..12"]).args(extra).current_dir(dir.path());
        match env {
            Some(v) => cmd.env("XRAMSEY_CUTOFF", v),
            None => cmd.env_remove("XRAMSEY_CUTOFF"),
        };
        let o = cmd.output().unwrap();
        (code(&o), serde_json::from_slice::<Value>(&o.stdout).ok())
    };
    let (c, v) = run(&[], Some("4321"));
    assert_eq!(c, 0);
    assert_eq!(v.unwrap()["config"]["machines"]["cutoff"], 4321);
    std::fs::write(dir.path().join("exp.toml"), "[machines]\ncutoff = 777\n").unwrap();
    let (_, v) = run(&["--config", "exp.toml"], Some("4321"));
    assert_eq!(v.unwrap()["config"]["machines"]["cutoff"], 777);
    let (_, v) = run(&["--config", "exp.toml", "--cutoff", "55"], Some("4321"));
    assert_eq!(v.unwrap()["config"]["machines"]["cutoff"], 55);
    assert_eq!(run(&[], Some("lots")).0, 2);
}

#[test]
fn config_file_drives_a_run() {
    let dir = TempDir::new().unwrap();
    std::fs::write(
        dir.path().join("exp.toml"),
        "universe = \"interval:2..20\"\nseed = 3\n[coloring]\nname = \"parity-of-sum\"\n",
    )
    .unwrap();
    let o = xramsey(dir.path(), &["search", "--config", "exp.toml", "--mode", "min-homogeneous", "--size", "6"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["config"]["coloring"]["name"], "parity-of-sum");
    assert_eq!(v["config"]["seed"], 3);
    assert_eq!(v["result"]["witness"]["kind"], "min-homogeneous");
    assert_eq!(v["result"]["verification"]["passed"], true);
    std::fs::write(dir.path().join("bad.toml"), "[coloring]\nshade = 1\n").unwrap();
    assert_eq!(code(&xramsey(dir.path(), &["search", "--config", "bad.toml"])), 2);
}

#[test]
fn traces_round_trip_through_verify() {
    let dir = TempDir::new().unwrap();
    let o =
        xramsey(dir.path(), &["color", "--coloring", "parity-of-sum", "--universe", "interval:1..7", "--out", "t.csv"]);
    assert_eq!(code(&o), 0);
    let trace = std::fs::read_to_string(dir.path().join("t.csv")).unwrap();
    assert_eq!(trace.lines().next(), Some("set,color"));
    assert!(trace.contains("\"{1,2}\",1"));
    let ok = xramsey(dir.path(), &["verify", "--coloring", "parity-of-sum", "--trace", "t.csv"]);
    assert_eq!(code(&ok), 0);
    std::fs::write(dir.path().join("bad.csv"), trace.replace("\"{1,2}\",1", "\"{1,2}\",0")).unwrap();
    let bad = xramsey(dir.path(), &["verify", "--coloring", "parity-of-sum", "--trace", "bad.csv"]);
    assert_eq!(code(&bad), 3);
    assert_eq!(json(&bad)["result"]["mismatches"].as_array().unwrap().len(), 1);

    let one = xramsey(dir.path(), &["color", "--coloring", "c2", "--set", "{13,14,5000}"]);
    assert_eq!(stdout(&one), "set,color\n\"{13,14,5000}\",0\n");
    let a = xramsey(
        dir.path(),
        &["color", "--coloring", "dh", "--universe", "evens:2..30", "--sample", "20", "--seed", "4"],
    );
    let b = xramsey(
        dir.path(),
        &["color", "--coloring", "dh", "--universe", "evens:2..30", "--sample", "20", "--seed", "4"],
    );
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 21);
}

#[test]
fn reductions() {
    let dir = TempDir::new().unwrap();
    let o = xramsey(
        dir.path(),
        &["reduce", "rt-via-km", "--coloring", "parity-of-min", "--set", "{2,3,4,5,6,7,8,9}", "--out", "r.json"],
    );
    assert_eq!(code(&o), 0);
    let v = xramsey(dir.path(), &["verify", "--witness", "r.json"]);
    assert_eq!(code(&v), 0);
    let bad = xramsey(dir.path(), &["reduce", "rt-via-km", "--coloring", "parity-of-sum", "--set", "{2,3,4,5,6,7,8}"]);
    assert_eq!(code(&bad), 3);

    let o = xramsey(
        dir.path(),
        &["reduce", "km-to-rt", "--coloring", "min-minus-one", "--set", "{1,2,3,4,5,6}", "--out", "k.json"],
    );
    assert_eq!(code(&o), 0);
    let k: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("k.json")).unwrap()).unwrap();
    assert_eq!(k["result"]["precondition"], true);
    assert_eq!(code(&xramsey(dir.path(), &["verify", "--witness", "k.json"])), 0);
    let o = xramsey(dir.path(), &["reduce", "km-to-rt", "--coloring", "parity-of-min", "--set", "{1,2,3}"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn enumerate_and_other_searches() {
    let dir = TempDir::new().unwrap();
    let o = xramsey(dir.path(), &["enumerate", "--universe", "interval:0..5"]);
    assert_eq!(stdout(&o), "{0}\n{1,2}\n{1,3}\n{1,4}\n{1,5}\n{2,3,4}\n{2,3,5}\n{2,4,5}\n");
    let o = xramsey(dir.path(), &["enumerate", "--universe", "interval:0..17", "--count"]);
    assert_eq!(stdout(&o).trim().parse::<u64>().unwrap(), 2584);

    let o =
        xramsey(dir.path(), &["search", "--coloring", "parity-of-min", "--universe", "interval:0..10", "--a0", "2"]);
    assert_eq!(json(&o)["result"]["details"]["chain"][0], 2);
    assert_eq!(code(&xramsey(dir.path(), &["search", "--universe", "interval:3..10", "--a0", "2"])), 2);

    let o = xramsey(
        dir.path(),
        &["search", "--coloring", "cn", "--n", "3", "--universe", "{3,1000,2000,3000,4000}", "--size", "5"],
    );
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["result"]["outcome"], "found");

    let o = xramsey(
        dir.path(),
        &["search", "--coloring", "c2", "--universe", "interval:5..9", "--size", "5", "--oracle", "{0}"],
    );
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert!(v["result"]["outcome"] == "found" || v["result"]["outcome"] == "exhausted");

    let o = xramsey(dir.path(), &["search", "--coloring", "c2", "--universe", "interval:0..30"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["result"]["mode"], "extract");
}

#[test]
fn program_files_define_the_numbering() {
    let dir = TempDir::new().unwrap();
    std::fs::write(dir.path().join("p.prog"), "# slot 0\nHALT\n---\n# slot 1\nJZ 1 0\n").unwrap();
    let o = xramsey(
        dir.path(),
        &["decode", "--programs", "p.prog", "--set", "{2,3,4}", "--query", "1,0", "--query", "1,1", "--query", "1,eH"],
    );
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("\n1,0,true,true,true,"));
    assert!(text.contains("\n1,1,false,false,true,"));
    std::fs::write(dir.path().join("bad.prog"), "JUMP 3\n").unwrap();
    assert_eq!(
        code(&xramsey(dir.path(), &["decode", "--programs", "bad.prog", "--set", "{2,3,4}", "--query", "1,0"])),
        2
    );
}
