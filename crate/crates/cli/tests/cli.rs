use std::process::{Command, Output};

use degenscope_cli::Envelope;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_degenscope"))
        .args(args)
        .env_remove("DEGENSCOPE_MLD_LIMIT")
        .output()
        .expect("binary runs")
}

fn envelope(args: &[&str]) -> Envelope {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON envelope")
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|x| x.to_string())
        .collect()
}

#[test]
fn cqs_wahl_example() {
    let e = envelope(&["cqs", "9", "1", "2"]);
    assert_eq!(e.schema_version, "1");
    assert_eq!(e.command, "cqs");
    let r = &e.result;
    assert_eq!(r["chain"], serde_json::json!([5, 2]));
    assert_eq!(r["t_data"], serde_json::json!({"d": 1, "n": 3, "a": 1}));
    assert_eq!(r["wahl"], true);
    assert_eq!(r["mu"], 0);
    assert_eq!(r["rigidity"]["rigid"], false);
    assert_eq!(r["gorenstein_index"], 3);
    assert_eq!(r["mld"], "1/3");
    assert_eq!(r["mld_decimal"], "0.333333333333");
}

#[test]
fn cqs_smooth_and_d_type() {
    let e = envelope(&["cqs", "1", "0", "0"]);
    assert_eq!(e.result["smooth"], true);
    assert_eq!(e.result["mld"], "2");
    let e = envelope(&["cqs", "12", "1", "7"]);
    assert_eq!(e.result["chain"], serde_json::json!([2, 4, 2]));
    assert_eq!(
        e.result["rigidity"],
        serde_json::json!({"rigid": false, "k": 4, "r": 3})
    );
    let kinds: Vec<&str> = e.result["baskets"]
        .as_array()
        .unwrap()
        .iter()
        .map(|b| b["basket"].as_str().unwrap())
        .collect();
    assert_eq!(kinds, ["F4", "D"]);
}

#[test]
fn cqs_negative_weights_normalize() {
    let e = envelope(&["cqs", "5", "-1", "1"]);
    assert_eq!(e.result["normal_form"], "1/5(1,4)");
}

#[test]
fn cqs_bound_and_limits() {
    let e = envelope(&["cqs", "841", "1", "637", "--bound", "12"]);
    assert_eq!(e.result["mld_estimate"], "985/10092");
    assert!(e.result.get("mld").is_none());

    let out = run(&["cqs", "1000", "1", "3", "--limit-mld", "999"]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&[
        "cqs",
        "1000",
        "1",
        "3",
        "--limit-mld",
        "999",
        "--bound",
        "30",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn mld_limit_precedence() {
    let bin = env!("CARGO_BIN_EXE_degenscope");
    let with_env = |limit: &str, extra: &[&str]| {
        Command::new(bin)
            .args(["cqs", "50", "1", "3"])
            .args(extra)
            .env("DEGENSCOPE_MLD_LIMIT", limit)
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(with_env("10", &[]), Some(3));
    assert_eq!(with_env("100", &[]), Some(0));
    // the flag wins over the environment
    assert_eq!(with_env("10", &["--limit-mld", "100"]), Some(0));
    assert_eq!(with_env("100", &["--limit-mld", "10"]), Some(3));
}

#[test]
fn invalid_input_exits_2() {
    for args in [
        &["cqs", "6", "2", "1"][..],
        &["cqs", "0", "1", "1"],
        &["cqs", "7", "1", "3", "--bound", "7"],
        &["wps", "0", "1", "2"],
        &["wps", "-3", "1", "2"],
        &["markov", "degenerations", "--n", "2", "--bound", "10"],
        &["markov", "candidates", "--n", "3", "--x", "2", "--y", "7"],
        &["markov", "classic", "--bound", "0"],
        &["density", "0"],
        &["scan", "5", "--jobs", "0"],
        &["frobnicate"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn wps_examples() {
    let e = envelope(&["wps", "4", "25", "841"]);
    assert_eq!(e.result["verdict"]["outcome"], "NoNontrivialDegenerations");
    assert_eq!(e.result["mld"], "1/29");
    assert_eq!(e.result["k2"], "9");

    let e = envelope(&["wps", "1", "5", "8"]);
    let reasons = e.result["verdict"]["reasons"].as_array().unwrap();
    let kinds: Vec<&str> = reasons
        .iter()
        .map(|r| r["kind"].as_str().unwrap())
        .collect();
    assert_eq!(kinds, ["InFamilyA", "InFamilyB", "MldAtLeastOneSixth"]);
    assert_eq!(
        (
            &reasons[1]["family"],
            &reasons[1]["n"],
            &reasons[1]["l"],
            &reasons[1]["k"]
        ),
        (&"B1".into(), &3.into(), &0.into(), &0.into())
    );
    assert_eq!(reasons[2]["mld"], "1/2");
    assert!(reasons[0].get("explanation").is_none());

    let e = envelope(&["wps", "2", "4", "5"]);
    assert_eq!(e.result["well_formed"], false);
    assert_eq!(
        e.result["verdict"]["reasons"],
        serde_json::json!([{"kind": "NotWellFormed"}])
    );
    assert_eq!(e.warnings.len(), 1);
}

#[test]
fn explain_attaches_text() {
    let e = envelope(&["wps", "1", "5", "8", "--explain"]);
    for r in e.result["verdict"]["reasons"].as_array().unwrap() {
        assert!(r["explanation"].as_str().is_some_and(|s| !s.is_empty()));
    }
}

#[test]
fn markov_examples() {
    let e = envelope(&["markov", "gen", "--n", "3", "--bound", "100"]);
    assert_eq!(
        strings(&e.result["solutions"]),
        [
            "[\"1\",\"1\"]",
            "[\"1\",\"4\"]",
            "[\"4\",\"19\"]",
            "[\"19\",\"91\"]"
        ]
    );
    let e = envelope(&["markov", "classic", "--bound", "1"]);
    assert_eq!(e.result["triples"], serde_json::json!([["1", "1", "1"]]));
    let e = envelope(&["markov", "degenerations", "--n", "4", "--bound", "50"]);
    let triples: Vec<&str> = e.result["degenerations"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d["wps"]["triple"].as_str().unwrap())
        .collect();
    assert_eq!(triples, ["P(1,1,4)", "P(1,25,4)", "P(25,841,4)"]);
    let e = envelope(&["markov", "candidates", "--n", "3", "--x", "4", "--y", "19"]);
    let kinds: Vec<&str> = e.result["candidates"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["kind"].as_str().unwrap())
        .collect();
    assert_eq!(kinds, ["Toric", "NonToricGm", "NonToricGm", "Toric"]);
}

#[test]
fn density_csv() {
    let out = run(&["density", "1", "10", "--csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let headers: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(
        headers,
        ["N", "count_A", "count_B1", "count_B2", "count_B3", "count_S", "ratio"]
    );
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(
        rows[0].iter().collect::<Vec<_>>(),
        ["1", "1", "0", "0", "0", "1", "1.000000000000"]
    );
    assert_eq!(&rows[1][2], "18");
}

#[test]
fn scan_examples() {
    let e = envelope(&["scan", "1"]);
    let records = e.result["records"].as_array().unwrap();
    assert_eq!(records.len(), 1);
    assert_eq!(
        (&records[0]["a"], &records[0]["outcome"]),
        (&1.into(), &"OutOfScope".into())
    );

    let e = envelope(&["scan", "10", "--jobs", "2"]);
    assert_eq!(e.result["census"]["count_b1"], 18);
}

#[test]
fn scan_files() {
    let dir = tempfile::tempdir().unwrap();
    let jsonl = dir.path().join("r.jsonl");
    let e = envelope(&["scan", "12", "--out", jsonl.to_str().unwrap()]);
    let text = std::fs::read_to_string(&jsonl).unwrap();
    assert_eq!(
        text.lines().count() as u64,
        e.result["triples"].as_u64().unwrap()
    );
    for line in text.lines() {
        let rec: Envelope = serde_json::from_str(line).unwrap();
        assert_eq!(rec.command, "scan");
        assert_eq!(rec.to_line(), line);
    }

    let csv_path = dir.path().join("r.csv");
    let out = run(&["scan", "12", "--csv", "--out", csv_path.to_str().unwrap()]);
    assert!(out.status.success());
    let mut rdr = csv::Reader::from_path(&csv_path).unwrap();
    assert_eq!(
        rdr.headers().unwrap().iter().collect::<Vec<_>>(),
        ["a", "b", "c", "outcome", "reasons", "mld", "k2"]
    );
    assert_eq!(
        rdr.records().count() as u64,
        e.result["triples"].as_u64().unwrap()
    );

    let bad = dir.path().join("missing").join("r.jsonl");
    assert_eq!(
        run(&["scan", "5", "--out", bad.to_str().unwrap()])
            .status
            .code(),
        Some(4)
    );
}

#[test]
fn quiet_prints_nothing() {
    let out = run(&["wps", "2", "4", "5", "--quiet"]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty() && out.stderr.is_empty());
}

#[test]
fn output_is_deterministic() {
    let a = run(&["wps", "3", "4", "5"]).stdout;
    let b = run(&["wps", "3", "4", "5"]).stdout;
    assert_eq!(a, b);
    let a = run(&["scan", "20", "--jobs", "1"]).stdout;
    let b = run(&["scan", "20", "--jobs", "4"]).stdout;
    assert_eq!(a, b);
}
