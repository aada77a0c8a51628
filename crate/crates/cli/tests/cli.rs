use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

use pathpower::report::{read_records, ReportRecord, SCHEMA};
use pathpower_core::graph::path_power;
use pathpower_core::{are_isomorphic, graph6, Graph};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_pathpower"));
    c.env_remove("PATHPOWER_WORKERS").env_remove("PATHPOWER_TIMEOUT_MS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    let _ = std::fs::remove_file(&path);
    path
}

/// Parses stdout as JSON lines and validates each against the schema.
fn records(o: &Output) -> Vec<ReportRecord> {
    assert_eq!(o.status.code(), Some(0), "stderr: {}", stderr(o));
    let schema: Value = serde_json::from_str(SCHEMA).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let text = stdout(o);
    for line in text.lines() {
        let v: Value = serde_json::from_str(line).unwrap();
        let errors: Vec<String> = validator.iter_errors(&v).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{line}\n{errors:?}");
    }
    let parsed = read_records(&text).unwrap();
    for r in &parsed {
        let again: ReportRecord = serde_json::from_str(&r.to_line()).unwrap();
        assert_eq!(&again, r);
    }
    parsed
}

fn write_hosts(name: &str, graphs: &[Graph]) -> PathBuf {
    let path = scratch(name);
    let text: String = graphs.iter().map(|g| graph6::encode(g) + "\n").collect();
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn construct_examples() {
    let o = run(&["construct", "turan", "--n", "7", "--p", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(str::to_owned).collect();
    assert_eq!(lines.len(), 1);
    assert_eq!(graph6::decode(&lines[0]).unwrap().edge_count(), 16);

    for (args, edges) in [
        (vec!["construct", "turan", "--n", "7", "--p", "3", "--format", "json"], 16),
        (vec!["construct", "section4", "--k", "13", "--p", "2", "--format", "json"], 67),
        (vec!["construct", "h", "--n", "10", "--k", "6", "--a", "2", "--format", "json"], 18),
    ] {
        let r = records(&run(&args));
        assert_eq!(r[0].result["graphs"][0]["edges"], edges, "{args:?}");
    }
}

#[test]
fn construct_writes_graph6_and_sidecar() {
    let out = scratch("lemma32.g6");
    let o = run(&["construct", "lemma32", "--k", "7", "--p", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let graphs: Vec<Graph> =
        std::fs::read_to_string(&out).unwrap().lines().map(|l| graph6::decode(l).unwrap()).collect();
    assert_eq!(graphs.len(), 2);
    let sidecar: Value =
        serde_json::from_str(&std::fs::read_to_string(out.with_extension("g6.json")).unwrap()).unwrap();
    assert_eq!(sidecar["kind"], "construction");
    let entries = sidecar["result"]["graphs"].as_array().unwrap();
    for (g, e) in graphs.iter().zip(entries) {
        assert_eq!(e["edges"], g.edge_count());
        let covered: usize =
            e["roles"].as_array().unwrap().iter().map(|r| r["vertices"].as_array().unwrap().len()).sum();
        assert_eq!(covered, g.order());
    }
}

#[test]
fn every_family_constructs() {
    for args in [
        vec!["path-power", "--k", "6", "--p", "2"],
        vec!["path-extremal", "--n", "7", "--k", "4"],
        vec!["power-extremal", "--n", "12", "--k", "7", "--p", "2"],
        vec!["power-extremal", "--n", "12", "--k", "7", "--p", "2", "--n0", "5"],
        vec!["lemma31", "--k", "6", "--p", "2"],
        vec!["lemma32", "--k", "6", "--p", "2", "--case", "a"],
    ] {
        let mut full = vec!["construct"];
        full.extend(&args);
        full.extend(["--format", "json"]);
        let r = records(&run(&full));
        assert!(!r[0].artifact_refs.is_empty(), "{args:?}");
    }
    let r = records(&run(&["construct", "path-extremal", "--n", "7", "--k", "4", "--format", "json"]));
    assert_eq!(r[0].artifact_refs.len(), 3);
}

#[test]
fn check_examples() {
    let hosts = write_hosts(
        "hosts.g6",
        &[
            pathpower_core::constructions::lemma31_witness(6, 2).unwrap().graph,
            pathpower_core::constructions::section4_graph(13, 2).unwrap().graph,
        ],
    );
    let r = records(&run(&["check", "--host", hosts.to_str().unwrap(), "--path-power", "6", "2"]));
    assert_eq!(r[0].result["present"], true);
    let mapping: Vec<usize> = serde_json::from_value(r[0].result["embedding"].clone()).unwrap();
    assert_eq!(mapping.len(), 6);
    let r = records(&run(&["check", "--host", hosts.to_str().unwrap(), "--path-power", "13", "2"]));
    assert_eq!(r[1].result["present"], false);
    assert_eq!(r[1].result["embedding"], Value::Null);

    let k4 = write_hosts("k4.g6", &[Graph::complete(4)]);
    let p42 = graph6::encode(&path_power(4, 2).unwrap());
    let r = records(&run(&["check", "--host", k4.to_str().unwrap(), "--pattern", &p42]));
    assert_eq!(r[0].result["present"], true);
}

#[test]
fn number_examples() {
    let r = records(&run(&["number", "--n", "13", "--k", "13", "--p", "2"]));
    assert_eq!(r[0].result["formula"]["value"], 63);
    assert_eq!(r[0].result["formula"]["argmax_splits"], serde_json::json!([7]));
    assert_eq!(r[0].result["formula"]["breakdown"].as_array().unwrap().len(), 14);

    let r = records(&run(&["number", "--n", "8", "--k", "4", "--p", "1"]));
    assert_eq!(r[0].result["formula"]["value"], 7);

    let r = records(&run(&["number", "--n", "6", "--k", "4", "--p", "2", "--oracle"]));
    let res = &r[0].result;
    let oracle = res["oracle"]["value"].as_i64().unwrap();
    let formula = res["formula"]["value"].as_i64().unwrap();
    assert_eq!(res["gap"].as_i64().unwrap(), oracle - formula);
    assert!(oracle >= formula);
}

#[test]
fn decomp_examples() {
    let r = records(&run(&["decomp", "--path-power", "5", "2"]));
    let members: Vec<String> = serde_json::from_value(r[0].result["members"].clone()).unwrap();
    assert_eq!(members.len(), 1);
    assert!(are_isomorphic(&graph6::decode(&members[0]).unwrap(), &Graph::path(3)).unwrap());
    for args in [vec!["decomp", "--path-power", "4", "2"], vec!["decomp", "Bw"]] {
        let r = records(&run(&args));
        let members: Vec<String> = serde_json::from_value(r[0].result["members"].clone()).unwrap();
        assert_eq!(members.len(), 1);
        assert!(are_isomorphic(&graph6::decode(&members[0]).unwrap(), &Graph::path(2)).unwrap());
    }
}

#[test]
fn verify_suites_pass() {
    for args in [
        vec!["verify", "theorem21", "--n-max", "9", "--k-max", "6"],
        vec!["verify", "prop25", "--cases", "default"],
        vec!["verify", "section4", "--k", "13", "--p", "2"],
        vec!["verify", "lemma31"],
        vec!["verify", "lemma32"],
        vec!["verify", "freeness", "--n-max", "20", "--k-max", "8"],
        vec!["verify", "gap-table", "--n-max", "7", "--k-max", "6", "--p-max", "2"],
    ] {
        let r = records(&run(&args));
        assert!(!r.is_empty(), "{args:?}");
        assert!(r.iter().all(|x| x.result["passed"] == true), "{args:?}");
    }
}

#[test]
fn failed_check_exits_one() {
    // at n = k = 4 the pendant graph only ties the formula
    let o = run(&["verify", "section4", "--k", "4", "--p", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("check failed"));
}

#[test]
fn report_appends_and_renders_csv() {
    let report = scratch("gap.jsonl");
    let csv = scratch("gap.csv");
    let rp = report.to_str().unwrap();
    for p in ["2", "3"] {
        let o = run(&["verify", "gap-table", "--n-max", "5", "--k-max", "4", "--p-min", p, "--p-max", p, "--out", rp]);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).is_empty());
    }
    let text = std::fs::read_to_string(&report).unwrap();
    assert_eq!(read_records(&text).unwrap().len(), 2 * 5 * 3);
    let o = run(&["report", "--input", rp, "--out", csv.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let mut reader = csv::Reader::from_path(&csv).unwrap();
    let header = reader.headers().unwrap().clone();
    assert!(header.iter().any(|h| h == "detail.gap"));
    assert_eq!(reader.records().count(), 30);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["construct", "nope"]).status.code(), Some(2));
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["construct", "h", "--n", "3", "--k", "9", "--a", "1"]).status.code(), Some(3));
    assert_eq!(run(&["construct", "lemma32", "--k", "6", "--p", "2", "--case", "b2"]).status.code(), Some(3));
    assert_eq!(run(&["number", "--n", "11", "--k", "4", "--p", "2", "--oracle"]).status.code(), Some(5));
    assert_eq!(run(&["decomp", "--path-power", "11", "2"]).status.code(), Some(5));
    assert_eq!(run(&["decomp", "Bw", "--cap", "4"]).status.code(), Some(3));
    assert_eq!(run(&["decomp", "B?"]).status.code(), Some(3));
    assert_eq!(run(&["check", "--host", "/nonexistent/hosts.g6", "--pattern", "A_"]).status.code(), Some(2));

    let bad = scratch("bad.g6");
    std::fs::write(&bad, "A_\nA`\n").unwrap();
    let o = run(&["check", "--host", bad.to_str().unwrap(), "--pattern", "A_"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stderr(&o).contains("line 2") && stderr(&o).contains("byte 1"), "{}", stderr(&o));
    let good = write_hosts("one.g6", &[Graph::complete(3)]);
    assert_eq!(run(&["check", "--host", good.to_str().unwrap(), "--pattern", "B~~"]).status.code(), Some(4));
}

#[test]
fn flags_override_environment() {
    let args = ["number", "--n", "9", "--k", "6", "--p", "2", "--oracle"];
    let o = bin().args(args).env("PATHPOWER_WORKERS", "0").output().unwrap();
    assert_eq!(o.status.code(), Some(3));
    let o = bin().args(args).arg("--workers").arg("2").env("PATHPOWER_WORKERS", "0").output().unwrap();
    assert_eq!(o.status.code(), Some(0));

    let o = bin().args(args).env("PATHPOWER_TIMEOUT_MS", "0").output().unwrap();
    assert_eq!(o.status.code(), Some(5));
    assert!(stderr(&o).contains("budget"));
    let o = bin().args(args).args(["--timeout-ms", "600000"]).env("PATHPOWER_TIMEOUT_MS", "0").output().unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn worker_count_does_not_change_output() {
    let base = ["number", "--n", "8", "--k", "6", "--p", "2", "--oracle"];
    let one = stdout(&bin().args(base).args(["--workers", "1"]).output().unwrap());
    let three = stdout(&bin().args(base).args(["--workers", "3"]).output().unwrap());
    assert_eq!(one, three);
}

#[test]
fn schema_rejects_malformed_records() {
    let schema: Value = serde_json::from_str(SCHEMA).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let good = serde_json::json!({"kind": "decomposition", "parameters": {"k": 5}, "result": {"target": "DzK", "p": 2, "host_width": 5, "candidate_cap": 5, "members": ["Bo"]}, "artifact_refs": ["Bo"]});
    assert!(validator.is_valid(&good));
    for bad in [
        serde_json::json!({"kind": "graph", "parameters": {}, "result": {}, "artifact_refs": []}),
        serde_json::json!({"kind": "formula", "parameters": {"n": "six"}, "result": {}, "artifact_refs": []}),
        serde_json::json!({"kind": "decomposition", "parameters": {}, "result": {"p": 2}, "artifact_refs": []}),
        serde_json::json!({"kind": "containment", "parameters": {}, "result": {}, "artifact_refs": ["bad graph6"]}),
    ] {
        assert!(!validator.is_valid(&bad), "{bad}");
    }
}
