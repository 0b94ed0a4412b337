use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rees-commute"))
        .args(args)
        .env_remove("REES_COMMUTE_BUDGET")
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn analyze_reports_invariants() {
    let out = run(&["analyze", "-g", "S3", "--cols", "2", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["order"], 12);
    assert_eq!(r["center_size"], 0);
    assert_eq!(r["vertex_count"], 12);
    assert_eq!(r["component_count"], 2);
    assert_eq!(r["clique_number"]["size"], 3);
    assert_eq!(r["chromatic_number"]["count"], 3);
    assert_eq!(r["knit_degree"]["status"], "none_proved");
    assert!(r.get("timings").is_none());
    for c in r["per_component"].as_array().unwrap() {
        assert_eq!(c["iso_to_extended_group_graph"], true);
        assert_eq!(c["diameter"], 2);
    }
}

#[test]
fn analyze_is_deterministic() {
    let args = ["analyze", "-g", "D4", "--rows", "2", "--cols", "2", "--seed", "9"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn analyze_group_mode() {
    let out = run(&["analyze", "-g", "A4", "--as-group"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["instance"]["mode"], "group");
    assert_eq!(r["vertex_count"], 11);
    assert_eq!(r["edge_count"], 7);
    assert_eq!(r["girth"], 3);
}

#[test]
fn analyze_from_spec_and_cayley_files() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(
        dir.path(),
        "spec.json",
        r#"{"group": "C3", "i_size": 2, "lambda_size": 1, "p": [[0, 1]]}"#,
    );
    let out = run(&["analyze", "--spec", &spec]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    assert_eq!(json(&out)["component_count"], 2);

    let table = rees_commute::algebra::named_group("S3").unwrap().to_cayley_text().unwrap();
    let cayley = format!("@{}", write(dir.path(), "s3.txt", &table));
    let from_file = run(&["analyze", "-g", &cayley, "--cols", "2"]);
    let by_name = run(&["analyze", "-g", "S3", "--cols", "2"]);
    assert_eq!(from_file.status.code(), Some(0));
    assert_eq!(json(&from_file)["edge_count"], json(&by_name)["edge_count"]);

    let bad = write(dir.path(), "bad.json", r#"{"group": "C3", "i_size": 2}"#);
    let out = run(&["analyze", "--spec", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(json(&out)["error"]["kind"].is_string());
}

#[test]
fn dot_export() {
    let out = run(&["export-dot", "-g", "C2", "--cols", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("graph "));
    assert_eq!(text.matches("[label=").count(), 4);
    assert_eq!(text.matches(" -- ").count(), 2);

    let ext = String::from_utf8(run(&["export-dot", "-g", "C2", "--extended"]).stdout).unwrap();
    assert_eq!(ext.matches("[label=").count(), 2);
    assert_eq!(ext.matches(" -- ").count(), 1);
}

#[test]
fn input_errors_exit_with_two() {
    for args in [
        vec!["analyze", "-g", "Q9"],
        vec!["analyze", "-g", "C3"],
        vec!["analyze", "-g", "S3", "--matrix", "diagonal"],
        vec!["analyze"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let v = json(&out);
        assert!(v["error"]["message"].is_string(), "{args:?}");
    }
    let out = run(&["analyze", "-g", "C3"]);
    assert_eq!(json(&out)["error"]["kind"], "CommutativeInput");
}

#[test]
fn resource_caps_exit_with_three() {
    let out = Command::new(env!("CARGO_BIN_EXE_rees-commute"))
        .args(["analyze", "-g", "S3", "--cols", "2"])
        .env("REES_COMMUTE_BUDGET", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json(&out)["error"]["kind"], "BudgetExceeded");

    let out = run(&["analyze", "-g", "C100"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let clean = write(
        dir.path(),
        "clean.json",
        r#"{"groups": ["S3"], "index_pairs": [[2, 1]], "seeds": [0]}"#,
    );
    let out = run(&["verify", &clean]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let results = json(&out);
    assert!(results.as_array().unwrap().iter().all(|r| r["verdict"] == "pass"));

    let faulty = write(
        dir.path(),
        "faulty.json",
        r#"{"groups": ["S3"], "index_pairs": [[2, 2]], "seeds": [0], "checks": ["commutation_lemma"], "fault_injection": "flip_table_entry"}"#,
    );
    let out = run(&["verify", &faulty]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("first failure"));

    let unknown = write(
        dir.path(),
        "unknown.json",
        r#"{"groups": ["S3"], "index_pairs": [[2, 1]], "seeds": [0], "checks": ["no_such_check"]}"#,
    );
    assert_eq!(run(&["verify", &unknown]).status.code(), Some(2));
}

#[test]
fn characterize_command() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = "3\n0 1\n0 2\n1 2\n";
    let path = write(dir.path(), "k3.txt", k3);
    let out = run(&["characterize", &path]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["answer"], "no");
    let garbage = write(dir.path(), "bad.txt", "three\n");
    assert_eq!(run(&["characterize", &garbage]).status.code(), Some(2));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("report.json");
    let out = run(&["analyze", "-g", "Q8", "--as-group", "--out", target.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(target).unwrap()).unwrap();
    assert_eq!(r["component_count"], 3);
}
