//! Exit codes and output formats of the command-line tool.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nebcheck")).args(args).output().expect("binary runs")
}

fn data(file: &str) -> String {
    format!("{}/examples/data/{file}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn list_names_every_scenario() {
    let out = run(&["list"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for s in nebcheck::scenarios() {
        assert!(text.contains(s.name));
    }
}

#[test]
fn passing_scenario_exits_zero_with_json() {
    let out = run(&["verify", "--scenario", "extension-of-scalars", "--report", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["summary"]["failed"], 0);
    assert!(v["summary"]["elapsed_ms"].is_null());
}

#[test]
fn failing_scenario_exits_one() {
    let out = run(&["verify", "--scenario", "neg-coaction"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout).unwrap().contains("coaction-counit"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["verify", "--scenario", "no-such-thing"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--scenario", "convolution", "--field", "f:8"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--scenario", "convolution", "--group", "/nonexistent"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn instance_files_drive_table_scenarios() {
    let out = run(&["verify", "--scenario", "hopf-axioms", "--instance", &data("kz2.txt")]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["verify", "--scenario", "prop-comm", "--group", &data("z4.txt"), "--report", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("K^Z4"));
}

#[test]
fn parse_errors_report_line_and_column() {
    let dir = std::env::temp_dir().join(format!("nebcheck-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.txt");
    std::fs::write(&bad, "field Q\nkind table 1\nunit 1*0\nmul 0 0 = 1*0\ndelta 0 = 1*0|3\n").unwrap();
    let out = run(&["verify", "--scenario", "hopf-axioms", "--instance", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 5, column 11"), "{err}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn timing_flag_fills_elapsed() {
    let out = run(&["verify", "--scenario", "neg-hopf-axioms", "--report", "json", "--timing"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["summary"]["elapsed_ms"].is_u64());
}
