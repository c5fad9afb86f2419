use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn packchrom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_packchrom"))
        .args(args)
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn tmp(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("packchrom-{}-{name}", std::process::id()))
}

#[test]
fn generate_edge_list_to_stdout() {
    let out = packchrom(&["generate", "cycle:4"]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "4 4\n0 1\n0 3\n1 2\n2 3\n"
    );
}

#[test]
fn dimacs_file_feeds_exact() {
    let path = tmp("c5.col");
    let out = packchrom(&[
        "generate",
        "cycle:5",
        "--format",
        "dimacs",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(std::fs::read_to_string(&path)
        .unwrap()
        .starts_with("p edge 5 5\n"));
    let v = json(&packchrom(&["exact", "--graph", path.to_str().unwrap()]));
    std::fs::remove_file(&path).ok();
    assert_eq!(v["value"], 4);
    assert_eq!(v["certificate"].as_array().unwrap().len(), 5);
    assert!(v["nodes"].as_u64().unwrap() >= 1);
}

#[test]
fn exact_decision_for_one_k() {
    let v = json(&packchrom(&["exact", "--gen", "cycle:5", "--k", "3"]));
    assert_eq!(v["decision"], "unsat");
    assert!(v["certificate"].is_null());
    let v = json(&packchrom(&["exact", "--gen", "cycle:5", "--k", "4"]));
    assert_eq!(v["decision"], "sat");
}

#[test]
fn formula_reports_every_quantity() {
    let v = json(&packchrom(&["formula", "45"]));
    assert_eq!(v["n"], 45);
    assert_eq!(v["factorization"], serde_json::json!([[3, 2], [5, 1]]));
    assert_eq!(v["diameter"], 2);
    assert_eq!(v["independence_number"], 15);
    assert_eq!(v["packing_chromatic_number"], 31);
    assert!(!packchrom(&["formula", "1"]).status.success());
}

#[test]
fn solve_with_minimize() {
    let v = json(&packchrom(&[
        "solve",
        "--algo",
        "ga",
        "--gen",
        "star:10",
        "--minimize",
        "--seed",
        "1",
    ]));
    assert_eq!(v["algorithm"], "ga");
    assert_eq!(v["k"], 2);
    assert_eq!(v["solved"], true);
    assert_eq!(v["coloring"]["colors"].as_array().unwrap().len(), 11);
}

#[test]
fn solve_at_fixed_k() {
    let v = json(&packchrom(&[
        "solve",
        "--algo",
        "ls",
        "--gen",
        "complete:3",
        "--k",
        "3",
        "--maxit",
        "10",
    ]));
    assert_eq!(
        (v["k"].as_u64(), v["solved"].as_bool()),
        (Some(3), Some(true))
    );
    let v = json(&packchrom(&[
        "solve", "--algo", "greedy", "--gen", "path:4",
    ]));
    assert_eq!(v["solved"], true);
}

#[test]
fn solve_needs_a_budget_or_minimize() {
    let out = packchrom(&["solve", "--algo", "ls", "--gen", "cycle:6"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("--k"));
}

#[test]
fn graph_input_errors_are_reported() {
    let out = packchrom(&["exact", "--graph", "/nonexistent/g.txt"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("/nonexistent/g.txt"));
    assert!(!packchrom(&["exact"]).status.success());
    assert!(!packchrom(&["exact", "--gen", "cycle:2"]).status.success());
}

#[test]
fn bench_writes_a_report() {
    let suite = tmp("suite.json");
    let report = tmp("report.csv");
    std::fs::write(
        &suite,
        r#"[{"name": "C5", "graph": {"spec": "cycle:5"}, "methods": ["greedy", "exact"], "seeds": [0, 1],
             "expected": {"value": 4, "kind": "exact", "source": "oracle"}}]"#,
    )
    .unwrap();
    let out = packchrom(&[
        "bench",
        "--suite",
        suite.to_str().unwrap(),
        "--out",
        report.to_str().unwrap(),
        "--format",
        "csv",
        "--jobs",
        "2",
    ]);
    let text = std::fs::read_to_string(&report).unwrap();
    std::fs::remove_file(&suite).ok();
    std::fs::remove_file(&report).ok();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(text.lines().count(), 4);
    assert!(text.starts_with("case,algorithm,seed,k_achieved,solved,time_ms"));
}
