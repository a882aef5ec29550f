use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hellyspace")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

fn coloring(dir: &Path, n: usize) -> String {
    let p = dir.join(format!("coloring{n}.sys"));
    let out = run(&["gen", "coloring", "--n", &n.to_string(), "-o", p.to_str().unwrap()]);
    assert!(out.status.success());
    p.display().to_string()
}

#[test]
fn rank_of_coloring_four() {
    let dir = tempfile::tempdir().unwrap();
    let file = coloring(dir.path(), 4);
    let out = run(&["rank", &file]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["command"], "rank");
    assert_eq!(r["delta_or_gamma"], 8);
    assert_eq!(r["m"], 9);
    assert_eq!(r["basis_indices"].as_array().unwrap().len(), 8);
}

#[test]
fn solve_basis_certifies_coloring_infeasibility() {
    let dir = tempfile::tempdir().unwrap();
    let file = coloring(dir.path(), 4);
    let out = run(&["solve-basis", &file, "--seed", "7", "--verify"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["classification"], "Infeasible");
    assert!(r["basis_indices"].as_array().unwrap().len() <= 8);
    assert_eq!(r["verified"], true);
    assert_eq!(r["seed"], 7);
    assert!(r["primitive_calls"]["verify"].as_u64().unwrap() > 0);
}

#[test]
fn verify_generating_subset() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "sys.txt", "x0\nx0^2\nx1\n");
    let r = json(&run(&["verify", &file, "--basis", "0,2", "--mode", "mingen"]));
    assert_eq!(r["verified"], true);
    let r = json(&run(&["verify", &file, "--basis", "1,2", "--mode", "mingen"]));
    assert_eq!(r["verified"], false);
    let r = json(&run(&["verify", &file, "--basis", "1,2", "--mode", "solve"]));
    assert_eq!(r["verified"], true);
    assert_eq!(r["classification"], "Feasible");
}

#[test]
fn mingen_reports_and_errors() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "gens.txt", "x0^2\nx0*x1\nx1^2\nx0^3\n");
    let out = run(&["mingen", &file, "--gamma", "3", "--verify"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["basis_indices"], serde_json::json!([0, 1, 2]));
    assert_eq!(r["classification"], Value::Null);
    assert_eq!(r["verified"], true);

    let out = run(&["mingen", &file, "--gamma", "2"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--gamma 4"));

    let inh = write(dir.path(), "inh.txt", "x0\nx1 + 1\n");
    assert_eq!(run(&["mingen", &inh, "--gamma", "2"]).status.code(), Some(2));
    assert_eq!(run(&["mingen", &inh, "--gamma", "2", "--allow-inhomogeneous"]).status.code(), Some(0));
}

#[test]
fn delta_too_small_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let file = coloring(dir.path(), 4);
    let out = run(&["solve-basis", &file, "--delta", "2"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "x0 +\n");
    let out = run(&["rank", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));
    assert_eq!(run(&["rank", "/nonexistent/file"]).status.code(), Some(2));
    assert_eq!(run(&["solve-basis"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "coloring", "--n", "5"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "coloring", "--n", "4", "--field", "2"]).status.code(), Some(2));
    assert_eq!(run(&["verify", &bad, "--basis", "0", "--mode", "other"]).status.code(), Some(2));
}

#[test]
fn zero_lines_are_dropped_with_a_warning() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "z.txt", "x0\nx1 - x1\nx1\n");
    let out = run(&["rank", &file]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line(s) 2"));
    assert_eq!(json(&out)["m"], 2);
}

#[test]
fn reports_go_to_out_files_and_pretty_summaries() {
    let dir = tempfile::tempdir().unwrap();
    let file = coloring(dir.path(), 6);
    let report = dir.path().join("r.json");
    let out = run(&["solve-basis", &file, "--out", report.to_str().unwrap()]);
    assert!(out.stdout.is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(r["classification"], "Infeasible");
    assert_eq!(r["seed"], 0);
    assert_eq!(r["input_digest"].as_str().unwrap().len(), 64);

    let out = run(&["solve-basis", &file, "--pretty", "--jobs", "1"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("Infeasible"));

    let out = run(&["solve-basis", &file, "--seed", "random"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("seed: "));
}

#[test]
fn generated_random_systems_round_trip_through_rank() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("r.sys");
    let out = run(&[
        "gen", "random", "--nvars", "3", "--d", "2", "--m", "40", "--rank", "5", "--homogeneous", "--seed", "9", "-o",
        p.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let r = json(&run(&["rank", p.to_str().unwrap()]));
    assert_eq!(r["delta_or_gamma"], 5);
    assert_eq!(r["m"], 40);
    let out = run(&["gen", "random", "--nvars", "3", "--d", "2", "--m", "4", "--rank", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bench_writes_one_row_per_size() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("b.csv");
    let out = run(&[
        "bench", "scaling", "--family", "coloring", "--sizes", "6,4", "--seeds", "3", "--out", csv.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "family,m,delta,seed_count,mean_primitive_calls,stddev");
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("coloring,9,8,3,"));
    assert!(lines[2].starts_with("coloring,16,12,3,"));
}

#[test]
fn lex_order_is_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "l.txt", "x0^2 - x1\nx1^2 - 1\nx0*x1 - x0\n");
    let out = run(&["solve-basis", &file, "--order", "lex", "--verify"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["verified"], true);
    assert_eq!(run(&["rank", &file, "--order", "florp"]).status.code(), Some(2));
}
