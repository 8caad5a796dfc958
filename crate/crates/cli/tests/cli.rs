use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

use lec::solver::SolveFailure;

fn lec(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lec"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn gen(dir: &Path, name: &str, family: &[&str]) -> PathBuf {
    let mut args = vec!["gen"];
    args.extend_from_slice(family);
    args.extend_from_slice(&["-o", name]);
    assert_eq!(lec(&args, dir).status.code(), Some(0));
    dir.join(name)
}

#[test]
fn exact_on_c5() {
    let dir = TempDir::new().unwrap();
    gen(dir.path(), "c5.txt", &["cycle", "5"]);
    let out = lec(&["exact", "c5.txt"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["chi_prime"], 3);
    assert_eq!(v["chi_prime_2"], 1);
    assert_eq!(v["alpha_prime"], 2);
    assert_eq!(v["alpha_T"], 3);
}

#[test]
fn exact_reports_null_past_a_guard() {
    let dir = TempDir::new().unwrap();
    gen(dir.path(), "k8.txt", &["complete", "8"]);
    let v = json(&lec(&["exact", "k8.txt", "--edge-guard", "10"], dir.path()));
    assert!(v["chi_prime"].is_null());
    assert_eq!(v["alpha_prime"], 4);
}

#[test]
fn hall_edge_on_c5() {
    let dir = TempDir::new().unwrap();
    gen(dir.path(), "c5.txt", &["cycle", "5"]);
    let out = lec(&["hall", "--edge", "c5.txt"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["value"], 3);
    assert_eq!(v["witness"], serde_json::json!([0, 1, 2, 3, 4]));

    let via = json(&lec(&["hall", "--via-lists", "c5.txt"], dir.path()));
    assert_eq!(via["value"], 3);
    let total = json(&lec(&["hall", "--total", "c5.txt"], dir.path()));
    assert_eq!(total["value"], 4);
}

#[test]
fn hall_check_exits_two_on_violation() {
    let dir = TempDir::new().unwrap();
    gen(dir.path(), "k3.txt", &["complete", "3"]);
    std::fs::write(dir.path().join("ones.json"), r#"{"edge_lists":[[1],[1],[1]],"vertex_lists":null}"#).unwrap();
    let out = lec(&["hall", "--check", "ones.json", "k3.txt"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["status"], "violated");
    assert_eq!(v["size"], 3);
    assert_eq!(v["capacity"], 1);
}

#[test]
fn k4_uniform_lists() {
    let dir = TempDir::new().unwrap();
    gen(dir.path(), "k4.txt", &["complete", "4"]);
    let out = lec(&["colour-edges", "k4.txt", "--uniform", "5"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["edge_colours"].as_array().unwrap().len(), 6);

    let small = lec(&["colour-edges", "k4.txt", "--uniform", "3"], dir.path());
    assert_eq!(small.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&small.stderr).contains("at least 5"));

    let forced = lec(&["colour-edges", "k4.txt", "--uniform", "3", "--force"], dir.path());
    assert_eq!(forced.status.code(), Some(0));
}

#[test]
fn input_errors_exit_one() {
    let dir = TempDir::new().unwrap();
    let out = lec(&["colour-edges", "missing.txt", "--uniform", "3"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("missing.txt"));

    std::fs::write(dir.path().join("bad.txt"), "3 2\n0 1\n1 x\n").unwrap();
    let out = lec(&["exact", "bad.txt"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr).to_string();
    assert!(err.contains("bad.txt") && err.contains("line 3"), "{err}");

    let out = lec(&["gen", "cycle", "2"], dir.path());
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_detects_tampering() {
    let dir = TempDir::new().unwrap();
    gen(dir.path(), "pet.txt", &["petersen"]);
    let lists = lec(
        &["gen", "petersen", "-o", "pet2.txt", "--lists-out", "l.json", "--uniform", "5"],
        dir.path(),
    );
    assert_eq!(lists.status.code(), Some(0));
    let out = lec(&["colour-edges", "pet.txt", "--lists", "l.json", "-o", "col.json"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let ok = lec(&["verify", "pet.txt", "col.json", "--lists", "l.json"], dir.path());
    assert_eq!(ok.status.code(), Some(0));

    let mut col: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("col.json")).unwrap()).unwrap();
    // edges 0 and 1 share vertex 1
    col["edge_colours"][1] = col["edge_colours"][0].clone();
    std::fs::write(dir.path().join("bad.json"), col.to_string()).unwrap();
    let bad = lec(&["verify", "pet.txt", "bad.json", "--lists", "l.json"], dir.path());
    assert_eq!(bad.status.code(), Some(2));
    let v = json(&bad);
    assert_eq!(v["valid"], false);
    assert_eq!(v["violation"], format!("edges 0 and 1 meet at vertex 1 and share colour {}", col["edge_colours"][0]));
}

#[test]
fn total_colouring_round_trip() {
    let dir = TempDir::new().unwrap();
    gen(dir.path(), "k5.txt", &["complete", "5"]);
    let out = lec(&["colour-total", "k5.txt", "--uniform", "8", "-o", "tc.json"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let ok = lec(&["verify", "k5.txt", "tc.json", "--uniform", "8"], dir.path());
    assert_eq!(ok.status.code(), Some(0));
    let tight = lec(&["verify", "k5.txt", "tc.json", "--uniform", "2"], dir.path());
    assert_eq!(tight.status.code(), Some(2));
}

#[test]
fn solver_failure_writes_a_bundle() {
    let dir = TempDir::new().unwrap();
    gen(dir.path(), "c5.txt", &["cycle", "5"]);
    let out = lec(
        &["colour-edges", "c5.txt", "--uniform", "2", "--force", "--repro", "bundle.json"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
    let text = std::fs::read_to_string(dir.path().join("bundle.json")).unwrap();
    let bundle: SolveFailure = serde_json::from_str(&text).unwrap();
    assert_eq!(bundle.vertex_count, 5);
    assert_eq!(bundle.edge_lists, vec![vec![0, 1]; 5]);
    assert!(!bundle.trace.is_empty());
}

#[test]
fn trace_and_dot_files() {
    let dir = TempDir::new().unwrap();
    gen(dir.path(), "k7.txt", &["complete", "7"]);
    let out = lec(
        &[
            "colour-edges", "k7.txt", "--random", "7", "--palette", "8", "--seed", "10", "--force", "--trace",
            "t.txt", "--dot", "p.dot",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["stats"]["interchanges"], 1);
    let trace = std::fs::read_to_string(dir.path().join("t.txt")).unwrap();
    let lines: Vec<&str> = trace.lines().collect();
    assert!(lines.iter().any(|l| l.starts_with("ACCEPT s=")));
    for l in &lines {
        let known = l.starts_with("PUSH ") || *l == "POP" || l.starts_with("ACCEPT s=") || l.starts_with("{\"path\":");
        assert!(known, "unexpected trace line {l:?}");
    }
    let dot = std::fs::read_to_string(dir.path().join("p.dot")).unwrap();
    assert_eq!(dot.matches("graph cip {").count(), 1);
}

#[test]
fn fuzz_exit_codes() {
    let dir = TempDir::new().unwrap();
    let clean = lec(&["fuzz", "--trials", "100", "--n-max", "15", "--seed", "7"], dir.path());
    assert_eq!(clean.status.code(), Some(0));
    let v = json(&clean);
    assert_eq!(v["failures"], 0);
    assert_eq!(v["checker_failures"], 0);

    // lists of size Δ: failures are reported, not fatal
    let small = lec(
        &["fuzz", "--trials", "100", "--n-max", "10", "--offset", "0", "--repro-dir", "bundles"],
        dir.path(),
    );
    assert_eq!(small.status.code(), Some(0));
    let v = json(&small);
    let failures = v["failures"].as_u64().unwrap();
    assert!(failures > 0);
    assert_eq!(v["oracle_disagreements"], 0);
    assert_eq!(std::fs::read_dir(dir.path().join("bundles")).unwrap().count() as u64, failures);

    let mutated = lec(&["fuzz", "--trials", "20", "--mutate"], dir.path());
    assert_eq!(mutated.status.code(), Some(2));
}
