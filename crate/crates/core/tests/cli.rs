//! End-to-end checks of the `conjiso` binary: output shapes, determinism,
//! and exit codes.

use std::process::{Command, Output};

fn conjiso(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_conjiso"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn boundary_all_methods_agree_on_identity_class() {
    let out = conjiso(&["boundary", "4", "--classes", "1+1+1+1", "--method", "all"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["agree"], serde_json::json!(true));
    for entry in v["boundary"].as_array().unwrap() {
        assert_eq!(entry["value"], "6");
    }
}

#[test]
fn lexboundary_example() {
    let out = conjiso(&["lexboundary", "4", "6"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["boundary"], "18");
    assert_eq!(v["appendix_bound"], "45");
}

#[test]
fn ximin_single_and_unachievable() {
    let out = conjiso(&["ximin", "4", "1"]);
    let v = stdout_json(&out);
    assert_eq!(v["min_boundary"], "6");
    assert_eq!(v["witness"], serde_json::json!(["1+1+1+1"]));

    let out = conjiso(&["ximin", "4", "2"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["achievable"], serde_json::json!(false));
}

#[test]
fn verify_spectral_exits_zero() {
    let out = conjiso(&["verify", "spectral", "--max-n", "5"]);
    assert!(out.status.success());
    // one JSON report per line
    for line in String::from_utf8_lossy(&out.stdout).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v["holds"].as_bool().unwrap(), "{line}");
    }
}

#[test]
fn deterministic_output() {
    let a = conjiso(&["verify", "census", "--max-n", "6"]);
    let b = conjiso(&["verify", "census", "--max-n", "6"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let a = conjiso(&["chartable", "6"]);
    let b = conjiso(&["chartable", "6"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn chartable_csv_shape() {
    let out = conjiso(&["chartable", "4", "--format", "csv"]);
    let text = String::from_utf8_lossy(&out.stdout);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 6); // header + 5 classes
    assert!(lines[0].starts_with("alpha,4,3+1,"));
}

#[test]
fn exit_codes_are_distinct() {
    // 2: usage
    assert_eq!(conjiso(&["no-such-command"]).status.code(), Some(2));
    // 3: malformed cycle type
    let out = conjiso(&["boundary", "4", "--classes", "9+1"]);
    assert_eq!(out.status.code(), Some(3));
    let out = conjiso(&["solve-k", "abc"]);
    assert_eq!(out.status.code(), Some(3));
    // 4: out of range
    assert_eq!(conjiso(&["chartable", "99"]).status.code(), Some(4));
    assert_eq!(conjiso(&["ximin", "4", "999"]).status.code(), Some(4));
    assert_eq!(conjiso(&["solve-k", "3/4"]).status.code(), Some(4));
}

#[test]
fn solve_k_closed_form() {
    let out = conjiso(&["solve-k", "1/16"]);
    let v = stdout_json(&out);
    assert!((v["k"].as_f64().unwrap() - 2.0).abs() < 1e-10);
    let out = conjiso(&["solve-kappa", "1/27", "1"]);
    let v = stdout_json(&out);
    assert_eq!(v["k_floor"], 3);
}
