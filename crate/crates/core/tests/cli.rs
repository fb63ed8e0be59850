use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_realforms")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = run(&full);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let doc: Value = serde_json::from_slice(&out.stdout).expect("one JSON document");
    assert_eq!(doc["schema"], "realforms/1");
    doc["result"].clone()
}

#[test]
fn classify_quadric() {
    let r = json(&["classify", "z^2-1"]);
    assert_eq!(r["count"], 4);
    assert_eq!(r["representatives"].as_array().unwrap().len(), 4);
    let empty = r["representatives"].as_array().unwrap().iter().filter(|rep| rep["real_points"] == false).count();
    assert_eq!(empty, 1);
}

#[test]
fn classify_human_table() {
    let out = run(&["classify", "z^4 + z^2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("count      6"));
    assert_eq!(text.lines().filter(|l| l.starts_with('S')).count(), 6);
}

#[test]
fn h1mu_six() {
    assert_eq!(json(&["h1mu", "6"])["count"], 2);
    assert_eq!(json(&["h1mu", "7"])["count"], 1);
}

#[test]
fn involution_sigma3() {
    let r = json(&["involution", "1", "3", "0", "-1"]);
    assert_eq!(r["class"], "sigma3");
    let p: Vec<Vec<i64>> = serde_json::from_value(r["conjugator"].clone()).unwrap();
    // P^{-1} M P = (0 1; 1 0)  ⇔  M P = P (0 1; 1 0)
    let m = [[1, 3], [0, -1]];
    let mp = |i: usize, j: usize| m[i][0] * p[0][j] + m[i][1] * p[1][j];
    for (i, row) in p.iter().enumerate() {
        assert_eq!([mp(i, 0), mp(i, 1)], [row[1], row[0]]);
    }
}

#[test]
fn isotest_and_exists() {
    assert_eq!(json(&["isotest", "z^2-1", "4z^2-1"])["isomorphic"], true);
    assert_eq!(json(&["isotest", "z^3+z", "z^3-z"])["isomorphic"], false);
    assert_eq!(json(&["isotest", "z^3+z", "z^3-z", "--over", "qi"])["isomorphic"], true);
    assert_eq!(json(&["exists", "z^3+i"])["exists"], true);
    assert_eq!(json(&["exists", "z^3+z+1+i"])["exists"], false);
}

#[test]
fn reduce_cocycles() {
    let r = json(&["reduce-cocycle", "--kind", "psi", "--p", "z^2", r#"{"a":"1","b":"1","c":"1","r":"i*z^2"}"#]);
    assert_eq!(r["normal_form"]["r"], Value::Array(vec![]));
    let r = json(&["reduce-cocycle", "--kind", "affine", "--p", "z^3", r#"{"a":"i","b":"i","c":"-1"}"#]);
    assert!(r["class"].as_str().unwrap().starts_with("tau"));
    let r = json(&["reduce-cocycle", "--kind", "torus", r#"{"a":"-1","b":"-1","m":[[-1,0],[0,-1]]}"#]);
    assert_eq!(r["class"], "G3xG3");
    let r = json(&["reduce-cocycle", "--kind", "halftorus", r#"{"lambda":"1","m":0,"c":[[1,"i"],[-1,"i"]],"mu":"1","e":-1}"#]);
    assert_eq!(r["class"], "A1xG2");
    let r = json(&["reduce-cocycle", "--kind", "pgl2", r#"[["0","-1"],["1","0"]]"#]);
    assert_eq!(r["epsilon"], -1);
}

#[test]
fn torus_lists() {
    assert_eq!(json(&["classify-torus", "torus"])["count"], 6);
    assert_eq!(json(&["classify-torus", "half-torus"])["count"], 4);
    assert_eq!(json(&["classify-torus", "punctured-line"])["count"], 3);
}

#[test]
fn verify_cases() {
    let r = json(&["verify-paper", "--case", "quadric/"]);
    assert_eq!(r["failed"], 0);
    assert!(r["passed"].as_u64().unwrap() >= 4);
    assert_eq!(run(&["verify-paper"]).status.code(), Some(0));
    assert_eq!(run(&["verify-paper", "--case", "nonexistent"]).status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["classify", "z^+"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "z"]).status.code(), Some(3));
    assert_eq!(run(&["involution", "1", "1", "0", "1"]).status.code(), Some(3));
    let non_cocycle = r#"{"a":"2","b":"1/2","c":"1"}"#;
    assert_eq!(run(&["reduce-cocycle", "--kind", "psi", "--p", "z^2", non_cocycle]).status.code(), Some(3));
    assert_eq!(run(&["reduce-cocycle", "--kind", "psi", "--p", "z^2", "{"]).status.code(), Some(2));
    let out = run(&["classify", "z"]);
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn order_cap_is_a_domain_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_realforms"))
        .env("REALFORMS_MAX_ORDER", "4")
        .args(["classify", "z^3 + zeta(5)"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn json_is_deterministic_and_reparses() {
    let args = ["--json", "classify", "z^6 + z^2"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let doc: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(serde_json::to_string_pretty(&doc).unwrap() + "\n", String::from_utf8(a.stdout).unwrap());
}
