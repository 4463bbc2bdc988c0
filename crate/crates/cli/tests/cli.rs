use std::process::{Command, Output};

use serde_json::Value;

fn sptcrank(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sptcrank")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = sptcrank(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&a)).unwrap()
}

fn rows(v: &Value) -> &Vec<Value> {
    v["rows"].as_array().unwrap()
}

#[test]
fn spt_counts() {
    let v = json(&["spt", "--variant", "sptbar", "--n-max", "4"]);
    assert_eq!(rows(&v)[3], serde_json::json!({"n": 4, "value": 13}));
    let v = json(&["spt", "--variant", "m2spt", "--n-max", "6"]);
    assert_eq!(rows(&v)[5]["value"], 5);
    assert_eq!(stdout(&["spt", "--variant", "spt", "--n-max", "1"]), "1 1\n");
}

#[test]
fn class_sums() {
    let v = json(&["table", "nsbar", "--n-max", "3", "--classes", "3"]);
    let at3: Vec<_> = rows(&v).iter().filter(|r| r["n"] == 3).map(|r| r["value"].as_i64().unwrap()).collect();
    assert_eq!(at3, [2, 2, 2]);
    let v = json(&["table", "nsbar2", "--n-max", "8", "--classes", "5"]);
    let at8: Vec<_> = rows(&v).iter().filter(|r| r["n"] == 8).map(|r| r["value"].as_i64().unwrap()).collect();
    assert_eq!(at8, [3; 5]);
}

#[test]
fn table_at_zero() {
    assert_eq!(stdout(&["table", "nbar", "--n-max", "0"]), "0 0 1\n");
    assert_eq!(stdout(&["table", "nsbar", "--n-max", "0"]), "");
}

#[test]
fn csv_matches_json() {
    let args = ["table", "mbar", "--n-max", "6"];
    let v = json(&args);
    let csv = stdout(&[&args[..], &["--format", "csv"]].concat());
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("m,n,value"));
    let from_json: Vec<String> = rows(&v).iter().map(|r| format!("{},{},{}", r["m"], r["n"], r["value"])).collect();
    assert_eq!(lines.map(String::from).collect::<Vec<_>>(), from_json);
}

#[test]
fn verify_passes_and_is_stable() {
    let v = json(&["verify", "T2_5", "--order", "120"]);
    assert_eq!(rows(&v)[0]["status"], "pass");
    assert_eq!(rows(&v)[0]["order_checked"], 120);
    let a = stdout(&["verify", "mainthm_iii", "--n-max", "25", "sb3", "--format", "json"]);
    let b = stdout(&["verify", "mainthm_iii", "--n-max", "25", "sb3", "--format", "json"]);
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a).unwrap();
    let ids: Vec<_> = rows(&v).iter().map(|r| r["check_id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["mainthm_iii", "sb3"]);
}

#[test]
fn verify_rejects_unknown_ids_before_running() {
    let out = sptcrank(&["verify", "T2_5", "no_such_check"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert_eq!(sptcrank(&["verify", "T2_5", "--order", "0"]).status.code(), Some(2));
    assert_eq!(sptcrank(&["verify"]).status.code(), Some(2));
    assert_eq!(sptcrank(&["table", "nosuch", "--n-max", "3"]).status.code(), Some(2));
}

#[test]
fn bijections() {
    let v = json(&["bijection", "phi", "1"]);
    assert_eq!(rows(&v).len(), 1);
    assert_eq!(rows(&v)[0]["pi"], "1");
    assert_eq!(rows(&v)[0]["j"], 1);
    assert_eq!(rows(&v)[0]["sptcrank"], rows(&v)[0]["crank"]);
    let v = json(&["bijection", "phi", "6"]);
    assert!(rows(&v).iter().all(|r| r["sptcrank"] == r["crank"]));
    let v = json(&["bijection", "psi", "3", "--size", "16"]);
    assert_eq!(rows(&v).len(), 6);
    assert_eq!(rows(&v)[0], serde_json::json!({"partition": "16", "image": "4+4+4+4"}));
}

#[test]
fn enumerate_and_catalog() {
    let marked = stdout(&["enumerate", "marked", "1", "--mod", "3"]);
    assert_eq!(marked, "(1, 1) 1 -- 1 0 0 0 0\n");
    let v = json(&["catalog"]);
    assert!(rows(&v).iter().any(|r| r["id"] == "T2_5" && r["default_order"] == 122));
}
