use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn ewgame(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ewgame")).args(args).output().expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

#[test]
fn simulate_reports_pure_ne() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "run.json",
        r#"{"game": {"a": -2, "b": 0, "c": -1, "d": 0}, "init": [[0.6, 0.4], [0.3, 0.7]], "eta": 1.0}"#,
    );
    let out = dir.path().join("out");
    let o = ewgame(&["simulate", "--config", &cfg, "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v = stdout_json(&o);
    assert_eq!(v["verdict"], "PureNE(theta2,theta2)");
    assert_eq!(v["row"], "r1");
    assert_eq!(v["agreement"], "Match");
    let csv = fs::read_to_string(out.join("trajectory.csv")).unwrap();
    assert!(csv.starts_with("t,p11,p12,p21,p22,u1,u2,delta1,delta2,W,V,flip\n"));
    assert!(out.join("summary.json").exists());
}

#[test]
fn classify_prints_prediction() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "run.json",
        r#"{"game": {"a": -1, "b": 0, "c": 3, "d": 0}, "init": [[0.5, 0.5], [0.5, 0.5]], "eta": 1.0}"#,
    );
    let o = ewgame(&["classify", "--config", &cfg]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    assert_eq!(v["row"], "r5");
    assert_eq!(v["eta_requirement"]["UpperBound"], 2.0);
}

#[test]
fn oscillate_residual_is_tiny() {
    let o = ewgame(&["oscillate", "--a", "1.0"]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    for r in v.as_array().unwrap() {
        assert!(r["residual"].as_f64().unwrap() < 1e-9);
        assert!(r["min_step_movement"].as_f64().unwrap() > 0.1);
        assert!(r["eta_gamma"].as_f64().unwrap() > 8.0);
    }
}

#[test]
fn verify_ce_agrees() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "ce.json", r#"{"game": {"a": 1, "b": 0, "c": -1, "d": 0}, "nu": [0.5, 0, 0, 0.5]}"#);
    let o = ewgame(&["verify-ce", "--config", &cfg]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    assert_eq!(v["closed_form"], true);
    assert_eq!(v["bruteforce"], true);
}

#[test]
fn bank_writes_weights() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "bank.json",
        r#"{"dist": {"kind": "trunc_gauss", "mu": 0.3, "sigma": 0.1}, "gamma_l": 0.4, "gamma_h": 0.8, "eta": 0.1, "init1": [0.1, 0.5, 0.3, 0.1], "init2": [0.1, 0.3, 0.5, 0.1], "horizon": 2000}"#,
    );
    let out = dir.path().join("bank");
    let o = ewgame(&["bank", "--config", &cfg, "--out", out.to_str().unwrap()]);
    assert!(o.status.code() == Some(0) || o.status.code() == Some(1));
    let csv = fs::read_to_string(out.join("weights.csv")).unwrap();
    let header = csv.lines().next().unwrap();
    assert_eq!(header.split(',').count(), 9);
    assert!(stdout_json(&o)["signs"].is_array());
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", r#"{"game": {"a": 1}}"#);
    let o = ewgame(&["simulate", "--config", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("expected schema"));
    assert_eq!(ewgame(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(ewgame(&["sweep"]).status.code(), Some(2));
    let degenerate = write(
        dir.path(),
        "deg.json",
        r#"{"game": {"a": 1, "b": 1, "c": 2, "d": 2}, "init": [[0.5, 0.5], [0.5, 0.5]], "eta": 1.0}"#,
    );
    assert_eq!(ewgame(&["classify", "--config", &degenerate]).status.code(), Some(2));
    assert_eq!(ewgame(&["oscillate", "--a", "0"]).status.code(), Some(2));
}

#[test]
fn random_sweep_has_no_mismatch() {
    let o = ewgame(&["sweep", "--random", "--seed", "7", "--count", "100"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stdout));
    let v = stdout_json(&o);
    assert_eq!(v["total_runs"], 200);
    assert_eq!(v["mismatches"], 0);
    assert_eq!(v["bound_violations"], 0);
}

fn tree(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut files = Vec::new();
    for e in fs::read_dir(dir).unwrap() {
        let p = e.unwrap().path();
        if p.is_dir() {
            files.extend(tree(&p));
        } else {
            files.push((p.file_name().unwrap().to_string_lossy().into_owned(), fs::read(&p).unwrap()));
        }
    }
    files.sort();
    files
}

#[test]
fn sweep_is_reproducible_and_order_independent() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str, serial: bool| {
        let out = dir.path().join(name);
        let mut args = vec!["sweep", "--random", "--seed", "11", "--count", "20", "--horizon", "20000", "--out"];
        args.push(out.to_str().unwrap());
        if serial {
            args.push("--serial");
        }
        let o = ewgame(&args);
        assert!(o.status.code() == Some(0) || o.status.code() == Some(1));
        tree(&out)
    };
    let a = run("a", false);
    let b = run("b", false);
    let c = run("c", true);
    assert_eq!(a.len(), 41);
    assert!(a == b, "repeated sweep differs");
    assert!(a == c, "serial sweep differs from parallel");
}
