use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_queer-howe")).args(args).output().expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

fn without_elapsed(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("elapsed_ms");
    v
}

#[test]
fn sergeev_passes_with_derived_values() {
    let out = run(&["sergeev", "--n", "2", "--m", "2"]);
    assert!(out.status.success());
    let r = report(&out);
    assert_eq!(r["suite"], "sergeev");
    assert!(!r["derived_values"].as_object().unwrap().is_empty());
    assert!(r["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn fixture_reports_eigenvalues() {
    let out = run(&["fixture"]);
    assert!(out.status.success());
    let r = report(&out);
    let names: Vec<&str> = r["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert!(names.iter().any(|n| n.starts_with("T_1 u1 = ")));
    assert!(names.iter().any(|n| n.starts_with("T_1 wb = ")));
}

#[test]
fn howe_rank_one_degree_one() {
    let out = run(&["howe", "--n", "1", "--m", "1", "--degree", "1"]);
    assert!(out.status.success());
    assert_eq!(report(&out)["derived_values"]["dim.l1"], 2);
}

#[test]
fn config_errors_exit_with_two() {
    let out = run(&["census", "--n", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unsupported scale"));
    let out = run(&["relations", "--mode", "prob", "--trials", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("invalid configuration"));
    assert_eq!(run(&["relations", "--m", "0"]).status.code(), Some(2));
    // neither a suite nor --all
    assert!(!run(&[]).status.success());
}

#[test]
fn reports_are_reproducible_and_cache_independent() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let cache = cache.to_str().unwrap();
    let args = ["sergeev", "--n", "1", "--m", "2", "--param", "qinv"];
    let plain = without_elapsed(report(&run(&args)));
    let cold = without_elapsed(report(&run(&[&args[..], &["--cache", cache]].concat())));
    let warm = without_elapsed(report(&run(&[&args[..], &["--cache", cache]].concat())));
    assert_eq!(plain, cold);
    assert_eq!(cold, warm);
    assert!(std::fs::read_dir(cache).unwrap().count() >= 2);

    let path = dir.path().join("r.json");
    let out = run(&["relations", "--n", "1", "--m", "3", "--mode", "prob", "--trials", "2", "--seed", "4", "--report", path.to_str().unwrap()]);
    assert!(out.status.success() && out.stdout.is_empty());
    let first = std::fs::read_to_string(&path).unwrap();
    run(&["relations", "--n", "1", "--m", "3", "--mode", "prob", "--trials", "2", "--seed", "4", "--report", path.to_str().unwrap()]);
    let second = std::fs::read_to_string(&path).unwrap();
    let strip = |s: &str| without_elapsed(serde_json::from_str(s).unwrap());
    assert_eq!(strip(&first), strip(&second));
    assert_eq!(strip(&first)["params"]["trials"], 2);
}

#[test]
fn full_battery_matches_expectations() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("exp.json");
    let out = run(&["--all", "--write-expectations", path.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let fresh: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let checked_in = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/expectations.json");
    let frozen: Value = serde_json::from_str(&std::fs::read_to_string(checked_in).unwrap()).unwrap();
    assert_eq!(fresh["values"], frozen["values"]);
}
