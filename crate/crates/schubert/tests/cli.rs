//! End-to-end checks of the command-line interface: worked examples,
//! output stability, and the exit-code contract.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schubert"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> serde_json::Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn ehrhart_set_values() {
    let v = json(&["ehrhart", "--set", "{2,4}", "--tmax", "3"]);
    assert_eq!(v["n"], 4);
    assert_eq!(v["rank"], 2);
    // 1, 5, 14, 30 = (t+1)(t+2)(2t+3)/6, confirmed by the
    // rank-inequality and Kohnert oracles (acceptance criterion 1).
    for (t, count) in [("0", "1"), ("1", "5"), ("2", "14"), ("3", "30")] {
        assert_eq!(v["values"][t], count, "t={t}");
    }
}

#[test]
fn ehrhart_uniform_family() {
    let v = json(&["ehrhart", "--family", "uniform", "--k", "2", "--n", "4"]);
    for (t, count) in [("0", "1"), ("1", "6"), ("2", "19"), ("3", "44")] {
        assert_eq!(v["values"][t], count, "t={t}");
    }
    // i(U_{2,4}, t) = (2t^3 + 6t^2 + 7t + 3)/3, ascending, lowest terms.
    let poly = v["polynomial"].as_array().unwrap();
    assert_eq!(poly.len(), 4);
    assert_eq!(poly[0]["num"], "1");
    assert_eq!(poly[0]["den"], "1");
    assert_eq!(poly[1]["num"], "7");
    assert_eq!(poly[1]["den"], "3");
    assert_eq!(poly[3]["num"], "2");
    assert_eq!(poly[3]["den"], "3");
}

#[test]
fn ehrhart_verify_agrees() {
    let v = json(&["ehrhart", "--r", "2,1,2,1,1,1", "--t", "1", "--verify"]);
    let rows = v["verified"].as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["agree"], true);
    assert_eq!(rows[0]["rank_oracle"], v["values"]["1"]);
}

#[test]
fn ehrhart_output_is_byte_stable() {
    let a = run(&["ehrhart", "--family", "uniform", "--k", "2", "--n", "4"]);
    let b = run(&["ehrhart", "--family", "uniform", "--k", "2", "--n", "4"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn ehrhart_csv_mode() {
    let out = run(&["ehrhart", "--set", "{2,4}", "--tmax", "2", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(&lines[..3], &["0,1", "1,5", "2,14"]);
    assert!(lines[3..].iter().all(|l| l.starts_with("coeff,")));
}

#[test]
fn classify_examples() {
    let v = json(&["classify", "--set", "{2,4,5}"]);
    assert_eq!(v["sparse_paving"], true);
    assert_eq!(v["circuit_hyperplanes"], serde_json::json!([[3, 4, 5]]));

    let v = json(&["classify", "--set", "{2,6,7,10}"]);
    assert_eq!(v["sparse_paving"], false);

    let v = json(&["classify", "--set", "{2,4}"]);
    assert_eq!(v["sparse_paving"], true);
    assert_eq!(v["n_bases"], 5);
}

#[test]
fn scan_exit_codes() {
    let out = run(&["scan", "f-positivity", "--max", "4"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["instabilities"], 0);
    assert_eq!(report["counterexamples"].as_array().unwrap().len(), 0);

    let out = run(&["scan", "no-such-scan"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_and_budget_exit_codes() {
    // Parse failure: malformed set literal.
    let out = run(&["ehrhart", "--set", "{2,,4}"]);
    assert_eq!(out.status.code(), Some(1));

    // Conflicting sources.
    let out = run(&["ehrhart", "--set", "{2,4}", "--r", "1,1"]);
    assert_eq!(out.status.code(), Some(1));

    // Verification on a ground set beyond the brute-force budget.
    let out = run(&["ehrhart", "--set", "{2,6,7,10}", "--t", "1", "--verify"]);
    assert_eq!(out.status.code(), Some(2));
}
