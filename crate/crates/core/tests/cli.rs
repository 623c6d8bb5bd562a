use std::process::{Command, Output};

use hopf_blocks::catalog;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopf-blocks")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn theorems_on_the_z2_double() {
    let o = run(&["theorems", "double:Z2", "--max-genus", "2", "--window", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("nonsep g=2 handle=2  PASS      2                         2"), "{text}");
    assert!(text.contains("sep 1,1"));
    assert!(text.contains("0 fail"));

    let o = run(&["theorems", "double:Z2", "--max-genus", "2", "--window", "4", "--format", "json"]);
    let report: hopf_blocks::harness::TheoremReport = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report.report_version, 1);
    let torelli = report.checks.iter().find(|c| c.id == "torelli").unwrap();
    assert_eq!(torelli.verdict, hopf_blocks::harness::Verdict::Pass);
    let sep = report.checks.iter().find(|c| c.id == "sep 1,1").unwrap();
    assert_eq!(sep.lhs, "1");
}

#[test]
fn blocks_and_dehn() {
    let o = run(&["blocks", "double:S3", "--genus", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("dim 8"));

    let o = run(&["dehn", "double:S3", "--genus", "1", "--curve", "nonsep:1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["pgl_order"], 6);
    assert_eq!(v["certificate"]["pgl_order"], 6);

    let o = run(&["dehn", "double:Z2", "--curve", "sep:1,1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["gl_order"], 1);

    let o = run(&["dehn", "double:Z2", "--genus", "1", "--curve", "nonsep:2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("error[HandleOutOfRange]"));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["theorems", "double:Z2", "--no-such-flag"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let o = run(&["check", "/nonexistent/algebra.json"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("error[IoError]"));
    let o = run(&["dehn", "double:Z2", "--curve", "spiral"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("error[ParseError]"));
    let o = run(&["blocks", "double:Z2", "--genus", "0", "--model", "center"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("error[ModelRequiresPositiveGenus]"));
}

#[test]
fn corrupted_files() {
    let dir = tempfile::tempdir().unwrap();
    let text = catalog::to_json(&catalog::get("double:Z2").unwrap());

    let good = dir.path().join("good.json");
    std::fs::write(&good, &text).unwrap();
    let o = run(&["check", good.to_str().unwrap(), "--field-check"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("all axioms hold"));

    let mut doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    doc["comult"][0][3] = serde_json::json!("3");
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, doc.to_string()).unwrap();
    let o = run(&["check", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("error[ValidationFailed]"));
    assert!(stdout(&o).contains("FAIL"));

    let truncated = dir.path().join("truncated.json");
    std::fs::write(&truncated, &text[..text.len() / 2]).unwrap();
    let o = run(&["theorems", truncated.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("error[ParseError]"));
}

#[test]
fn refused_theorems_are_not_discrepancies() {
    let o = run(&["theorems", "symmetric:Z2", "--max-genus", "1", "--window", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("REFUSED"));
    assert!(stdout(&o).contains("FactorizableRequired"));
}

#[test]
fn invariants_and_listing() {
    let o = run(&["invariants", "double:S3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["factorizable"], true);
    assert_eq!(v["end_muger_central"], false);
    assert_eq!(v["ribbon_order"]["gl_order"], 6);

    let o = run(&["catalog-list"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), catalog::CATALOG_NAMES.len());
}
