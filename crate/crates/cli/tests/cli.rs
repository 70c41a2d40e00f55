//! End-to-end tests of the `socle` binary: golden LaTeX tables, output
//! determinism with and without a warm cache, JSON schema, and exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> PathBuf {
    // target/debug/socle, next to the test executable's deps/ directory
    let mut path = std::env::current_exe().expect("test exe path");
    path.pop();
    if path.ends_with("deps") {
        path.pop();
    }
    path.push("socle");
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(bin())
        .args(args)
        .env_remove("SOCLE_CACHE_PATH")
        .output()
        .expect("spawn socle")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "socle {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn tokens(s: &str) -> Vec<&str> {
    s.split_whitespace().collect()
}

#[test]
fn golden_latex_tables() {
    for (label, golden) in [
        ("∅;(1,1);∅;∅", include_str!("golden/injective_1100.tex")),
        ("∅;∅;(1,1);(1)", include_str!("golden/injective_0011.tex")),
        ("∅;(1,1);(1,1);(1)", include_str!("golden/injective_1111.tex")),
    ] {
        let got = stdout(&["--t", "1", "--format", "latex", "socle", label]);
        assert_eq!(tokens(&got), tokens(golden), "mismatch for {label}");
    }
}

#[test]
fn deterministic_with_and_without_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("lr.json");
    let cache = cache.to_str().unwrap();
    let args = ["--t", "1", "--format", "json", "socle", "∅;(1,1);(1,1);(1)"];

    let cold = run(&[&args[..], &["--no-cache"]].concat());
    // first cached run populates the file, second reads it back warm
    let fill = run(&[&args[..], &["--cache-path", cache]].concat());
    assert!(std::fs::metadata(cache).unwrap().len() > 0);
    let warm = run(&[&args[..], &["--cache-path", cache]].concat());

    assert!(cold.status.success() && fill.status.success() && warm.status.success());
    assert_eq!(cold.stdout, fill.stdout);
    assert_eq!(cold.stdout, warm.stdout);
}

#[test]
fn cache_path_env_var() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("lr.json");
    let out = Command::new(bin())
        .args(["lr", "(3,2,1)", "(2,1)", "(2,1)"])
        .env("SOCLE_CACHE_PATH", &cache)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "2");
    assert!(cache.exists());
}

#[test]
fn corrupted_cache_is_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("lr.json");
    std::fs::write(&cache, r#"{"version":"lr-cache/0","entries":{}}"#).unwrap();
    let out = run(&[
        "--cache-path",
        cache.to_str().unwrap(),
        "lr",
        "(1)",
        "(1)",
        "∅",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("version"), "diagnostic was: {err}");
}

#[test]
fn socle_json_schema() {
    let got = stdout(&["--t", "0", "--format", "json", "socle", "∅;(1);(1)"]);
    let v: serde_json::Value = serde_json::from_str(&got).unwrap();
    assert_eq!(v["t"], 0);
    assert_eq!(v["label"]["mu"], serde_json::json!([1]));
    assert_eq!(v["label"]["lambdas"], serde_json::json!([[]]));
    let layers = v["layers"].as_array().unwrap();
    assert_eq!(layers[0]["q"], 1);
    assert_eq!(layers[0]["constituents"][0]["mult"], 1);
    // layers ascend in q
    let qs: Vec<u64> = layers.iter().map(|l| l["q"].as_u64().unwrap()).collect();
    assert!(qs.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn lr_defect_order_block_subcommands() {
    assert_eq!(stdout(&["lr", "(3,2,1)", "(2,1)", "(2,1)"]).trim(), "2");
    assert_eq!(
        stdout(&["--t", "1", "defect", "(4,0,0,1)", "(0,2,2,1)"]).trim(),
        "6"
    );
    assert_eq!(
        stdout(&["--t", "1", "defect", "(0,2,2,1)", "(4,0,0,1)"]).trim(),
        "incomparable"
    );
    assert_eq!(
        stdout(&["--t", "1", "order", "(1,0,0,0)", "(0,0,1,0)"]).trim(),
        "true"
    );
    assert_eq!(
        stdout(&["--t", "0", "block", "(1);∅;(1)", "∅;(1);(1)"]).trim(),
        "true"
    );
    assert_eq!(
        stdout(&["--t", "0", "block", "(1);∅;(1)", "∅;∅;(1)"]).trim(),
        "false"
    );
}

#[test]
fn homdim_and_extdim_subcommands() {
    assert_eq!(stdout(&["--t", "0", "homdim", "(1,2,2)", "(1,2,2)"]).trim(), "4");
    assert_eq!(
        stdout(&["--t", "0", "extdim", "(1);∅;∅", "∅;(1);∅", "1"]).trim(),
        "1"
    );
    // extdim is only defined at t = 0
    let out = run(&["--t", "1", "extdim", "∅;(1);∅;∅", "∅;∅;(1);∅", "1"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn coproduct_and_decompose_subcommands() {
    let got = stdout(&["coproduct", "(2)", "2"]);
    assert_eq!(got.lines().count(), 3); // (2)⊗∅, (1)⊗(1), ∅⊗(2)
    let got = stdout(&["--t", "0", "decompose", "(1,1,0)"]);
    assert!(got.contains('Ṽ') || got.contains('V'));
}

#[test]
fn malformed_input_is_exit_2() {
    for args in [
        &["--t", "1", "socle", "∅;(1,1)"][..],      // wrong slot count
        &["lr", "(1,2)", "(1)", "(1)"][..],          // increasing parts
        &["--t", "0", "defect", "(1,1)", "(1,1,1)"][..], // wrong index length
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "args: {args:?}");
    }
}

#[test]
fn bounds_exceeded_is_exit_3() {
    let out = run(&["--t", "0", "--max-boxes", "2", "socle", "∅;(2,1);(1)"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn selfcheck_reports_suites() {
    let out = run(&["--max-boxes", "4", "selfcheck", "--max-t", "1"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    let suites = text.lines().filter(|l| l.starts_with("ok: ")).count();
    assert!(suites >= 4, "expected >= 4 suites, got:\n{text}");
    assert!(text.contains("all checks passed"));
}
