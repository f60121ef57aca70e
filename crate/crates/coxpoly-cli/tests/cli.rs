//! End-to-end tests against the compiled binary: output formats, exit
//! codes, and determinism of the verification campaigns.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn write_fixture(dir: &tempfile::TempDir, name: &str, contents: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, contents).unwrap();
    path
}

fn coxpoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxpoly"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn coxeter_command_prints_polynomial() {
    let dir = tempfile::tempdir().unwrap();
    let a2 = write_fixture(&dir, "a2.quiver", "quiver 2\n1 -> 2\n");
    let out = coxpoly(&["coxeter", a2.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "2 | 1 1 1\n");

    let a22 = write_fixture(&dir, "a22.quiver", "quiver 4\n1 -> 3\n1 -> 4\n2 -> 3\n2 -> 4\n");
    let out = coxpoly(&["coxeter", a22.to_str().unwrap()]);
    assert_eq!(stdout(&out), "4 | 1 0 -2 0 1\n");
}

#[test]
fn coxeter_accepts_json_quivers() {
    let dir = tempfile::tempdir().unwrap();
    let json = write_fixture(&dir, "a22.json", r#"{"n":4,"arrows":[[1,3],[1,4],[2,3],[2,4]]}"#);
    let out = coxpoly(&["coxeter", json.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "4 | 1 0 -2 0 1\n");
}

#[test]
fn coxeter_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let cyclic = write_fixture(&dir, "cyclic.quiver", "quiver 2\n1 -> 2\n2 -> 1\n");
    let out = coxpoly(&["coxeter", cyclic.to_str().unwrap()]);
    assert_eq!(code(&out), 2, "cyclic quiver is a domain error");

    let garbage = write_fixture(&dir, "garbage.quiver", "not a quiver\n");
    let out = coxpoly(&["coxeter", garbage.to_str().unwrap()]);
    assert_eq!(code(&out), 1, "parse failure");
    assert!(!out.stderr.is_empty());

    let out = coxpoly(&["coxeter", dir.path().join("missing.quiver").to_str().unwrap()]);
    assert_eq!(code(&out), 1, "unreadable file");
}

#[test]
fn coxeter_of_raw_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_fixture(&dir, "euler.matrix", "2\n1 -1\n0 1\n");
    let out = coxpoly(&["coxeter", "--matrix", m.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "2 | 1 1 1\n");
}

#[test]
fn charpoly_command() {
    let dir = tempfile::tempdir().unwrap();
    let k2 = write_fixture(&dir, "k2.graph", "graph 2\n1 -- 2\n");
    let out = coxpoly(&["charpoly", k2.to_str().unwrap()]);
    assert_eq!(stdout(&out), "2 | 1 0 -1\n");

    let c4 = write_fixture(&dir, "c4.graph", "graph 4\n1 -- 2\n2 -- 3\n3 -- 4\n1 -- 4\n");
    let out = coxpoly(&["charpoly", c4.to_str().unwrap()]);
    assert_eq!(stdout(&out), "4 | 1 0 -4 0 0\n");

    let star = write_fixture(&dir, "star.graph", "graph 4\n1 -- 2\n1 -- 3\n1 -- 4\n");
    let out = coxpoly(&["charpoly", star.to_str().unwrap()]);
    assert_eq!(stdout(&out), "4 | 1 0 -3 0 0\n");

    let dup = write_fixture(&dir, "dup.graph", "graph 3\n1 -- 2\n2 -- 1\n");
    let out = coxpoly(&["charpoly", dup.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 3"), "positioned message, got: {err}");

    let diag = write_fixture(&dir, "diag.matrix", "2\n2 0\n0 3\n");
    let out = coxpoly(&["charpoly", "--matrix", diag.to_str().unwrap()]);
    assert_eq!(stdout(&out), "2 | 1 -5 6\n");
}

#[test]
fn coxeter_output_reparses_in_polynomial_format() {
    use std::str::FromStr;
    let dir = tempfile::tempdir().unwrap();
    let a22 = write_fixture(&dir, "a22.quiver", "quiver 4\n1 -> 3\n1 -> 4\n2 -> 3\n2 -> 4\n");
    let out = coxpoly(&["coxeter", a22.to_str().unwrap()]);
    let text = stdout(&out);
    let parsed = coxpoly::AmbientPolynomial::from_str(text.trim()).unwrap();
    assert_eq!(parsed.to_string(), text.trim());
}

#[test]
fn coefficients_command_emits_report_json() {
    let dir = tempfile::tempdir().unwrap();
    let a22 = write_fixture(&dir, "a22.quiver", "quiver 4\n1 -> 3\n1 -> 4\n2 -> 3\n2 -> 4\n");
    let out = coxpoly(&["coefficients", a22.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let report: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(report["n"], 4);
    assert_eq!(report["e"], 4);
    assert_eq!(report["q"], 1);
    assert_eq!(report["a1_closed"], 0);
    assert_eq!(report["a2_closed"], -2);
    assert_eq!(report["a1_det"], 0);
    assert_eq!(report["a2_det"], -2);
    assert_eq!(report["verdict"], true);
    assert_eq!(report["coxeter_coefficients"][2], "-2");

    let path = write_fixture(&dir, "path.quiver", "quiver 3\n1 -> 2\n2 -> 3\n");
    let out = coxpoly(&["coefficients", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2, "non-bipartite quiver is a domain error");
}

#[test]
fn reflect_command() {
    let dir = tempfile::tempdir().unwrap();
    let a2 = write_fixture(&dir, "a2.quiver", "quiver 2\n1 -> 2\n");
    let out = coxpoly(&["reflect", "--at", "2", a2.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "quiver 2\n2 -> 1\n");

    let path = write_fixture(&dir, "path.quiver", "quiver 3\n1 -> 2\n2 -> 3\n");
    let out = coxpoly(&["reflect", "--at", "2", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2, "vertex 2 is neither sink nor source");
}

#[test]
fn verify_command_json_summary() {
    let out = coxpoly(&["verify", "corollary-trees", "--n", "4"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "{\"campaign\":\"corollary-trees\",\"instances_checked\":16,\"failures\":[]}\n"
    );

    let out = coxpoly(&["verify", "theorem1", "--n", "5"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("\"instances_checked\":1442"));
}

#[test]
fn verify_command_text_format() {
    let out = coxpoly(&["verify", "theorem1", "--n-max", "3", "--format", "text"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("campaign theorem1: 32 instances checked, 0 failures"), "{text}");
}

#[test]
fn verify_rejects_unknown_campaigns_and_bad_bounds() {
    let out = coxpoly(&["verify", "nonsense"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8(out.stderr).unwrap().contains("unknown campaign"));

    let out = coxpoly(&["verify", "theorem1", "--n-max", "12"]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("instances"), "cost estimate expected: {err}");
}

#[test]
fn verify_output_is_deterministic_and_worker_independent() {
    let baseline = coxpoly(&["verify", "n1n2", "--cases", "20", "--seed", "9"]);
    assert_eq!(code(&baseline), 0);
    let rerun = coxpoly(&["verify", "n1n2", "--cases", "20", "--seed", "9"]);
    assert_eq!(stdout(&baseline), stdout(&rerun));

    let one = coxpoly(&["verify", "n1n2", "--cases", "20", "--seed", "9", "--workers", "1"]);
    let four = coxpoly(&["verify", "n1n2", "--cases", "20", "--seed", "9", "--workers", "4"]);
    assert_eq!(stdout(&one), stdout(&four));
    assert_eq!(stdout(&one), stdout(&baseline));
}
