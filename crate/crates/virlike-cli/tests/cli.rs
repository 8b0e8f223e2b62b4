//! End-to-end tests against the compiled binary: exit codes, determinism,
//! and the eval surface.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_virlike"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn list_suites_names_all_eight() {
    let out = run(&["list-suites"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for id in [
        "lemma2_3",
        "lemma3_1",
        "lemma3_2",
        "lemma3_3_coproduct",
        "lemma3_3_twist",
        "lemma3_4",
        "theorem2_6",
        "hopf_axioms",
    ] {
        assert!(text.contains(id), "missing suite `{id}` in: {text}");
    }
}

#[test]
fn verify_json_runs_are_byte_identical() {
    let args = ["verify", "--suite", "theorem2_6", "--seed", "7", "--format", "json"];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    assert!(stdout(&first).ends_with('\n'));
}

#[test]
fn verify_exit_codes() {
    let ok = run(&["verify", "--suite", "lemma3_3_twist", "--order", "3"]);
    assert_eq!(ok.status.code(), Some(0));

    let unknown = run(&["verify", "--suite", "nope"]);
    assert_eq!(unknown.status.code(), Some(2));

    // inadmissible context: a1*alpha1 + a2*alpha2 = 2
    let bad_ctx = run(&["verify", "--suite", "lemma3_2", "--T", "2,0", "--alpha", "1,0"]);
    assert_eq!(bad_ctx.status.code(), Some(2));
    let err = String::from_utf8(bad_ctx.stderr).unwrap();
    assert!(err.contains("inadmissible"), "stderr was: {err}");
}

#[test]
fn verify_accepts_negative_coefficients() {
    let out = run(&[
        "verify",
        "--suite",
        "lemma3_3_twist",
        "--T",
        "-1,2",
        "--alpha",
        "1,1",
        "--order",
        "3",
        "--a",
        "-1/2,0",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let betas = run(&[
        "verify",
        "--suite",
        "lemma3_4",
        "--order",
        "3",
        "--beta",
        "-1,2;0,1",
    ]);
    assert_eq!(betas.status.code(), Some(0));
}

#[test]
fn verify_writes_report_file() {
    let dir = std::env::temp_dir().join("virlike-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = run(&[
        "verify",
        "--suite",
        "lemma3_3_twist",
        "--order",
        "3",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let body = std::fs::read_to_string(&path).unwrap();
    assert!(body.contains("\"suite\":\"lemma3_3_twist\""));
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn eval_prints_normal_forms() {
    let out = run(&["eval", "--expr", "L(1,0)*L(0,1)"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "L(0, 1) * L(1, 0) + L(1, 1)");

    let out = run(&["eval", "--expr", "L(0,0)"]);
    assert_eq!(stdout(&out).trim(), "0");

    let out = run(&["eval", "--expr", "falling(d1, 0, 2)"]);
    assert_eq!(stdout(&out).trim(), "-d1 + d1^2");
}

#[test]
fn eval_structure_maps() {
    let out = run(&["eval", "--expr", "d1", "--coproduct", "--order", "1"]);
    let text = stdout(&out);
    assert!(text.contains("d1 ⊗ 1"), "got: {text}");
    assert!(text.contains("1 ⊗ d1"), "got: {text}");

    let out = run(&["eval", "--expr", "d1 * L(1,0)", "--antipode"]);
    assert_eq!(stdout(&out).trim(), "-L(1, 0) + d1 * L(1, 0)");

    let out = run(&["eval", "--expr", "d2", "--twist-coproduct", "--order", "2"]);
    let text = stdout(&out);
    assert!(text.contains("d2 ⊗ 1"), "got: {text}");
    assert!(!text.contains("t^1"), "alpha_2 = 0 leaves d2 primitive: {text}");
}

#[test]
fn eval_reports_error_column() {
    let out = run(&["eval", "--expr", "d1 + + d2"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("column 6"), "stderr was: {err}");
}
