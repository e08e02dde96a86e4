//! Black-box tests of the command-line interface, run against the compiled
//! binary.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_molien"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_molien"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 output")
}

#[test]
fn compute_presented_ascii() {
    let out = run(&["compute", "3", "0", "--ascii"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "(1+t^3)/(1-t^2)^6");
}

#[test]
fn compute_defaults_to_lambda() {
    let out = run(&["compute", "2", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "(2\u{3bb}+\u{3bb}^2)/(1-\u{3bb}^2)^3");
}

#[test]
fn compute_canonical_form() {
    let out = run(&["compute", "1", "4", "--form", "canonical", "--ascii"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "t^4/(1-t^2)");
}

#[test]
fn decompose_row() {
    let out = run(&["decompose", "3", "2", "--ascii"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).trim(),
        "(5t^2+5t^3)/(1-t^2)^6 + (t^2+3t^3+t^4)/(1-t^2)^5"
    );
}

#[test]
fn table_command() {
    let out = run(&["table", "3", "--l-max", "2", "--ascii"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.trim().lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0], "3 0 (1+t^3)/(1-t^2)^6");
    assert!(lines[2].starts_with("3 2 "));
}

#[test]
fn threshold_small_scan() {
    let out = run(&["threshold", "4", "--ceiling", "40", "--window", "15"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("stable above L=17"));
}

#[test]
fn verify_suite_passes() {
    let out = run(&["verify", "--suite", "sumrule", "--order", "8"]);
    assert!(out.status.success());
    assert!(stdout(&out).lines().all(|l| l.starts_with("pass")));
}

#[test]
fn verify_unknown_suite_is_usage_error() {
    let out = run(&["verify", "--suite", "nonsense"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn quadrature_order_env_var_controls_accuracy() {
    // Four quadrature points are far too few, so the verification must
    // fail with the dedicated exit code.
    let out = run_env(
        &["verify", "--suite", "quadrature"],
        "MOLIEN_QUAD_ORDER",
        "4",
    );
    assert_eq!(out.status.code(), Some(2));
    // At the default order the same suite passes.
    let ok = run(&["verify", "--suite", "quadrature"]);
    assert_eq!(ok.status.code(), Some(0));
}

#[test]
fn json_output_round_trips() {
    let out = run(&["decompose", "4", "3", "--format", "json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let value: serde_json::Value = serde_json::from_str(&text).expect("valid json");
    assert_eq!(value["schema"], "molien-output/1");
    assert_eq!(value["command"], "decompose");
    assert_eq!(value["fractions"].as_array().unwrap().len(), 3);
    // Re-serialization is byte identical to what the CLI printed.
    let reserialized = serde_json::to_string_pretty(&value).unwrap();
    assert_eq!(reserialized, text.trim_end());
}

#[test]
fn finite_group_rows() {
    let out = run(&["finite", "--group", "ci", "--ascii"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("A1: (1+3t^2)/(1-t^2)^3"));
    assert!(text.contains("A2: (3t+t^3)/(1-t^2)^3"));
}

#[test]
fn missing_arguments_are_usage_errors() {
    assert_eq!(run(&["compute", "3"]).status.code(), Some(1));
    assert_eq!(run(&["nonsense"]).status.code(), Some(1));
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}
