use std::process::Command;

use motzkin_cli::run;
use motzkin_core::{dp_table, StepModel};
use num_bigint::BigUint;
use serde_json::Value;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("motzkin").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn f0_bfile() {
    let (code, out, err) = invoke(&[
        "series", "--what", "f0", "--model", "A", "--terms", "10", "--format", "bfile",
    ]);
    assert_eq!(code, 0, "{err}");
    let expected: String = [1, 1, 2, 5, 14, 41, 123, 375, 1158, 3615]
        .iter()
        .enumerate()
        .map(|(n, v)| format!("{n} {v}\n"))
        .collect();
    assert_eq!(out, expected);
    assert!(err.is_empty());
}

#[test]
fn classical_csv() {
    let (code, out, _) = invoke(&[
        "dp",
        "--model",
        "general",
        "--weights",
        "1,1",
        "--terms",
        "7",
        "--level",
        "0",
        "--format",
        "csv",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "1,1,2,4,9,21,51\n");
}

#[test]
fn model_b_json() {
    let (code, out, _) = invoke(&[
        "series", "--what", "f0", "--model", "B", "--terms", "3", "--format", "json",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "{\"model\":\"B\",\"what\":\"f0\",\"terms\":3,\"coefficients\":[\"1\",\"2\",\"5\"]}\n"
    );
}

#[test]
fn open_series_sources_agree() {
    let (_, closed, _) = invoke(&[
        "open", "--model", "A", "--terms", "30", "--source", "closed", "--format", "csv",
    ]);
    let (_, dp, _) = invoke(&[
        "open", "--model", "A", "--terms", "30", "--source", "dp", "--format", "csv",
    ]);
    assert_eq!(closed, dp);
    assert!(closed.starts_with("1,2,6,19,62,"));
}

#[test]
fn derive_reports_every_stage() {
    let (code, out, err) = invoke(&["derive", "--from", "algeq", "--model", "A", "--terms", "40"]);
    assert_eq!(code, 0, "{err}");
    let v: Value = serde_json::from_str(&out).unwrap();
    for stage in ["algebraic_equation", "ode", "homogeneous_ode", "recurrence"] {
        assert_eq!(v[stage]["verified"], Value::Bool(true), "{stage}");
    }
    assert_eq!(
        v["algebraic_equation"]["text"],
        "(z^3 - z^2)*y^2 + (2*z^2 - 3*z + 1)*y + (2*z - 1) = 0"
    );
    assert_eq!(
        v["recurrence"]["coefficients"],
        serde_json::json!([["4", "4"], ["4"], ["-32", "-9"], ["28", "6"], ["-6", "-1"]])
    );
    assert_eq!(v["recurrence"]["valid_from"], 0);
    assert_eq!(
        v["recurrence"]["initial"],
        serde_json::json!(["1", "1", "2", "5"])
    );
}

#[test]
fn derive_from_dp_matches_closed_form_route() {
    let (_, a, _) = invoke(&["derive", "--from", "algeq", "--model", "B", "--terms", "40"]);
    let (_, b, _) = invoke(&["derive", "--from", "dp", "--model", "B", "--terms", "40"]);
    assert_eq!(a, b);
}

#[test]
fn guess_recurrence_json() {
    let (code, out, _) = invoke(&[
        "guess",
        "--what",
        "recurrence",
        "--model",
        "A",
        "--terms",
        "40",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(
        v["relation"]["text"],
        "(4*n + 4)*a(n) + (4)*a(n+1) + (-9*n - 32)*a(n+2) + (6*n + 28)*a(n+3) + (-n - 6)*a(n+4) = 0"
    );
    let (code, _, err) = invoke(&[
        "guess",
        "--what",
        "recurrence",
        "--model",
        "A",
        "--terms",
        "40",
        "--order",
        "2",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("no relation"));
}

#[test]
fn check_all_passes() {
    let (code, out, _) = invoke(&["check", "--what", "all", "--terms", "40"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["passed"], Value::Bool(true));
    assert!(v["checks"].as_array().unwrap().len() >= 14);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &[
            "series",
            "--what",
            "f0",
            "--model",
            "general",
            "--weights",
            "1,3",
            "--terms",
            "5",
        ][..],
        &["dp", "--terms", "0"],
        &["dp", "--model", "general", "--terms", "4"],
        &["dp", "--model", "A", "--weights", "1,2", "--terms", "4"],
        &["derive", "--model", "general", "--weights", "1,1"],
        &["frobnicate"],
    ] {
        let (code, out, err) = invoke(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty());
        assert!(!err.is_empty());
    }
}

#[test]
fn large_coefficients_round_trip() {
    let truth = dp_table(StepModel::A, 300).column(0);
    assert!(truth[300].to_string().len() > 100);

    let (_, bfile, _) = invoke(&["dp", "--model", "A", "--terms", "301", "--format", "bfile"]);
    let parsed: Vec<BigUint> = bfile
        .lines()
        .map(|l| l.split_once(' ').unwrap().1.parse().unwrap())
        .collect();
    assert_eq!(parsed, truth);

    let (_, json, _) = invoke(&[
        "series", "--what", "f0", "--model", "A", "--terms", "301", "--format", "json",
    ]);
    let v: Value = serde_json::from_str(&json).unwrap();
    let parsed: Vec<BigUint> = v["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s.as_str().unwrap().parse().unwrap())
        .collect();
    assert_eq!(parsed, truth);
}

#[test]
fn binary_output_is_byte_stable() {
    let bin = env!("CARGO_BIN_EXE_motzkin");
    let args = ["open", "--model", "B", "--terms", "25", "--format", "json"];
    let first = Command::new(bin).args(args).output().unwrap();
    let second = Command::new(bin).args(args).output().unwrap();
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    assert!(first.stderr.is_empty());

    let bad = Command::new(bin)
        .args(["series", "--what", "w"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(bad.stdout.is_empty());
}
