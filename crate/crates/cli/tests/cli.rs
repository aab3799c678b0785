//! End-to-end checks of the `wheel` binary: pinned outputs, format
//! contracts, exit codes, and reproducibility.

use std::process::{Command, Output};
use std::str::FromStr;

use num::BigRational;

fn wheel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wheel"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = wheel(args);
    assert!(
        out.status.success(),
        "wheel {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn exit_code(args: &[&str]) -> i32 {
    wheel(args).status.code().expect("exit code")
}

#[test]
fn hitting_json_matches_the_documented_shape() {
    let line = stdout_of(&[
        "hitting", "--n", "4", "--source", "p0", "--target", "p1", "--format", "json",
    ]);
    assert_eq!(
        line.trim(),
        r#"{"n":4,"source":"p0","target":"p1","exact":"64/15","float":4.266666666666667}"#
    );
}

#[test]
fn hitting_json_exact_field_round_trips() {
    let line = stdout_of(&[
        "hitting", "--n", "4", "--source", "p0", "--target", "p1", "--format", "json",
    ]);
    let value: serde_json::Value = serde_json::from_str(&line).expect("valid json");
    let exact = BigRational::from_str(value["exact"].as_str().unwrap()).unwrap();
    assert_eq!(exact, BigRational::new(64.into(), 15.into()));
    let float = value["float"].as_f64().unwrap();
    assert!((float - 64.0 / 15.0).abs() < 1e-12);
}

#[test]
fn peripheral_indices_reduce_modulo_the_cycle() {
    // p5 on a 4-cycle is p1, and the echoed names say so.
    let wrapped = stdout_of(&[
        "hitting", "--n", "4", "--source", "p4", "--target", "p5", "--format", "json",
    ]);
    assert!(wrapped.contains(r#""source":"p0","target":"p1","exact":"64/15""#));
}

#[test]
fn identified_tree_count_prints_the_bare_integer() {
    let out = stdout_of(&["trees", "--n", "4", "--identify", "center,p0"]);
    assert_eq!(out.trim(), "21");
    let plain = stdout_of(&["trees", "--n", "4"]);
    assert_eq!(plain.trim(), "45");
}

#[test]
fn trees_json_carries_the_identified_pair() {
    let line = stdout_of(&["trees", "--n", "4", "--identify", "center,p0", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&line).unwrap();
    assert_eq!(value["identify"], "center,p0");
    assert_eq!(value["exact"], "21");
}

#[test]
fn table_text_lists_the_small_wheel_quantities() {
    let out = stdout_of(&["table", "--n", "3"]);
    assert!(out.contains("h(0->1) = 3"), "missing hitting row in:\n{out}");
    assert!(out.contains("T = 16"), "missing tree count in:\n{out}");
    assert!(out.contains("tau(center,0) = 8"), "missing identified count in:\n{out}");
}

#[test]
fn table_json_pins_known_exact_values() {
    let line = stdout_of(&["table", "--n", "4", "--format", "json"]);
    assert!(line.contains(r#""T":"45""#), "missing tree count in:\n{line}");
    assert!(
        line.contains(r#""r(center,0)":"7/15""#),
        "missing resistance in:\n{line}"
    );
    let value: serde_json::Value = serde_json::from_str(&line).unwrap();
    assert_eq!(value["exact"]["h(0->1)"], "64/15");
    assert_eq!(value["approx"]["h(0->center)"], "3.00000000000");
}

#[test]
fn csv_output_uses_the_fixed_header() {
    let out = stdout_of(&["table", "--n", "4", "--format", "csv"]);
    assert!(out.starts_with("quantity,exact,approx\n"), "got:\n{out}");
    assert!(out.contains("h(0->1),64/15,4.26666666667"));
    let single = stdout_of(&[
        "resistance", "--n", "4", "--a", "center", "--b", "p0", "--format", "csv",
    ]);
    assert!(single.starts_with("quantity,exact,approx\n"));
    assert!(single.contains("\"r(center,p0)\",7/15,0.466666666667"));
}

#[test]
fn matrix_text_prints_the_folded_coefficients() {
    let out = stdout_of(&["matrix", "--n", "4"]);
    let rows: Vec<&str> = out.lines().collect();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0].split_whitespace().collect::<Vec<_>>(), ["3", "-1", "-1"]);
    assert_eq!(rows[1].split_whitespace().collect::<Vec<_>>(), ["-2", "3", "-1"]);
    assert_eq!(rows[2].split_whitespace().collect::<Vec<_>>(), ["-2", "-1", "4"]);
}

#[test]
fn matrix_inverse_json_lists_exact_entries() {
    let line = stdout_of(&["matrix", "--n", "4", "--inverse", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&line).unwrap();
    assert_eq!(value["inverse"], true);
    assert_eq!(value["entries"][0][0], "11/15");
    assert_eq!(value["entries"][2][2], "7/15");
}

#[test]
fn simulate_is_reproducible_for_a_seed() {
    let args = [
        "simulate", "--n", "4", "--source", "p0", "--target", "p1", "--walks", "2000",
        "--seed", "5",
    ];
    let first = stdout_of(&args);
    let second = stdout_of(&args);
    assert_eq!(first, second);
    let other_seed = stdout_of(&[
        "simulate", "--n", "4", "--source", "p0", "--target", "p1", "--walks", "2000",
        "--seed", "6",
    ]);
    assert_ne!(first, other_seed);
}

#[test]
fn simulate_json_reports_sample_and_exact() {
    let line = stdout_of(&[
        "simulate", "--n", "3", "--source", "p0", "--target", "center", "--walks", "2000",
        "--format", "json",
    ]);
    let value: serde_json::Value = serde_json::from_str(&line).unwrap();
    assert_eq!(value["exact"], "3");
    assert_eq!(value["seed"], 0);
    assert_eq!(value["walks"], 2000);
    let mean = value["mean"].as_f64().unwrap();
    assert!((mean - 3.0).abs() < 0.5, "mean {mean} far from 3");
}

#[test]
fn verify_passes_and_is_deterministic() {
    let args = ["verify", "--n-min", "3", "--n-max", "8"];
    let first = stdout_of(&args);
    let second = stdout_of(&args);
    assert_eq!(first, second);
    assert!(first.trim_end().ends_with("verify: PASS (n 3..8, seed 0)"), "got:\n{first}");
    for class in [
        "identities",
        "folded inverse",
        "hitting times vs solver",
        "tree count",
        "identified tree counts",
        "commute resistance",
        "resistance-tree product",
        "enumeration",
        "monte carlo bands",
    ] {
        assert!(first.contains(&format!("{class}: ")), "missing class `{class}` in:\n{first}");
    }
}

#[test]
fn verify_can_skip_the_sampling_checks() {
    let out = stdout_of(&["verify", "--n-max", "6", "--skip-montecarlo"]);
    assert!(out.contains("monte carlo bands: skipped"), "got:\n{out}");
    assert!(out.contains("verify: PASS"));
}

#[test]
fn usage_errors_exit_with_code_two() {
    // Cycle length below the minimum.
    assert_eq!(exit_code(&["hitting", "--n", "2", "--source", "p0", "--target", "p1"]), 2);
    // Resistance between a vertex and itself.
    assert_eq!(exit_code(&["resistance", "--n", "5", "--a", "p1", "--b", "p1"]), 2);
    // Malformed vertex token.
    assert_eq!(exit_code(&["hitting", "--n", "4", "--source", "px", "--target", "p1"]), 2);
    // Unknown flag.
    assert_eq!(exit_code(&["table", "--n", "4", "--frmt", "json"]), 2);
    // Inverted verification range.
    assert_eq!(exit_code(&["verify", "--n-min", "10", "--n-max", "5"]), 2);
    // Too few walks to form a standard error.
    assert_eq!(
        exit_code(&["simulate", "--n", "4", "--source", "p0", "--target", "p1", "--walks", "1"]),
        2
    );
}

#[test]
fn identified_pair_must_be_distinct() {
    let out = wheel(&["trees", "--n", "5", "--identify", "p2,p2"]);
    assert_eq!(out.status.code(), Some(2));
    let message = String::from_utf8_lossy(&out.stderr);
    assert!(message.contains("distinct"), "got: {message}");
}
