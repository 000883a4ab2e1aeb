//! End-to-end tests of the shipped binary: output contracts, exit
//! codes and determinism.

use assert_cmd::Command;
use predicates::prelude::*;

fn bin() -> Command {
    let mut cmd = Command::cargo_bin("hurwitz").unwrap();
    cmd.env_remove("HURWITZ_FORMAT");
    cmd
}

#[test]
fn transform_apply_quadratic_example() {
    bin()
        .args([
            "transform", "apply", "--dim", "4", "--c", "-1,-1", "--eps", "1,-1,1,1",
            "--n", "1", "--u", "1,1,1,1",
        ])
        .assert()
        .success()
        .stdout("x = (0, 0, 0, 4)\nvanishing components: [1]\n");
}

#[test]
fn dynamics_pairs_json() {
    bin()
        .args(["dynamics", "pairs", "--range", "-10:10", "--format", "json"])
        .assert()
        .success()
        .stdout("[[0,0,\"trivial\"],[1,1],[3,-3],[4,-2]]\n");
}

#[test]
fn dynamics_dualize_accepts_decimals_and_rationals() {
    let out = bin()
        .args(["dynamics", "dualize", "--alpha", "1", "--n", "1", "--z", "1", "--e", "-0.5"])
        .assert()
        .success()
        .get_output()
        .stdout
        .clone();
    let again = bin()
        .args(["dynamics", "dualize", "--alpha", "1", "--n", "1", "--z", "1", "--e", "-1/2"])
        .assert()
        .success()
        .get_output()
        .stdout
        .clone();
    assert_eq!(out, again);
    assert_eq!(
        String::from_utf8(out).unwrap(),
        "potential: 2 * rho^2; eigenvalue: 4; roles swapped: true\n"
    );
}

#[test]
fn dio_generate_verify_round_trip() {
    let generated = bin()
        .args([
            "dio", "generate", "--family", "EQ39", "--c", "-1,-1,1", "--bound", "2",
            "--primitive", "--format", "json",
        ])
        .assert()
        .success()
        .get_output()
        .stdout
        .clone();
    assert!(!generated.is_empty());
    let verdicts = bin()
        .args(["dio", "verify", "--n", "1"])
        .write_stdin(generated.clone())
        .assert()
        .success()
        .get_output()
        .stdout
        .clone();
    let verdicts = String::from_utf8(verdicts).unwrap();
    let lines: Vec<&str> = verdicts.lines().collect();
    assert_eq!(lines.len(), String::from_utf8(generated).unwrap().lines().count());
    assert!(lines.iter().all(|l| *l == "true"));
}

#[test]
fn dio_generate_is_deterministic() {
    let run = || {
        bin()
            .args([
                "dio", "generate", "--family", "EQ38_DIM4", "--c", "-1,1", "--bound", "2",
                "--format", "csv",
            ])
            .assert()
            .success()
            .get_output()
            .stdout
            .clone()
    };
    let first = run();
    assert_eq!(first, run());
    let text = String::from_utf8(first).unwrap();
    assert!(text.starts_with("family,seed,A,B,C,D,I,primitive\n"));
}

#[test]
fn dio_verify_single_tuple() {
    bin()
        .args([
            "dio", "verify", "--family", "EQ43", "--c", "-1", "--values", "3,4,5",
        ])
        .assert()
        .success()
        .stdout("true\n");
    bin()
        .args([
            "dio", "verify", "--family", "EQ43", "--c", "-1", "--values", "3,4,6",
        ])
        .assert()
        .code(1)
        .stdout("false\n");
}

#[test]
fn rationals_serialize_as_p_over_q() {
    bin()
        .args([
            "algebra", "multiply", "--dim", "2", "--c", "-1", "--u", "1/2,1/3", "--v", "1,1",
        ])
        .assert()
        .success()
        .stdout(predicate::str::contains("w = (1/6, 5/6)"));
}

#[test]
fn usage_errors_exit_2() {
    // leading eps entry must be 1
    bin()
        .args([
            "transform", "apply", "--dim", "4", "--c", "-1,-1", "--eps", "-1,1,1,1",
            "--u", "1,1,1,1",
        ])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("leading eps"));
    // component count mismatch
    bin()
        .args([
            "transform", "apply", "--dim", "4", "--c", "-1,-1", "--eps", "1,1,1,1",
            "--u", "1,1,1",
        ])
        .assert()
        .code(2);
    // unknown subcommand is a clap usage error
    bin().arg("frobnicate").assert().code(2);
}

#[test]
fn domain_errors_exit_1() {
    // inverse transform on the null cone
    bin()
        .args([
            "transform", "apply", "--dim", "4", "--c", "-1,-1", "--eps", "1,-1,-1,-1",
            "--n", "-1", "--u", "0,0,0,0",
        ])
        .assert()
        .code(1)
        .stderr(predicate::str::contains("null-cone"));
    // inadmissible duality couple
    bin()
        .args(["dynamics", "dualize", "--alpha", "2", "--n", "1", "--z", "1", "--e", "1"])
        .assert()
        .code(1);
}

#[test]
fn calculus_verify_reports_json() {
    bin()
        .args([
            "calculus", "verify", "--dim", "2", "--c", "1", "--eps", "1,1", "--n", "2",
            "--trials", "4", "--format", "json",
        ])
        .assert()
        .success()
        .stdout(predicate::str::contains("\"dim2_relations\":{\"passed\":true,\"trials\":4}"));
}

#[test]
fn format_env_variable_sets_default() {
    bin()
        .env("HURWITZ_FORMAT", "json")
        .args(["transform", "classify", "--dim", "4", "--c", "-1,-1", "--eps", "1,-1,-1,-1"])
        .assert()
        .success()
        .stdout("{\"j_index\":0,\"type\":\"B\"}\n");
}

#[test]
fn fibration_kepler_row() {
    bin()
        .args([
            "transform", "fibration", "--dim", "4", "--c", "-1,-1", "--eps", "1,-1,1,1",
        ])
        .assert()
        .success()
        .stdout(predicate::str::contains("S^3 -> S^2"));
}
