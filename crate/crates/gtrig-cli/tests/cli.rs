//! Black-box tests of the command-line contract: output shapes, exit
//! codes, and determinism.

use std::process::{Command, Output};

fn gtrig(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gtrig"))
        .args(args)
        .output()
        .expect("binary should spawn")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("process exited normally")
}

#[test]
fn eval_pi_of_the_classical_pair() {
    let out = gtrig(&["eval", "--p", "2", "--q", "2", "--fn", "pi"]);
    assert_eq!(exit_code(&out), 0);
    let value: f64 = stdout(&out).trim().parse().unwrap();
    assert!((value - std::f64::consts::PI).abs() < 1e-13);
    // 15 significant digits.
    assert_eq!(stdout(&out).trim(), "3.14159265358979");
}

#[test]
fn eval_degree_six_half_period_matches_the_elliptic_route() {
    let pi_out = gtrig(&["eval", "--p", "2", "--q", "6", "--fn", "pi"]);
    let pi_26: f64 = stdout(&pi_out).trim().parse().unwrap();
    let k_out = gtrig(&["elliptic", "--fn", "k"]);
    let quarter_k: f64 = stdout(&k_out).trim().parse().unwrap();
    let derived = 2.0 * quarter_k / 3.0f64.powf(0.25);
    assert!(
        ((pi_26 - derived) / pi_26).abs() < 1e-12,
        "pi {pi_26} vs elliptic {derived}"
    );
}

#[test]
fn eval_domain_and_usage_errors_exit_2() {
    // asin outside [0, 1]
    let out = gtrig(&[
        "eval", "--p", "2", "--q", "6", "--fn", "asin", "--x", "1.5",
    ]);
    assert_eq!(exit_code(&out), 2);
    assert!(!out.stderr.is_empty());
    // missing --x
    let out = gtrig(&["eval", "--p", "2", "--q", "6", "--fn", "sin"]);
    assert_eq!(exit_code(&out), 2);
    // invalid exponent
    let out = gtrig(&["eval", "--p", "1", "--q", "2", "--fn", "pi"]);
    assert_eq!(exit_code(&out), 2);
    // unknown flag (clap)
    let out = gtrig(&["eval", "--bogus", "1"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn table_csv_shape_and_endpoints() {
    let pi_out = gtrig(&["eval", "--p", "2", "--q", "6", "--fn", "pi"]);
    let half = stdout(&pi_out).trim().parse::<f64>().unwrap() / 2.0;
    let out = gtrig(&[
        "table",
        "--p",
        "2",
        "--q",
        "6",
        "--fn",
        "sin",
        "--x-lo",
        "0",
        "--x-hi",
        &half.to_string(),
        "--n",
        "3",
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[0], "x,value");
    assert_eq!(lines[1], "0,0");
    let last: Vec<&str> = lines[3].split(',').collect();
    let end_value: f64 = last[1].parse().unwrap();
    assert_eq!(end_value, 1.0);
    // Values round-trip through their textual form.
    let mid: f64 = lines[2].split(',').nth(1).unwrap().parse().unwrap();
    assert!(mid > 0.0 && mid < 1.0);
}

#[test]
fn table_json_is_one_top_level_array() {
    let out = gtrig(&[
        "table", "--p", "2", "--q", "2", "--fn", "cos", "--x-lo", "0", "--x-hi", "1", "--n", "5",
        "--format", "json",
    ]);
    assert_eq!(exit_code(&out), 0);
    let rows: Vec<serde_json::Value> = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[0]["x"].as_f64().unwrap(), 0.0);
    assert_eq!(rows[0]["value"].as_f64().unwrap(), 1.0);
    let x3 = rows[3]["x"].as_f64().unwrap();
    assert!((x3 - 0.75).abs() < 1e-15);
}

#[test]
fn table_rejects_bad_ranges() {
    let base = ["table", "--p", "2", "--q", "2", "--fn", "sin"];
    let out = gtrig(&[&base[..], &["--x-lo", "1", "--x-hi", "0", "--n", "5"]].concat());
    assert_eq!(exit_code(&out), 2);
    let out = gtrig(&[&base[..], &["--x-lo", "0", "--x-hi", "1", "--n", "1"]].concat());
    assert_eq!(exit_code(&out), 2);
    // asin table outside [0, 1]
    let out = gtrig(&[
        "table", "--p", "2", "--q", "2", "--fn", "asin", "--x-lo", "0", "--x-hi", "2", "--n", "4",
    ]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn verify_json_round_trips_into_reports() {
    let out = gtrig(&[
        "verify",
        "--suite",
        "quarter_constant",
        "--format",
        "json",
    ]);
    assert_eq!(exit_code(&out), 0);
    let reports: Vec<gtrig::IdentityReport> = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(reports.len(), 2);
    for r in &reports {
        assert!(r.passed);
        assert!(r.max_abs_err <= r.tolerance);
    }
    // Identical invocations produce byte-identical output.
    let again = gtrig(&[
        "verify",
        "--suite",
        "quarter_constant",
        "--format",
        "json",
    ]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn verify_csv_has_the_report_header() {
    let out = gtrig(&["verify", "--suite", "jacobi", "--format", "csv"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with(
        "identity_name,domain_lo,domain_hi,samples,max_abs_err,argmax_x,passed,tolerance\n"
    ));
}

#[test]
fn verify_unknown_suite_exits_2() {
    let out = gtrig(&["verify", "--suite", "nonsense"]);
    assert_eq!(exit_code(&out), 2);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("unknown suite"));
}

#[test]
fn verify_randomized_suite_echoes_its_seed() {
    let out = gtrig(&["verify", "--suite", "cn_addition", "--samples", "10"]);
    assert_eq!(exit_code(&out), 0);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("seed: 42"), "stderr was: {err}");
    let out = gtrig(&[
        "verify",
        "--suite",
        "cn_addition",
        "--samples",
        "10",
        "--seed",
        "7",
    ]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("seed: 7"));
}

#[test]
fn elliptic_evaluations() {
    let out = gtrig(&["elliptic", "--fn", "cn", "--x", "0"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out).trim(), "1.00000000000000");
    // K at an explicit modulus; reference from the AGM route.
    let out = gtrig(&["elliptic", "--k", "0.6", "--fn", "k"]);
    let value: f64 = stdout(&out).trim().parse().unwrap();
    assert!((value - 1.750_753_802_915_752_5).abs() < 1e-13);
    // sn without --x is a usage error.
    let out = gtrig(&["elliptic", "--fn", "sn"]);
    assert_eq!(exit_code(&out), 2);
    // modulus out of range
    let out = gtrig(&["elliptic", "--k", "1.0", "--fn", "k"]);
    assert_eq!(exit_code(&out), 2);
}
