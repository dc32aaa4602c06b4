//! Binary-level acceptance of the verification contract: the full suite
//! exits 0, and a tolerance no identity can meet drives the exit code to 1
//! (the in-process constant-corruption checks live in the library's
//! acceptance suite).

use std::process::{Command, Output};

fn gtrig(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gtrig"))
        .args(args)
        .output()
        .expect("binary should spawn")
}

#[test]
fn criterion_12_verify_all_exits_zero() {
    let out = gtrig(&["verify", "--suite", "all"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "verify --suite all failed:\n{text}"
    );
    // One report line per identity, every one of them a PASS.
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 41, "unexpected report count:\n{text}");
    assert!(lines.iter().all(|l| l.starts_with("PASS ")));
    println!("PASS criterion 12a (verify --suite all exits 0, {} reports)", lines.len());
}

#[test]
fn criterion_12_failed_verification_exits_one() {
    // 1e-16 is below the evaluation noise of every identity route, so the
    // suite must report failure through the exit code.
    let out = gtrig(&[
        "verify",
        "--suite",
        "double_angle_26",
        "--tol",
        "1e-16",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("FAIL "), "stdout was:\n{text}");
    println!("PASS criterion 12b (failing verification exits 1)");
}
