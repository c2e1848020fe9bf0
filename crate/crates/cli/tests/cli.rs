//! End-to-end checks of the `brq` binary: exit codes, CSV contract,
//! deterministic bytes.

use std::process::Command;

fn brq() -> Command {
    Command::new(env!("CARGO_BIN_EXE_brq"))
}

#[test]
fn verify_special_suite_passes() {
    let out = brq()
        .args(["verify", "--suite", "special"])
        .output()
        .unwrap();
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(out.status.success(), "{stdout}");
    assert!(stdout.contains("PASS criterion  1"), "{stdout}");
    assert!(stdout.contains("1/1 criteria passed"), "{stdout}");
}

#[test]
fn unknown_suite_is_invalid_input() {
    let out = brq()
        .args(["verify", "--suite", "nonsense"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_subcommand_is_invalid_input() {
    let out = brq().arg("frobnicate").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn localize_rejects_nonpositive_delta() {
    let out = brq()
        .args(["localize", "--alpha", "0.5", "--delta", "0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("delta"), "{stderr}");
}

#[test]
fn approx_writes_deterministic_csv() {
    let dir = std::env::temp_dir().join("brq-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("curve.csv");
    let run = || {
        let out = brq()
            .args([
                "approx",
                "--n",
                "1024",
                "--length",
                "32.0",
                "--function",
                "gaussian",
                "--mu",
                "2:16",
                "--out",
                path.to_str().unwrap(),
            ])
            .output()
            .unwrap();
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        std::fs::read(&path).unwrap()
    };
    let first = run();
    let second = run();
    assert_eq!(first, second, "same config must give byte-identical files");
    let text = String::from_utf8(first).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "mu,err,omega,ratio");
    // Data rows for 2..16 at ratio sqrt(2), then the fit footer rows.
    assert!(text.lines().filter(|l| l.starts_with("fit,")).count() == 6);
    std::fs::remove_file(&path).ok();
}

#[test]
fn unwritable_path_is_io_error_without_partial_file() {
    let out = brq()
        .args([
            "approx",
            "--n",
            "1024",
            "--length",
            "32.0",
            "--mu",
            "2:8",
            "--out",
            "/nonexistent-dir/curve.csv",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(!std::path::Path::new("/nonexistent-dir/curve.csv").exists());
}

#[test]
fn besov_reports_ratio() {
    let out = brq()
        .args([
            "besov",
            "--n",
            "4096",
            "--length",
            "32.0",
            "--function",
            "gaussian",
            "--s",
            "0.5",
            "--mu-max",
            "64",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("ratio rhs/lhs"), "{stdout}");
}

#[test]
fn kernel_subcommand_reports_decay() {
    let out = brq()
        .args([
            "kernel",
            "--n",
            "16384",
            "--length",
            "64.0",
            "--symbol",
            "quotient",
            "--alpha",
            "1.0",
            "--mu",
            "16.0",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("compensated sup Q"), "{stdout}");
}
