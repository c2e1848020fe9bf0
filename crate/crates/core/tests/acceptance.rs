//! Acceptance suite: one test per verification criterion. Each prints a
//! single PASS/FAIL line (run with `--nocapture` to see details) and fails
//! the build when a criterion does not hold at its pinned tolerance.

use bessel_riesz::acceptance::{self, CriterionReport};

fn assert_criterion(report: CriterionReport) {
    println!("{}", report.summary_line());
    for line in &report.details {
        println!("    {line}");
    }
    assert!(
        report.passed,
        "criterion {} failed:\n{}",
        report.id,
        report.details.join("\n")
    );
}

#[test]
fn criterion_01_special_functions() {
    assert_criterion(acceptance::criterion_01_special());
}

#[test]
fn criterion_02_two_path_oracle() {
    assert_criterion(acceptance::criterion_02_two_path());
}

#[test]
fn criterion_03_equivalence_ratios() {
    assert_criterion(acceptance::criterion_03_equivalence());
}

#[test]
fn criterion_04_interpolation_envelope() {
    assert_criterion(acceptance::criterion_04_interpolation_envelope());
}

#[test]
fn criterion_05_log_envelope() {
    assert_criterion(acceptance::criterion_05_log_envelope());
}

#[test]
fn criterion_06_lipschitz_rates() {
    assert_criterion(acceptance::criterion_06_rates());
}

#[test]
fn criterion_07_saturation() {
    assert_criterion(acceptance::criterion_07_saturation());
}

#[test]
fn criterion_08_kernel_decay() {
    assert_criterion(acceptance::criterion_08_kernel_decay());
}

#[test]
fn criterion_09_hormander_condition() {
    assert_criterion(acceptance::criterion_09_hormander());
}

#[test]
fn criterion_10_localization() {
    assert_criterion(acceptance::criterion_10_localization());
}

#[test]
fn criterion_11_besov_ratio() {
    assert_criterion(acceptance::criterion_11_besov());
}

#[test]
fn criterion_12_maximal_domination() {
    assert_criterion(acceptance::criterion_12_maximal_domination());
}

#[test]
fn criterion_13_log_rate() {
    assert_criterion(acceptance::criterion_13_log_rate());
}

#[test]
fn criterion_14_k_functional() {
    assert_criterion(acceptance::criterion_14_k_functional());
}
