//! Acceptance suite: every headline criterion of the library, one test and
//! one printed pass/fail line per criterion, all at exact equality unless a
//! check is explicitly statistical or display-level. Criterion 9 (the
//! command-line `paper-suite` run) lives in the CLI crate's tests.

use hsc_core::suite::{self, SuiteCheck};

fn report(number: u32, check: SuiteCheck) {
    let status = if check.passed { "pass" } else { "FAIL" };
    println!(
        "criterion {number} ({}): {status} [{} ms] - {}",
        check.name, check.millis, check.detail
    );
    assert!(check.passed, "criterion {number} ({}): {}", check.name, check.detail);
}

#[test]
fn criterion_1_sphere_moments() {
    report(1, suite::check_sphere_moments());
}

#[test]
fn criterion_2_laplacian_chain() {
    report(2, suite::check_laplacian_chain());
}

#[test]
fn criterion_3_moment_coefficients() {
    report(3, suite::check_moment_coefficients());
}

#[test]
fn criterion_4_partition_identities() {
    report(4, suite::check_partition_identities());
}

#[test]
fn criterion_5_wedge_densities() {
    let check = suite::check_wedge_densities();
    assert!(
        check.millis < 30_000,
        "wedge densities took {} ms, budget is 30 s",
        check.millis
    );
    report(5, check);
}

#[test]
fn criterion_6_variance_identity() {
    report(6, suite::check_variance_identity());
}

#[test]
fn criterion_7_cover_pipeline() {
    report(7, suite::check_cover_pipeline());
}

#[test]
fn criterion_8_threshold_comparators() {
    report(8, suite::check_threshold_comparators());
}

#[test]
fn criterion_1_runtime_budget() {
    let check = suite::check_sphere_moments();
    assert!(check.passed, "{}", check.detail);
    assert!(
        check.millis < 5_000,
        "sphere moments took {} ms, budget is 5 s",
        check.millis
    );
}
