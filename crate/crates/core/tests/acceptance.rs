//! One test per acceptance criterion; each prints a single PASS/FAIL line.

use std::io::Write;

use qwsed_core::reproduce::criterion;

fn assert_criterion(id: usize) {
    let report = criterion(id).expect("criterion is registered");
    // Written to the raw handle so the line survives output capture.
    let _ = writeln!(std::io::stderr(), "{}", report.line());
    for c in &report.checks {
        println!("    [{}] {}: {}", if c.passed { "ok" } else { "FAIL" }, c.name, c.detail);
    }
    let failed: Vec<String> = report.failures().map(|c| format!("{}: {}", c.name, c.detail)).collect();
    assert!(failed.is_empty(), "criterion {id} failed:\n{}", failed.join("\n"));
}

#[test]
fn criterion_01_complete_graphs() {
    assert_criterion(1);
}

#[test]
fn criterion_02_paths() {
    assert_criterion(2);
}

#[test]
fn criterion_03_even_cycles() {
    assert_criterion(3);
}

#[test]
fn criterion_04_subdivided_stars() {
    assert_criterion(4);
}

#[test]
fn criterion_05_weighted_odd_path() {
    assert_criterion(5);
}

#[test]
fn criterion_06_weighted_c4k() {
    assert_criterion(6);
}

#[test]
fn criterion_07_cocktail_parties_and_doubles() {
    assert_criterion(7);
}

#[test]
fn criterion_08_products() {
    assert_criterion(8);
}

#[test]
fn criterion_09_shrikhande_and_doob() {
    assert_criterion(9);
}

#[test]
fn criterion_10_pendant_path() {
    assert_criterion(10);
}

#[test]
fn criterion_11_matchings_and_subdivisions() {
    assert_criterion(11);
}

#[test]
fn criterion_12_property_suites() {
    assert_criterion(12);
}

#[test]
fn criterion_13_five_eigenvalue_example() {
    assert_criterion(13);
}
