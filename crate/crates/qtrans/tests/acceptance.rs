//! Acceptance gate: each test below covers one acceptance criterion and
//! prints a single PASS/FAIL line (visible with `--nocapture`, and always on
//! failure), followed by the first mismatch details when something breaks.

use std::time::{Duration, Instant};

use qtrans::verify::{
    suite_appendix, suite_bijection, suite_identities, suite_involution, suite_named,
    suite_oracle, Check,
};

fn gate(criterion: &str, checks: &[Check], elapsed: Duration, budget: Option<Duration>) {
    let failed: Vec<&Check> = checks.iter().filter(|c| !c.passed).collect();
    let in_budget = budget.map_or(true, |b| elapsed <= b);
    let ok = failed.is_empty() && in_budget;
    println!(
        "{}: {criterion} ({} checks in {elapsed:.2?})",
        if ok { "PASS" } else { "FAIL" },
        checks.len(),
    );
    for c in &failed {
        println!("  failed check `{}`: {}", c.name, c.detail);
    }
    if !in_budget {
        println!("  exceeded the time budget of {:?}", budget.unwrap());
    }
    assert!(ok, "{criterion}: {} failed checks", failed.len());
}

#[test]
fn criterion_1_reference_tables() {
    let start = Instant::now();
    let checks = suite_appendix().expect("reference-table suite runs");
    gate(
        "criterion 1: all degree-four matrices match the reference tables",
        &checks,
        start.elapsed(),
        Some(Duration::from_secs(5)),
    );
}

#[test]
fn criterion_2_documented_values() {
    let start = Instant::now();
    let checks = suite_named().expect("named-value suite runs");
    gate(
        "criterion 2: documented entries, rows and worked statistics match",
        &checks,
        start.elapsed(),
        None,
    );
}

#[test]
fn criterion_3_identity_suite() {
    let start = Instant::now();
    let checks = suite_identities(5).expect("identity suite runs");
    gate(
        "criterion 3: inverse pairs, factorizations and specializations hold through n = 5",
        &checks,
        start.elapsed(),
        Some(Duration::from_secs(120)),
    );
}

#[test]
fn criterion_4_bijection_suite() {
    let start = Instant::now();
    let checks = suite_bijection(5).expect("bijection suite runs");
    gate(
        "criterion 4: standardization round-trips and route agreement on shapes up to 5 cells",
        &checks,
        start.elapsed(),
        None,
    );
}

#[test]
fn criterion_5_oracle_suite() {
    let start = Instant::now();
    let checks = suite_oracle(4).expect("oracle suite runs");
    gate(
        "criterion 5: formula-built rows match the brute-force oracle through n = 4",
        &checks,
        start.elapsed(),
        Some(Duration::from_secs(60)),
    );
}

#[test]
fn criterion_6_involution_suite() {
    let start = Instant::now();
    let checks = suite_involution(6).expect("involution suite runs");
    gate(
        "criterion 6: the refinement pairing is sign-reversing and the sums telescope through n = 6",
        &checks,
        start.elapsed(),
        None,
    );
}
