//! The acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line (visible with `cargo test -- --nocapture`). Criteria 1-9 run the
//! library-level suites at their stated sizes; criterion 10 runs the CLI
//! golden transcripts.

mod common;

use gmc_core::acceptance::{self, CriterionResult};
use gmc_core::rng::DEFAULT_SEED;

fn report(result: CriterionResult) {
    println!("{}", result.line());
    for d in &result.details {
        println!("  {d}");
    }
    assert!(result.passed, "{}", result.line());
}

fn timed<F: FnOnce() -> CriterionResult>(limit_secs: u64, run: F) -> CriterionResult {
    let start = std::time::Instant::now();
    let result = run();
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < limit_secs,
        "criterion {} exceeded its {limit_secs} s budget: {elapsed:?}",
        result.number
    );
    result
}

#[test]
fn acceptance_01_pcm_law_suite() {
    // exhaustive on finite kinds; >= 10^4 sampled triples on interval/nat
    report(timed(30, || acceptance::criterion_1_pcm_laws(10_000, DEFAULT_SEED)));
}

#[test]
fn acceptance_02_separation_effect_classification() {
    report(acceptance::criterion_2_classification(10_000, DEFAULT_SEED));
}

#[test]
fn acceptance_03_axiom_suite() {
    // 250 instances per axiom on each of the four signatures: >= 1000 per axiom
    report(timed(60, || acceptance::criterion_3_axiom_suite(250, DEFAULT_SEED)));
}

#[test]
fn acceptance_04_oracle_agreement() {
    // >= 500 random pairs of slice lists per fixture signature
    report(acceptance::criterion_4_oracle_agreement(500, DEFAULT_SEED));
}

#[test]
fn acceptance_05_interchange_lemma() {
    report(acceptance::criterion_5_interchange(500, DEFAULT_SEED));
}

#[test]
fn acceptance_06_effectful_roundtrip() {
    report(acceptance::criterion_6_effectful_roundtrip());
}

#[test]
fn acceptance_07_coreflection() {
    report(timed(120, acceptance::criterion_7_coreflection));
}

#[test]
fn acceptance_08_global_categories() {
    report(acceptance::criterion_8_global(500, DEFAULT_SEED));
}

#[test]
fn acceptance_09_convolution_suite() {
    report(timed(120, || acceptance::criterion_9_convolution(DEFAULT_SEED)));
}

#[test]
fn acceptance_10_cli_golden() {
    let mut failures = Vec::new();
    for case in common::cases() {
        if let Err(e) = common::check_case(&case) {
            failures.push(e);
        }
    }
    println!(
        "CRITERION 10 {} cli golden transcripts",
        if failures.is_empty() { "PASS" } else { "FAIL" }
    );
    assert!(failures.is_empty(), "{}", failures.join("\n\n"));
}
