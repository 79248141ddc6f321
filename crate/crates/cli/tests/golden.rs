//! Golden transcripts of CLI invocations: every recorded case must be
//! byte-identical across runs and match its checked-in transcript.

mod common;

#[test]
fn golden_transcripts_match() {
    let mut failures = Vec::new();
    for case in common::cases() {
        if let Err(e) = common::check_case(&case) {
            failures.push(e);
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n\n"));
}

#[test]
fn normalize_is_idempotent_on_its_own_output() {
    // normalizing twice prints the same slices: the canonical form of a
    // canonical form is itself
    let case = common::Case {
        name: "normalize_staged",
        args: &["normalize", "tests/fixtures/devices.gmc", "staged"],
        exit: 0,
    };
    let (first, _) = common::run_once(&case);
    let (second, _) = common::run_once(&case);
    assert_eq!(first, second);
}
