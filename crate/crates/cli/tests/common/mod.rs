//! Shared golden-test harness: recorded invocations of the `gmc` binary,
//! compared byte-for-byte against checked-in transcripts. Each case runs
//! twice to also assert determinism. Setting `GMC_BLESS=1` rewrites the
//! transcripts.

use std::path::{Path, PathBuf};
use std::process::Command;

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub exit: i32,
}

pub fn cases() -> Vec<Case> {
    vec![
        Case {
            name: "check_devices",
            args: &["check", "tests/fixtures/devices.gmc"],
            exit: 1,
        },
        Case { name: "check_rw", args: &["check", "tests/fixtures/rw.gmc"], exit: 1 },
        Case {
            name: "check_stairs_two",
            args: &["check", "tests/fixtures/stairs_two.gmc"],
            exit: 1,
        },
        Case {
            name: "normalize_staged",
            args: &["normalize", "tests/fixtures/devices.gmc", "staged"],
            exit: 0,
        },
        Case {
            name: "normalize_pure_first",
            args: &["normalize", "tests/fixtures/devices.gmc", "pure_first"],
            exit: 0,
        },
        Case {
            name: "equal_two_stairs",
            args: &[
                "equal",
                "tests/fixtures/stairs_two.gmc",
                "fg",
                "gf",
                "--grade",
                "1",
                "--oracle",
            ],
            exit: 1,
        },
        Case {
            name: "equal_two_pure",
            args: &[
                "equal",
                "tests/fixtures/stairs_two.gmc",
                "pg",
                "gp",
                "--grade",
                "1",
                "--oracle",
            ],
            exit: 0,
        },
        Case {
            name: "equal_nat_at_two",
            args: &[
                "equal",
                "tests/fixtures/stairs_nat.gmc",
                "fg",
                "gf",
                "--grade",
                "2",
                "--oracle",
            ],
            exit: 0,
        },
        Case {
            name: "equal_nat_at_one",
            args: &[
                "equal",
                "tests/fixtures/stairs_nat.gmc",
                "fg",
                "gf",
                "--grade",
                "1",
                "--oracle",
            ],
            exit: 1,
        },
        Case {
            name: "grades_par_ok",
            args: &["grades", "tests/fixtures/devices.gmc", "par_ok"],
            exit: 0,
        },
        Case {
            name: "gcompose_join",
            args: &[
                "gcompose",
                "tests/fixtures/natmax.gmc",
                "step2",
                "step3",
                "--op",
                "join",
            ],
            exit: 0,
        },
        Case {
            name: "gcompose_plus",
            args: &[
                "gcompose",
                "tests/fixtures/natmax.gmc",
                "step2",
                "step3",
                "--op",
                "plus",
            ],
            exit: 0,
        },
        Case {
            name: "lawcheck_three",
            args: &["lawcheck-pcm", "--kind", "three"],
            exit: 0,
        },
        Case {
            name: "lawcheck_three_separation",
            args: &["lawcheck-pcm", "--kind", "three", "--separation"],
            exit: 1,
        },
        Case {
            name: "lawcheck_interval_effect",
            args: &[
                "lawcheck-pcm",
                "--kind",
                "interval 1/1",
                "--effect-algebra",
                "--budget",
                "2000",
            ],
            exit: 0,
        },
        Case {
            name: "lawcheck_model_rz",
            args: &["lawcheck-model", "tests/fixtures/rz.model"],
            exit: 0,
        },
        Case {
            name: "lawcheck_model_inter_mutant",
            args: &["lawcheck-model", "tests/fixtures/inter_mutant.model"],
            exit: 1,
        },
        Case {
            name: "lawcheck_model_braid_mutant",
            args: &["lawcheck-model", "tests/fixtures/braid_mutant.model"],
            exit: 1,
        },
        Case {
            name: "coreflect_three_scalar",
            args: &["coreflect", "tests/fixtures/three_scalar.model"],
            exit: 0,
        },
        Case {
            name: "convolve_example",
            args: &[
                "convolve",
                "tests/fixtures/example_f.cop",
                "tests/fixtures/example_f.cop",
            ],
            exit: 0,
        },
        Case {
            name: "roundtrip_rz",
            args: &["roundtrip", "tests/fixtures/rz.model"],
            exit: 0,
        },
        Case {
            name: "roundtrip_two_scalar",
            args: &["roundtrip", "tests/fixtures/two_scalar.model"],
            exit: 0,
        },
        Case {
            name: "check_parse_error",
            args: &["check", "tests/fixtures/parse_error.gmc"],
            exit: 2,
        },
    ]
}

fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn golden_path(name: &str) -> PathBuf {
    manifest_dir().join("tests/golden").join(format!("{name}.txt"))
}

pub fn run_once(case: &Case) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_gmc"))
        .args(case.args)
        .current_dir(manifest_dir())
        .env("GMC_SEED", "1")
        .output()
        .expect("binary runs");
    let mut text = String::from_utf8_lossy(&out.stdout).into_owned();
    text.push_str(&String::from_utf8_lossy(&out.stderr));
    (text, out.status.code().unwrap_or(-1))
}

/// Returns an error string when the case mismatches, `Ok` otherwise.
pub fn check_case(case: &Case) -> Result<(), String> {
    let (out1, code1) = run_once(case);
    let (out2, code2) = run_once(case);
    if out1 != out2 || code1 != code2 {
        return Err(format!("{}: output not deterministic across runs", case.name));
    }
    if code1 != case.exit {
        return Err(format!(
            "{}: exit code {code1}, expected {} — output:\n{out1}",
            case.name, case.exit
        ));
    }
    let path = golden_path(case.name);
    if std::env::var("GMC_BLESS").is_ok() {
        std::fs::write(&path, &out1).expect("write golden");
        return Ok(());
    }
    let expected = std::fs::read_to_string(&path)
        .map_err(|e| format!("{}: missing golden file {}: {e}", case.name, path.display()))?;
    if out1 != expected {
        return Err(format!(
            "{}: output differs from {}:\n--- got ---\n{out1}\n--- want ---\n{expected}",
            case.name,
            path.display()
        ));
    }
    Ok(())
}

#[allow(dead_code)]
pub fn fixture(name: &str) -> PathBuf {
    manifest_dir().join("tests/fixtures").join(name)
}

#[allow(dead_code)]
pub fn assert_path_exists(p: &Path) {
    assert!(p.exists(), "missing {}", p.display());
}
