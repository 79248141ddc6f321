//! parse . print is the identity on canonically printed documents.

use std::fs;
use std::path::PathBuf;
use std::process::Command;

fn fixture(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name);
    fs::read_to_string(p).expect("fixture readable")
}

// the parser lives in the binary crate; pull the module in by path
#[path = "../src/source.rs"]
mod source;

#[test]
fn canonical_print_is_a_parse_fixpoint() {
    for name in ["devices.gmc", "rw.gmc", "stairs_two.gmc", "stairs_nat.gmc", "natmax.gmc"] {
        let doc = source::parse(&fixture(name)).expect("fixture parses");
        let canon = doc.render();
        let doc2 = source::parse(&canon).expect("canonical output parses");
        assert_eq!(doc2.render(), canon, "print . parse . print differs on {name}");
        assert_eq!(doc2.signature, doc.signature, "signature drifts on {name}");
    }
}

#[test]
fn rendered_documents_check_identically() {
    // running `check` on a rendered document gives the same verdicts as on
    // the original (for documents whose terms all elaborate)
    let dir = std::env::temp_dir();
    for name in ["stairs_nat.gmc", "natmax.gmc"] {
        let doc = source::parse(&fixture(name)).expect("fixture parses");
        let rendered_path = dir.join(format!("gmc_rendered_{name}"));
        fs::write(&rendered_path, doc.render()).expect("write rendered");

        let run = |path: &std::path::Path| {
            let out = Command::new(env!("CARGO_BIN_EXE_gmc"))
                .arg("check")
                .arg(path)
                .output()
                .expect("binary runs");
            (String::from_utf8_lossy(&out.stdout).into_owned(), out.status.code())
        };
        let original =
            PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name);
        assert_eq!(run(&original), run(&rendered_path), "check output drifts on {name}");
        let _ = fs::remove_file(rendered_path);
    }
}
