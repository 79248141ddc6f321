//! Command implementations. Every command prints deterministic,
//! line-oriented output on stdout and returns a process exit code:
//! 0 for success, 1 for a negative verdict (inequality, law failure,
//! elaboration error), 2 for usage, parse, or I/O errors.

use std::fs;

use gmc_core::acceptance;
use gmc_core::convolution::{
    check_lax_presentation, check_promonoidal_laws, convolve, format as cop_format,
    graded_to_lax, lax_to_graded, promonoidal_from_pcm,
};
use gmc_core::finmodel::{
    check_axioms, check_graded_functor, check_symmetric, coreflect, from_effectful, load_model,
    save_model, to_effectful,
};
use gmc_core::freecat::equal_oracle;
use gmc_core::globalcat::{check_upper_bounding, global_compose, GlobalMorphism, UpperBoundingOp};
use gmc_core::pcm::{check_effect_algebra, check_pcm_laws, check_separation, syntax, Pcm};
use gmc_core::rng::DEFAULT_SEED;

use crate::elaborate::elaborate_term;
use crate::source::{parse, SourceDocument};

pub const USAGE: &str = "\
gmc - graded monoidal category checker

USAGE:
  gmc check <file.gmc>
  gmc normalize <file.gmc> <term>
  gmc equal <file.gmc> <t1> <t2> --grade <g> [--oracle] [--budget N]
  gmc grades <file.gmc> <term> [--at <g>]
  gmc gcompose <file.gmc> <t1> <t2> --op {join|plus|table:<file>}
  gmc lawcheck-pcm --kind <descriptor> [--separation] [--effect-algebra]
                   [--budget N] [--seed N]
  gmc lawcheck-model <file.model>
  gmc coreflect <file.model> [-o <out.model>]
  gmc convolve <F.cop> <G.cop>
  gmc roundtrip <file.model>
  gmc selftest [--seed N] [--quick]

Exit codes: 0 success, 1 negative verdict, 2 usage or parse error.
Randomized checks default to budget 10000 and the fixed seed
0x9e3779b97f4a7c15; the GMC_SEED environment variable overrides the
default seed and --seed overrides both.
";

pub struct Args {
    positional: Vec<String>,
    flags: Vec<(String, Option<String>)>,
}

impl Args {
    pub fn parse(raw: &[String]) -> Args {
        let mut positional = Vec::new();
        let mut flags = Vec::new();
        let mut i = 0;
        while i < raw.len() {
            let a = &raw[i];
            if let Some(name) = a.strip_prefix("--") {
                let takes_value = matches!(
                    name,
                    "grade" | "budget" | "seed" | "op" | "at" | "kind"
                );
                if takes_value && i + 1 < raw.len() {
                    flags.push((name.to_string(), Some(raw[i + 1].clone())));
                    i += 2;
                    continue;
                }
                flags.push((name.to_string(), None));
            } else if a == "-o" && i + 1 < raw.len() {
                flags.push(("out".to_string(), Some(raw[i + 1].clone())));
                i += 2;
                continue;
            } else {
                positional.push(a.clone());
            }
            i += 1;
        }
        Args { positional, flags }
    }

    fn flag(&self, name: &str) -> Option<&Option<String>> {
        self.flags.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    fn has(&self, name: &str) -> bool {
        self.flag(name).is_some()
    }

    fn value(&self, name: &str) -> Option<&str> {
        self.flag(name).and_then(|v| v.as_deref())
    }

    fn seed(&self) -> u64 {
        if let Some(v) = self.value("seed") {
            return v.parse().unwrap_or(DEFAULT_SEED);
        }
        if let Ok(v) = std::env::var("GMC_SEED") {
            return v.parse().unwrap_or(DEFAULT_SEED);
        }
        DEFAULT_SEED
    }

    fn budget(&self, default: usize) -> usize {
        self.value("budget").and_then(|v| v.parse().ok()).unwrap_or(default)
    }
}

fn read_file(path: &str) -> Result<String, i32> {
    fs::read_to_string(path).map_err(|e| {
        println!("error[E-IO] cannot read {path}: {e}");
        2
    })
}

fn load_doc(path: &str) -> Result<SourceDocument, i32> {
    let text = read_file(path)?;
    parse(&text).map_err(|d| {
        println!("{d}");
        2
    })
}

pub fn run(cmd: &str, args: &Args) -> i32 {
    match cmd {
        "check" => cmd_check(args),
        "normalize" => cmd_normalize(args),
        "equal" => cmd_equal(args),
        "grades" => cmd_grades(args),
        "gcompose" => cmd_gcompose(args),
        "lawcheck-pcm" => cmd_lawcheck_pcm(args),
        "lawcheck-model" => cmd_lawcheck_model(args),
        "coreflect" => cmd_coreflect(args),
        "convolve" => cmd_convolve(args),
        "roundtrip" => cmd_roundtrip(args),
        "selftest" => cmd_selftest(args),
        "help" | "--help" | "-h" => {
            print!("{USAGE}");
            0
        }
        other => {
            println!("error[E-USAGE] unknown command {other}");
            print!("{USAGE}");
            2
        }
    }
}

fn cmd_check(args: &Args) -> i32 {
    let [path] = args.positional.as_slice() else {
        println!("error[E-USAGE] check expects one file");
        return 2;
    };
    let doc = match load_doc(path) {
        Ok(d) => d,
        Err(code) => return code,
    };
    let mut failed = false;
    for (name, _) in &doc.terms {
        match elaborate_term(&doc, name) {
            Ok(m) => println!("OK {name} : {m}"),
            Err(d) => {
                failed = true;
                println!("{d}");
            }
        }
    }
    if failed {
        1
    } else {
        0
    }
}

fn cmd_normalize(args: &Args) -> i32 {
    let [path, term] = args.positional.as_slice() else {
        println!("error[E-USAGE] normalize expects a file and a term name");
        return 2;
    };
    let doc = match load_doc(path) {
        Ok(d) => d,
        Err(code) => return code,
    };
    match elaborate_term(&doc, term) {
        Ok(m) => {
            let canon = m.canonical_form();
            println!("{term} : {canon}");
            print!("{}", canon.render_slices());
            0
        }
        Err(d) => {
            println!("{d}");
            1
        }
    }
}

fn cmd_equal(args: &Args) -> i32 {
    let [path, t1, t2] = args.positional.as_slice() else {
        println!("error[E-USAGE] equal expects a file and two term names");
        return 2;
    };
    let Some(grade_lit) = args.value("grade") else {
        println!("error[E-USAGE] equal needs --grade");
        return 2;
    };
    let doc = match load_doc(path) {
        Ok(d) => d,
        Err(code) => return code,
    };
    let grade = match doc.pcm.parse_grade(grade_lit) {
        Ok(g) => g,
        Err(e) => {
            println!("error[E-PARSE] bad grade literal: {e}");
            return 2;
        }
    };
    let (m1, m2) = match (elaborate_term(&doc, t1), elaborate_term(&doc, t2)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(d), _) | (_, Err(d)) => {
            println!("{d}");
            return 1;
        }
    };
    let verdict = match m1.equal_at(&m2, &grade) {
        Ok(v) => v,
        Err(e) => {
            println!("error[E-TYPE] {e}");
            return 1;
        }
    };
    if args.has("oracle") {
        let budget = args.budget(500_000);
        match equal_oracle(&m1, &m2, &grade, budget) {
            Ok(slow) if slow == verdict => println!("oracle agrees"),
            Ok(slow) => {
                println!("error[E-INTERNAL] oracle disagrees: {slow} vs {verdict}");
                return 2;
            }
            Err(e) => {
                println!("error[E-BUDGET] {e}");
                return 2;
            }
        }
    }
    if verdict {
        println!("EQUAL at grade {grade}");
        0
    } else {
        println!("NOT EQUAL at grade {grade}");
        1
    }
}

fn cmd_grades(args: &Args) -> i32 {
    let [path, term] = args.positional.as_slice() else {
        println!("error[E-USAGE] grades expects a file and a term name");
        return 2;
    };
    let doc = match load_doc(path) {
        Ok(d) => d,
        Err(code) => return code,
    };
    let m = match elaborate_term(&doc, term) {
        Ok(m) => m,
        Err(d) => {
            println!("{d}");
            return 1;
        }
    };
    if let Some(lit) = args.value("at") {
        let g = match doc.pcm.parse_grade(lit) {
            Ok(g) => g,
            Err(e) => {
                println!("error[E-PARSE] bad grade literal: {e}");
                return 2;
            }
        };
        return match m.admissible_at(&g) {
            Ok(true) => {
                println!("ADMISSIBLE at grade {g}");
                0
            }
            Ok(false) => {
                println!("NOT ADMISSIBLE at grade {g}");
                1
            }
            Err(e) => {
                println!("error[E-GRADE] {e}");
                2
            }
        };
    }
    match m.valid_grades() {
        Ok(grades) => {
            for g in grades {
                println!("{g}");
            }
            0
        }
        Err(e) => {
            println!("error[E-GRADE] {e}");
            2
        }
    }
}

fn parse_op(doc: &SourceDocument, spec: &str) -> Result<UpperBoundingOp, String> {
    match spec {
        "join" => Ok(UpperBoundingOp::Join),
        "plus" => Ok(UpperBoundingOp::Plus),
        other => match other.strip_prefix("table:") {
            Some(path) => {
                let text =
                    fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
                let carrier = doc
                    .pcm
                    .carrier()
                    .map_err(|e| format!("table ops need a finite PCM: {e}"))?;
                let n = carrier.len();
                let mut table = vec![vec![usize::MAX; n]; n];
                for (ix, raw) in text.lines().enumerate() {
                    let line = raw.trim();
                    if line.is_empty() || line.starts_with('#') {
                        continue;
                    }
                    let (lhs, rhs) = line
                        .split_once('=')
                        .ok_or_else(|| format!("line {}: expected <a> <b> = <c>", ix + 1))?;
                    let toks: Vec<&str> = lhs.split_whitespace().collect();
                    if toks.len() != 2 {
                        return Err(format!("line {}: expected <a> <b> = <c>", ix + 1));
                    }
                    let find = |lit: &str| -> Result<usize, String> {
                        let g = doc
                            .pcm
                            .parse_grade(lit)
                            .map_err(|e| format!("line {}: {e}", ix + 1))?;
                        carrier
                            .iter()
                            .position(|c| *c == g)
                            .ok_or_else(|| format!("line {}: grade outside carrier", ix + 1))
                    };
                    table[find(toks[0])?][find(toks[1])?] = find(rhs.trim())?;
                }
                if table.iter().any(|r| r.iter().any(|&v| v == usize::MAX)) {
                    return Err("op table is incomplete".to_string());
                }
                Ok(UpperBoundingOp::Table(table))
            }
            None => Err(format!("unknown op {other}; expected join, plus, or table:<file>")),
        },
    }
}

fn cmd_gcompose(args: &Args) -> i32 {
    let [path, t1, t2] = args.positional.as_slice() else {
        println!("error[E-USAGE] gcompose expects a file and two term names");
        return 2;
    };
    let Some(op_spec) = args.value("op") else {
        println!("error[E-USAGE] gcompose needs --op {{join|plus|table:<file>}}");
        return 2;
    };
    let doc = match load_doc(path) {
        Ok(d) => d,
        Err(code) => return code,
    };
    let op = match parse_op(&doc, op_spec) {
        Ok(op) => op,
        Err(e) => {
            println!("error[E-USAGE] {e}");
            return 2;
        }
    };
    let report = check_upper_bounding(&doc.pcm, &op, args.budget(2000), args.seed());
    if !report.passed() {
        println!("error[E-OP] the operation is not upper-bounding:");
        print!("{report}");
        return 2;
    }
    let (m1, m2) = match (elaborate_term(&doc, t1), elaborate_term(&doc, t2)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(d), _) | (_, Err(d)) => {
            println!("{d}");
            return 1;
        }
    };
    match global_compose(&GlobalMorphism::new(m1), &GlobalMorphism::new(m2), &op) {
        Ok(result) => {
            let body = result.body().canonical_form();
            println!("{} :: {}", result.grade(), body.render_compact());
            0
        }
        Err(e) => {
            println!("error[E-TYPE] {e}");
            1
        }
    }
}

fn cmd_lawcheck_pcm(args: &Args) -> i32 {
    let pcm: Pcm = if let Some(kind) = args.value("kind") {
        match syntax::parse_pcm(kind) {
            Ok(p) => p,
            Err(e) => {
                println!("error[E-PARSE] {e}");
                return 2;
            }
        }
    } else if let [path] = args.positional.as_slice() {
        match load_doc(path) {
            Ok(d) => d.pcm,
            Err(code) => return code,
        }
    } else {
        println!("error[E-USAGE] lawcheck-pcm expects --kind <descriptor> or a .gmc file");
        return 2;
    };
    let budget = args.budget(10_000);
    let seed = args.seed();
    let mut report = check_pcm_laws(&pcm, budget, seed);
    if args.has("separation") {
        report.merge(check_separation(&pcm, budget, seed));
    }
    if args.has("effect-algebra") {
        match check_effect_algebra(&pcm, budget, seed) {
            Ok(r) => report.merge(r),
            Err(e) => {
                println!("error[E-GRADE] {e}");
                return 2;
            }
        }
    }
    print!("{report}");
    if report.passed() {
        0
    } else {
        1
    }
}

fn cmd_lawcheck_model(args: &Args) -> i32 {
    let [path] = args.positional.as_slice() else {
        println!("error[E-USAGE] lawcheck-model expects one model file");
        return 2;
    };
    let text = match read_file(path) {
        Ok(t) => t,
        Err(code) => return code,
    };
    let model = match load_model(&text) {
        Ok(m) => m,
        Err(e) => {
            println!("error[E-MODEL] {e}");
            return 2;
        }
    };
    let mut report = check_axioms(&model);
    if model.has_braiding() {
        match check_symmetric(&model) {
            Ok(r) => report.merge(r),
            Err(e) => {
                println!("error[E-MODEL] {e}");
                return 2;
            }
        }
    }
    print!("{report}");
    if report.passed() {
        0
    } else {
        1
    }
}

fn cmd_coreflect(args: &Args) -> i32 {
    let [path] = args.positional.as_slice() else {
        println!("error[E-USAGE] coreflect expects one model file");
        return 2;
    };
    let text = match read_file(path) {
        Ok(t) => t,
        Err(code) => return code,
    };
    let model = match load_model(&text) {
        Ok(m) => m,
        Err(e) => {
            println!("error[E-MODEL] {e}");
            return 2;
        }
    };
    let (rc, counit) = match coreflect(&model) {
        Ok(pair) => pair,
        Err(e) => {
            println!("error[E-MODEL] {e}");
            return 2;
        }
    };
    let counit_report = check_graded_functor(&counit);
    let out_text = save_model(&rc);
    if let Some(out) = args.value("out") {
        if let Err(e) = fs::write(out, &out_text) {
            println!("error[E-IO] cannot write {out}: {e}");
            return 2;
        }
    } else {
        print!("{out_text}");
    }
    for item in &counit_report.items {
        match &item.counterexample {
            None => println!("COUNIT {} PASS", item.name),
            Some(c) => println!("COUNIT {} FAIL [{}]", item.name, c),
        }
    }
    if counit_report.passed() {
        0
    } else {
        1
    }
}

fn cmd_convolve(args: &Args) -> i32 {
    let [fpath, gpath] = args.positional.as_slice() else {
        println!("error[E-USAGE] convolve expects two copresheaf files");
        return 2;
    };
    let load = |path: &str| -> Result<gmc_core::convolution::Copresheaf, i32> {
        let text = read_file(path)?;
        cop_format::load_copresheaf(&text).map_err(|e| {
            println!("error[E-COPRESHEAF] {e}");
            2
        })
    };
    let f = match load(fpath) {
        Ok(c) => c,
        Err(code) => return code,
    };
    let g = match load(gpath) {
        Ok(c) => c,
        Err(code) => return code,
    };
    match convolve(&f, &g) {
        Ok(conv) => {
            print!("{}", conv.render_classes(&f, &g));
            0
        }
        Err(e) => {
            println!("error[E-COPRESHEAF] {e}");
            2
        }
    }
}

fn cmd_roundtrip(args: &Args) -> i32 {
    let [path] = args.positional.as_slice() else {
        println!("error[E-USAGE] roundtrip expects one model file");
        return 2;
    };
    let text = match read_file(path) {
        Ok(t) => t,
        Err(code) => return code,
    };
    let model = match load_model(&text) {
        Ok(m) => m,
        Err(e) => {
            println!("error[E-MODEL] {e}");
            return 2;
        }
    };
    let mut ok = true;

    // promonoidal encoding of the grading PCM
    match promonoidal_from_pcm(model.pcm()) {
        Ok(b) => {
            let passed = check_promonoidal_laws(&b).passed();
            ok &= passed;
            println!("PROMONOIDAL {}", if passed { "PASS" } else { "FAIL" });
        }
        Err(e) => {
            println!("error[E-MODEL] {e}");
            return 2;
        }
    }

    match graded_to_lax(&model) {
        Ok(pres) => {
            let report = check_lax_presentation(&pres);
            println!("LAX-CHECKLIST {}", if report.passed() { "PASS" } else { "FAIL" });
            ok &= report.passed();
            match lax_to_graded(&pres) {
                Ok(back) => {
                    let same = back == model.without_braiding();
                    println!("LAX-ROUNDTRIP {}", if same { "PASS" } else { "FAIL" });
                    ok &= same;
                }
                Err(e) => {
                    println!("LAX-ROUNDTRIP FAIL [{e}]");
                    ok = false;
                }
            }
        }
        Err(e) => {
            println!("error[E-MODEL] {e}");
            return 2;
        }
    }

    if model.pcm() == &Pcm::two() {
        match to_effectful(&model) {
            Ok(eff) => {
                let passed = eff.check().passed();
                println!("EFF-LAWS {}", if passed { "PASS" } else { "FAIL" });
                ok &= passed;
                match from_effectful(&eff) {
                    Ok(back) => {
                        let same = back == model;
                        println!("EFF-ROUNDTRIP {}", if same { "PASS" } else { "FAIL" });
                        ok &= same;
                    }
                    Err(e) => {
                        println!("EFF-ROUNDTRIP FAIL [{e}]");
                        ok = false;
                    }
                }
            }
            Err(e) => {
                println!("EFF-LAWS FAIL [{e}]");
                ok = false;
            }
        }
    }
    if ok {
        0
    } else {
        1
    }
}

fn cmd_selftest(args: &Args) -> i32 {
    let seed = args.seed();
    let results = if args.has("quick") {
        vec![
            acceptance::criterion_1_pcm_laws(1000, seed),
            acceptance::criterion_2_classification(1000, seed),
            acceptance::criterion_3_axiom_suite(50, seed),
            acceptance::criterion_4_oracle_agreement(100, seed),
            acceptance::criterion_5_interchange(100, seed),
            acceptance::criterion_6_effectful_roundtrip(),
            acceptance::criterion_7_coreflection(),
            acceptance::criterion_8_global(100, seed),
            acceptance::criterion_9_convolution(seed),
        ]
    } else {
        acceptance::run_all(seed)
    };
    let mut ok = true;
    for r in &results {
        println!("{}", r.line());
        for d in &r.details {
            println!("  {d}");
        }
        ok &= r.passed;
    }
    if ok {
        0
    } else {
        1
    }
}
