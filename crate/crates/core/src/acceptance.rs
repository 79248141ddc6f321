//! The acceptance suite: one runnable check per criterion, shared between
//! the `selftest` CLI command and the integration test target. Criteria are
//! numbered; each returns a result with pass/fail and detail lines.

use crate::convolution::{
    check_convolution_coherence, check_lax_presentation, check_promonoidal_laws, graded_to_lax,
    lax_to_graded, promonoidal_from_pcm,
};
use crate::finmodel::{
    check_axioms, check_couniversal, check_graded_functor, check_interchange_lemma, coreflect,
    from_effectful, to_effectful,
};
use crate::fixtures::{self, pcm_fixtures};
use crate::freecat::{equal_oracle, random, FreeMorphism, Signature, Word};
use crate::globalcat::{
    check_upper_bounding, from_top, global_compose, global_tensor, quotient_equal, to_top,
    GlobalMorphism, UpperBoundingOp,
};
use crate::pcm::{check_effect_algebra, check_pcm_laws, check_separation, Grade, Pcm};
use crate::rng::Rng;

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub number: usize,
    pub name: String,
    pub passed: bool,
    pub details: Vec<String>,
}

impl CriterionResult {
    fn new(number: usize, name: &str) -> CriterionResult {
        CriterionResult { number, name: name.to_string(), passed: true, details: Vec::new() }
    }

    fn check(&mut self, passed: bool, detail: String) {
        if !passed {
            self.passed = false;
            self.details.push(format!("FAIL {detail}"));
        }
    }

    pub fn line(&self) -> String {
        format!(
            "CRITERION {:02} {} {}",
            self.number,
            if self.passed { "PASS" } else { "FAIL" },
            self.name
        )
    }
}

/// Criterion 1: the PCM law suite over every fixture; exhaustive for the
/// finite kinds, `budget` sampled triples for intervals and naturals.
pub fn criterion_1_pcm_laws(budget: usize, seed: u64) -> CriterionResult {
    let mut r = CriterionResult::new(1, "pcm law suite");
    for (name, pcm) in pcm_fixtures() {
        let report = check_pcm_laws(&pcm, budget, seed);
        r.check(report.passed(), format!("{name}: {:?}", report.failing()));
    }
    r
}

/// Criterion 2: separation/effect-algebra classification.
pub fn criterion_2_classification(budget: usize, seed: u64) -> CriterionResult {
    let mut r = CriterionResult::new(2, "separation and effect algebra classification");

    let powerset = Pcm::powerset(vec!["a", "b", "c", "d"]).expect("fixture");
    r.check(
        check_separation(&powerset, 0, seed).passed(),
        "powerset cancellativity".into(),
    );

    // every effect-algebra fixture is a separation algebra
    let interval = Pcm::interval(crate::rational::Rational::ONE).expect("fixture");
    let effect_algebras: Vec<(&str, Pcm)> = vec![
        ("two", Pcm::two()),
        ("powerset4", powerset),
        ("halves", fixtures::halves_table()),
        ("interval1", interval),
        (
            "product_two_two",
            Pcm::product(vec![Pcm::two(), Pcm::two()]).expect("fixture"),
        ),
    ];
    for (name, pcm) in effect_algebras {
        match check_effect_algebra(&pcm, budget, seed) {
            Ok(report) => r.check(report.passed(), format!("{name} effect algebra")),
            Err(e) => r.check(false, format!("{name} effect algebra: {e}")),
        }
        r.check(
            check_separation(&pcm, budget, seed).passed(),
            format!("{name} cancellativity"),
        );
    }

    let report = check_separation(&Pcm::nat_max(), budget, seed);
    let item = report.item("CANCELLATIVITY").expect("single item");
    r.check(!item.passed, "nat_max must fail cancellativity".into());
    r.check(
        item.counterexample.is_some(),
        "nat_max failure must carry a witness".into(),
    );
    r
}


fn rand_morphism(
    sig: &Signature,
    rng: &mut Rng,
    max_word: usize,
    ambient: Grade,
    max_slices: usize,
) -> Result<FreeMorphism, crate::freecat::TermError> {
    let dom = random::random_word(sig, rng, max_word);
    random::random_morphism_at(sig, rng, dom, ambient, max_slices)
}

fn draw_pair_with<F>(rng: &mut Rng, palette: &[Grade], pred: F) -> Option<(Grade, Grade)>
where
    F: Fn(&Grade, &Grade) -> bool,
{
    for _ in 0..64 {
        let a = rng.pick(palette).clone();
        let b = rng.pick(palette).clone();
        if pred(&a, &b) {
            return Some((a, b));
        }
    }
    None
}

/// Criterion 3: the five axiom families on random well-typed instances,
/// `per_sig` instances per axiom per fixture signature.
pub fn criterion_3_axiom_suite(per_sig: usize, seed: u64) -> CriterionResult {
    let mut r = CriterionResult::new(3, "free-category axiom suite");
    for (sig, palette) in fixtures::axiom_suite_signatures() {
        let pcm = sig.pcm().clone();
        let mut rng = Rng::new(seed);
        let name = format!("{}", pcm);

        // Reg-Act
        let mut done = 0;
        let mut draws = 0;
        while done < per_sig && draws < per_sig * 100 {
            draws += 1;
            let Some((a, b)) =
                draw_pair_with(&mut rng, &palette, |a, b| pcm.leq(a, b).unwrap_or(false))
            else {
                break;
            };
            let Some((_, c)) = draw_pair_with(&mut rng, &palette, |x, c| {
                x == &b && pcm.leq(&b, c).unwrap_or(false)
            }) else {
                continue;
            };
            let f = match rand_morphism(&sig, &mut rng, 3, a.clone(), 4) {
                Ok(f) => f,
                Err(_) => continue,
            };
            let via = f.regrade(&b).and_then(|m| m.regrade(&c));
            let direct = f.regrade(&c);
            let ok = match (via, direct) {
                (Ok(v), Ok(d)) => v.equal_at(&d, &c).unwrap_or(false),
                _ => false,
            };
            r.check(ok, format!("{name}: Reg-Act at {a} <= {b} <= {c}"));
            done += 1;
        }
        r.check(done >= per_sig, format!("{name}: Reg-Act instance count {done}"));

        // Reg-tensor
        let mut done = 0;
        let mut draws = 0;
        while done < per_sig && draws < per_sig * 200 {
            draws += 1;
            let Some((a, b)) = draw_pair_with(&mut rng, &palette, |a, b| {
                pcm.is_orthogonal(a, b).unwrap_or(false)
            }) else {
                break;
            };
            let Some((c, d)) = draw_pair_with(&mut rng, &palette, |c, d| {
                pcm.leq(&a, c).unwrap_or(false)
                    && pcm.leq(&b, d).unwrap_or(false)
                    && pcm.is_orthogonal(c, d).unwrap_or(false)
            }) else {
                continue;
            };
            let f = match rand_morphism(&sig, &mut rng, 2, a.clone(), 3) {
                Ok(f) => f,
                Err(_) => continue,
            };
            let g = match rand_morphism(&sig, &mut rng, 2, b.clone(), 3) {
                Ok(g) => g,
                Err(_) => continue,
            };
            let cd = pcm.add(&c, &d).expect("owned").expect("orthogonal");
            let lhs = f.tensor(&g).and_then(|t| t.regrade(&cd));
            let rhs = f
                .regrade(&c)
                .and_then(|fc| Ok((fc, g.regrade(&d)?)))
                .and_then(|(fc, gd)| fc.tensor(&gd));
            let ok = match (lhs, rhs) {
                (Ok(l), Ok(rr)) => l.equal_at(&rr, &cd).unwrap_or(false),
                _ => false,
            };
            r.check(ok, format!("{name}: Reg-tensor at {a},{b} -> {c},{d}"));
            done += 1;
        }
        r.check(done >= per_sig, format!("{name}: Reg-tensor instance count {done}"));

        // tensor unit and associativity
        let mut done = 0;
        let mut draws = 0;
        while done < per_sig && draws < per_sig * 200 {
            draws += 1;
            let a = rng.pick(&palette).clone();
            let f = match rand_morphism(&sig, &mut rng, 2, a.clone(), 3) {
                Ok(f) => f,
                Err(_) => continue,
            };
            let unit = FreeMorphism::identity(&sig, Word::empty(), pcm.zero()).expect("identity");
            let ok = f.tensor(&unit).map(|t| t == f).unwrap_or(false)
                && unit.tensor(&f).map(|t| t == f).unwrap_or(false);
            r.check(ok, format!("{name}: tensor unit at {a}"));

            // associativity on an orthogonal triple when one exists
            let Some((b, c)) = draw_pair_with(&mut rng, &palette, |b, c| {
                pcm.add(&a, b)
                    .ok()
                    .flatten()
                    .map(|ab| pcm.is_orthogonal(&ab, c).unwrap_or(false))
                    .unwrap_or(false)
            }) else {
                done += 1;
                continue;
            };
            let g = match rand_morphism(&sig, &mut rng, 2, b.clone(), 2) {
                Ok(g) => g,
                Err(_) => continue,
            };
            let h = match rand_morphism(&sig, &mut rng, 2, c.clone(), 2) {
                Ok(h) => h,
                Err(_) => continue,
            };
            let lhs = f.tensor(&g).and_then(|fg| fg.tensor(&h));
            let rhs = g.tensor(&h).and_then(|gh| f.tensor(&gh));
            let ok = match (lhs, rhs) {
                (Ok(l), Ok(rr)) => {
                    let grade = l.ambient_grade().clone();
                    l.equal_at(&rr, &grade).unwrap_or(false)
                }
                _ => false,
            };
            r.check(ok, format!("{name}: tensor associativity at {a},{b},{c}"));
            done += 1;
        }
        r.check(done >= per_sig, format!("{name}: tensor-unit-assoc instance count {done}"));

        // identity tensor
        for _ in 0..per_sig {
            let w1 = random::random_word(&sig, &mut rng, 2);
            let w2 = random::random_word(&sig, &mut rng, 2);
            let id1 = FreeMorphism::identity(&sig, w1.clone(), pcm.zero()).expect("identity");
            let id2 = FreeMorphism::identity(&sig, w2.clone(), pcm.zero()).expect("identity");
            let both = FreeMorphism::identity(&sig, w1.concat(&w2), pcm.zero()).expect("identity");
            let ok = id1.tensor(&id2).map(|t| t == both).unwrap_or(false);
            r.check(ok, format!("{name}: identity tensor"));
        }

        // interchange
        let mut done = 0;
        let mut draws = 0;
        while done < per_sig && draws < per_sig * 200 {
            draws += 1;
            let Some((a, b)) = draw_pair_with(&mut rng, &palette, |a, b| {
                pcm.is_orthogonal(a, b).unwrap_or(false)
            }) else {
                break;
            };
            let f = match rand_morphism(&sig, &mut rng, 2, a.clone(), 2) {
                Ok(f) => f,
                Err(_) => continue,
            };
            let h = match random::random_morphism_at(&sig, &mut rng, f.cod().clone(), a.clone(), 2)
            {
                Ok(h) => h,
                Err(_) => continue,
            };
            let g = match rand_morphism(&sig, &mut rng, 2, b.clone(), 2) {
                Ok(g) => g,
                Err(_) => continue,
            };
            let k = match random::random_morphism_at(&sig, &mut rng, g.cod().clone(), b.clone(), 2)
            {
                Ok(k) => k,
                Err(_) => continue,
            };
            let ab = pcm.add(&a, &b).expect("owned").expect("orthogonal");
            let lhs = f
                .tensor(&g)
                .and_then(|fg| Ok((fg, h.tensor(&k)?)))
                .and_then(|(fg, hk)| fg.compose(&hk));
            let rhs = f
                .compose(&h)
                .and_then(|fh| Ok((fh, g.compose(&k)?)))
                .and_then(|(fh, gk)| fh.tensor(&gk));
            let ok = match (lhs, rhs) {
                (Ok(l), Ok(rr)) => l.equal_at(&rr, &ab).unwrap_or(false),
                _ => false,
            };
            r.check(ok, format!("{name}: Inter at {a},{b}"));
            done += 1;
        }
        r.check(done >= per_sig, format!("{name}: Inter instance count {done}"));
    }
    r
}

/// Criterion 4: exact agreement of `equal_at` with the breadth-first
/// oracle on random pairs of slice lists.
pub fn criterion_4_oracle_agreement(per_sig: usize, seed: u64) -> CriterionResult {
    let mut r = CriterionResult::new(4, "canonical form agrees with the reachability oracle");
    for (sig, palette) in fixtures::axiom_suite_signatures() {
        let mut rng = Rng::new(seed ^ 0x04ac1e);
        let name = format!("{}", sig.pcm());
        let mut done = 0;
        let mut draws = 0;
        while done < per_sig && draws < per_sig * 50 {
            draws += 1;
            let a = rng.pick(&palette).clone();
            let dom = random::random_word(&sig, &mut rng, 3);
            let m1 = match random::random_morphism_at(&sig, &mut rng, dom.clone(), a.clone(), 6) {
                Ok(m) => m,
                Err(_) => continue,
            };
            let m2 = if rng.bool() {
                // a reachable shuffle of m1
                random::random_shuffle(&m1, &mut rng, 6)
            } else {
                match random::random_morphism_at(&sig, &mut rng, dom, a.clone(), 6) {
                    Ok(m) => m,
                    Err(_) => continue,
                }
            };
            if m2.cod() != m1.cod() {
                continue;
            }
            let fast = m1.equal_at(&m2, &a);
            let slow = equal_oracle(&m1, &m2, &a, 500_000);
            match (fast, slow) {
                (Ok(x), Ok(y)) => {
                    r.check(x == y, format!("{name}: oracle disagreement ({x} vs {y})"));
                }
                _ => r.check(false, format!("{name}: equality check errored")),
            }
            done += 1;
        }
        r.check(done >= per_sig, format!("{name}: oracle pair count {done}"));
    }
    r
}

/// Criterion 5: the interchange lemma on random pure/graded pairs and
/// exhaustively on the finite-model fixtures.
pub fn criterion_5_interchange(pairs: usize, seed: u64) -> CriterionResult {
    let mut r = CriterionResult::new(5, "interchange of pure morphisms");
    for (sig, palette) in fixtures::axiom_suite_signatures() {
        let pcm = sig.pcm().clone();
        let mut rng = Rng::new(seed ^ 0x1c);
        let name = format!("{}", pcm);
        let mut done = 0;
        let mut draws = 0;
        while done < pairs && draws < pairs * 100 {
            draws += 1;
            let a = rng.pick(&palette).clone();
            let f = match rand_morphism(&sig, &mut rng, 2, pcm.zero(), 2) {
                Ok(f) => f,
                Err(_) => continue,
            };
            let g = match rand_morphism(&sig, &mut rng, 2, a.clone(), 3) {
                Ok(g) => g,
                Err(_) => continue,
            };
            let id_gd = FreeMorphism::identity(&sig, g.dom().clone(), pcm.zero()).expect("id");
            let id_gc = FreeMorphism::identity(&sig, g.cod().clone(), pcm.zero()).expect("id");
            let id_fd = FreeMorphism::identity(&sig, f.dom().clone(), pcm.zero()).expect("id");
            let id_fc = FreeMorphism::identity(&sig, f.cod().clone(), pcm.zero()).expect("id");

            let direct = f.tensor(&g).expect("0 is orthogonal to everything");
            let first = f
                .tensor(&id_gd)
                .and_then(|l| l.regrade(&a))
                .and_then(|l| Ok((l, id_fc.tensor(&g)?.regrade(&a)?)))
                .and_then(|(l, rr)| l.compose(&rr));
            let second = id_fd
                .tensor(&g)
                .and_then(|l| l.regrade(&a))
                .and_then(|l| Ok((l, f.tensor(&id_gc)?.regrade(&a)?)))
                .and_then(|(l, rr)| l.compose(&rr));
            let ok = match (first, second) {
                (Ok(x), Ok(y)) => {
                    x.equal_at(&direct, &a).unwrap_or(false)
                        && y.equal_at(&direct, &a).unwrap_or(false)
                }
                _ => false,
            };
            r.check(ok, format!("{name}: interchange lemma at {a}"));
            done += 1;
        }
        r.check(done >= pairs, format!("{name}: interchange pair count {done}"));
    }
    for m in [
        fixtures::rz_model(),
        fixtures::two_scalar_model(),
        fixtures::three_scalar_model(),
        fixtures::powerset_scalar_model(),
    ] {
        r.check(
            check_interchange_lemma(&m).passed(),
            format!("model over {}", m.pcm()),
        );
    }
    r
}

/// Criterion 6: the effectful-category translations are mutually inverse
/// and land in law-abiding structures.
pub fn criterion_6_effectful_roundtrip() -> CriterionResult {
    let mut r = CriterionResult::new(6, "effectful category round trip");
    let models = [
        ("terminal_two", fixtures::terminal_model(&Pcm::two())),
        ("rz", fixtures::rz_model()),
        ("two_scalar", fixtures::two_scalar_model()),
    ];
    for (name, m) in models {
        match to_effectful(&m) {
            Ok(eff) => {
                r.check(eff.check().passed(), format!("{name}: effectful laws"));
                match from_effectful(&eff) {
                    Ok(back) => {
                        r.check(back == m, format!("{name}: G(F(model)) = model"));
                        r.check(
                            check_axioms(&back).passed(),
                            format!("{name}: reconstructed model laws"),
                        );
                        match to_effectful(&back) {
                            Ok(eff2) => r.check(eff2 == eff, format!("{name}: F(G(E)) = E")),
                            Err(e) => r.check(false, format!("{name}: {e}")),
                        }
                    }
                    Err(e) => r.check(false, format!("{name}: {e}")),
                }
            }
            Err(e) => r.check(false, format!("{name}: {e}")),
        }
    }
    r
}

/// Criterion 7: coreflection counits check out and the couniversal
/// property is certified by enumeration on the small fixtures.
pub fn criterion_7_coreflection() -> CriterionResult {
    let mut r = CriterionResult::new(7, "coreflection and its universal property");
    let fixtures_list = [
        ("three_scalar", fixtures::three_scalar_model()),
        ("rz_three", fixtures::rz_three_inflation()),
        ("powerset_scalar", fixtures::powerset_scalar_model()),
        ("halves_scalar", fixtures::halves_scalar_model()),
    ];
    for (name, c) in &fixtures_list {
        match coreflect(c) {
            Ok((rc, counit)) => {
                r.check(check_axioms(&rc).passed(), format!("{name}: R(C) laws"));
                r.check(
                    check_graded_functor(&counit).passed(),
                    format!("{name}: counit functor check"),
                );
            }
            Err(e) => r.check(false, format!("{name}: {e}")),
        }
    }
    // uniqueness by enumeration on models with hom-sets of at most 3 labels
    let tiny = [
        ("tiny_three", fixtures::tiny_three_model()),
        ("tiny_halves", fixtures::tiny_halves_model()),
        ("rz_three", fixtures::rz_three_inflation()),
    ];
    for (name, c) in tiny {
        match coreflect(&c) {
            Ok((rc, counit)) => match check_couniversal(&c, &rc, &counit) {
                Ok(report) => r.check(report.passed(), format!("{name}: {:?}", report.failing())),
                Err(e) => r.check(false, format!("{name}: {e}")),
            },
            Err(e) => r.check(false, format!("{name}: {e}")),
        }
    }
    r
}

/// Criterion 8: global-category constructions.
pub fn criterion_8_global(triples: usize, seed: u64) -> CriterionResult {
    let mut r = CriterionResult::new(8, "global categories");
    let cases: Vec<(Signature, Vec<Grade>, UpperBoundingOp)> = {
        let pow = fixtures::sig_powerset_ab();
        let nmax = fixtures::sig_nat_max();
        let nplus = fixtures::sig_nat_plus();
        let pal = |sig: &Signature, lits: &[&str]| -> Vec<Grade> {
            lits.iter().map(|l| sig.pcm().parse_grade(l).expect("palette")).collect()
        };
        vec![
            (pow.clone(), pal(&pow, &["{}", "{a}", "{b}", "{a,b}"]), UpperBoundingOp::Join),
            (nmax.clone(), pal(&nmax, &["0", "1", "2", "3"]), UpperBoundingOp::Join),
            (nmax.clone(), pal(&nmax, &["0", "1", "2", "3"]), UpperBoundingOp::Plus),
            (nplus.clone(), pal(&nplus, &["0", "1", "2"]), UpperBoundingOp::Plus),
        ]
    };
    for (sig, palette, op) in &cases {
        let pcm = sig.pcm().clone();
        let name = format!("{} with {:?}", pcm, op);
        let report = check_upper_bounding(&pcm, op, 500, seed);
        r.check(report.passed(), format!("{name}: op validation"));
        let idempotent = report.notes.iter().any(|n| n == "idempotent=true");

        let mut rng = Rng::new(seed ^ 0x61);
        let mut done = 0;
        let mut draws = 0;
        while done < triples && draws < triples * 50 {
            draws += 1;
            let ga = rng.pick(palette).clone();
            let gb = rng.pick(palette).clone();
            let gc = rng.pick(palette).clone();
            let dom = random::random_word(sig, &mut rng, 2);
            let Ok(x) = random::random_morphism_at(sig, &mut rng, dom, ga, 2) else { continue };
            let Ok(y) = random::random_morphism_at(sig, &mut rng, x.cod().clone(), gb, 2) else {
                continue;
            };
            let Ok(z) = random::random_morphism_at(sig, &mut rng, y.cod().clone(), gc, 2) else {
                continue;
            };
            let (gx, gy, gz) = (
                GlobalMorphism::new(x.clone()),
                GlobalMorphism::new(y.clone()),
                GlobalMorphism::new(z.clone()),
            );

            // associativity
            let lhs = global_compose(&global_compose(&gx, &gy, op).expect("composable"), &gz, op)
                .expect("composable");
            let rhs = global_compose(&gx, &global_compose(&gy, &gz, op).expect("composable"), op)
                .expect("composable");
            let ok = lhs.grade() == rhs.grade()
                && lhs.body().equal_at(rhs.body(), &lhs.grade()).unwrap_or(false);
            r.check(ok, format!("{name}: associativity"));

            // unitality
            let id = GlobalMorphism::new(
                FreeMorphism::identity(sig, x.dom().clone(), pcm.zero()).expect("id"),
            );
            let left = global_compose(&id, &gx, op).expect("composable");
            let ok = left.grade() == gx.grade()
                && left.body().equal_at(gx.body(), &gx.grade()).unwrap_or(false);
            r.check(ok, format!("{name}: left unit"));

            // idempotent ops: same-grade composition is the homogeneous one
            if idempotent && x.cod() == y.dom() {
                if let Ok(yy) = y.regrade(x.ambient_grade()) {
                    let hetero =
                        global_compose(&gx, &GlobalMorphism::new(yy.clone()), op).expect("compose");
                    let homo = x.compose(&yy).expect("compose");
                    let ok = &hetero.grade() == x.ambient_grade()
                        && hetero.body().equal_at(&homo, x.ambient_grade()).unwrap_or(false);
                    r.check(ok, format!("{name}: idempotent same-grade composition"));
                }
            }
            done += 1;
        }
        r.check(done >= triples, format!("{name}: triple count {done}"));
    }

    // to_top / from_top bijectivity on topful fixtures
    for (sig, palette) in [
        (fixtures::sig_two(), vec!["0", "1"]),
        (fixtures::sig_powerset_ab(), vec!["{}", "{a}", "{a,b}"]),
    ] {
        let pcm = sig.pcm().clone();
        let palette: Vec<Grade> =
            palette.iter().map(|l| pcm.parse_grade(l).expect("palette")).collect();
        let mut rng = Rng::new(seed ^ 0x70);
        for _ in 0..100 {
            let a = rng.pick(&palette).clone();
            let Ok(x) = rand_morphism(&sig, &mut rng, 2, a, 3) else {
                continue;
            };
            let gx = GlobalMorphism::new(x);
            let Ok(top_rep) = to_top(&gx) else {
                r.check(false, format!("{}: to_top failed", pcm));
                continue;
            };
            let back = from_top(top_rep.clone()).expect("top representative");
            r.check(
                quotient_equal(&gx, &back).unwrap_or(false),
                format!("{}: from_top(to_top(x)) ~ x", pcm),
            );
        }
    }

    // global tensor interchange on total nat fixtures
    for (sig, op) in [
        (fixtures::sig_nat_plus(), UpperBoundingOp::Plus),
        (fixtures::sig_nat_max(), UpperBoundingOp::TotalAdd),
    ] {
        let pcm = sig.pcm().clone();
        let palette: Vec<Grade> =
            ["0", "1", "2"].iter().map(|l| pcm.parse_grade(l).expect("palette")).collect();
        let mut rng = Rng::new(seed ^ 0x17);
        let mut done = 0;
        let mut draws = 0;
        while done < 100 && draws < 5_000 {
            draws += 1;
            let gr: Vec<Grade> = (0..4).map(|_| rng.pick(&palette).clone()).collect();
            let d1 = random::random_word(&sig, &mut rng, 2);
            let Ok(x) = random::random_morphism_at(&sig, &mut rng, d1, gr[0].clone(), 2) else {
                continue;
            };
            let Ok(x2) =
                random::random_morphism_at(&sig, &mut rng, x.cod().clone(), gr[1].clone(), 2)
            else {
                continue;
            };
            let d2 = random::random_word(&sig, &mut rng, 2);
            let Ok(y) = random::random_morphism_at(&sig, &mut rng, d2, gr[2].clone(), 2) else {
                continue;
            };
            let Ok(y2) =
                random::random_morphism_at(&sig, &mut rng, y.cod().clone(), gr[3].clone(), 2)
            else {
                continue;
            };
            let (gx, gx2, gy, gy2) = (
                GlobalMorphism::new(x),
                GlobalMorphism::new(x2),
                GlobalMorphism::new(y),
                GlobalMorphism::new(y2),
            );
            let lhs = global_compose(
                &global_tensor(&gx, &gy).expect("total"),
                &global_tensor(&gx2, &gy2).expect("total"),
                &op,
            )
            .expect("composable");
            let rhs = global_tensor(
                &global_compose(&gx, &gx2, &op).expect("composable"),
                &global_compose(&gy, &gy2, &op).expect("composable"),
            )
            .expect("total");
            r.check(
                lhs.grade() == rhs.grade() && quotient_equal(&lhs, &rhs).unwrap_or(false),
                format!("{}: tensor/compose interchange", pcm),
            );
            done += 1;
        }
        r.check(done >= 100, format!("{}: interchange count {done}", pcm));
    }
    r
}

/// Criterion 9: the promonoidal and convolution suite.
pub fn criterion_9_convolution(seed: u64) -> CriterionResult {
    let mut r = CriterionResult::new(9, "promonoidal and convolution suite");
    for (name, pcm) in pcm_fixtures() {
        if !pcm.is_finite() {
            continue;
        }
        let carrier = pcm.carrier().expect("finite");
        if carrier.len() > 16 {
            continue;
        }
        match promonoidal_from_pcm(&pcm) {
            Ok(b) => r.check(
                check_promonoidal_laws(&b).passed(),
                format!("{name}: promonoidal laws"),
            ),
            Err(e) => r.check(false, format!("{name}: {e}")),
        }
    }

    // coherence for sampled copresheaves with |F(e)| <= 3 over two and three
    for pcm in [Pcm::two(), Pcm::three()] {
        let mut rng = Rng::new(seed ^ 0xc0);
        for _ in 0..60 {
            let f = crate::convolution::random_copresheaf(&pcm, &mut rng, 3);
            let g = crate::convolution::random_copresheaf(&pcm, &mut rng, 3);
            let h = crate::convolution::random_copresheaf(&pcm, &mut rng, 3);
            match check_convolution_coherence(&f, &g, &h) {
                Ok(report) => r.check(
                    report.passed(),
                    format!("{}: coherence {:?}", pcm, report.failing()),
                ),
                Err(e) => r.check(false, format!("{}: {e}", pcm)),
            }
        }
    }

    // theorem round trip is table-identical on fixture models
    for (name, m) in [
        ("terminal_two", fixtures::terminal_model(&Pcm::two())),
        ("terminal_halves", fixtures::terminal_model(&fixtures::halves_table())),
        ("two_scalar", fixtures::two_scalar_model()),
        ("three_scalar", fixtures::three_scalar_model()),
        ("rz", fixtures::rz_model()),
    ] {
        match graded_to_lax(&m) {
            Ok(pres) => {
                let report = check_lax_presentation(&pres);
                r.check(report.passed(), format!("{name}: checklist {:?}", report.failing()));
                match lax_to_graded(&pres) {
                    Ok(back) => r.check(
                        back == m.without_braiding(),
                        format!("{name}: lax round trip"),
                    ),
                    Err(e) => r.check(false, format!("{name}: {e}")),
                }
            }
            Err(e) => r.check(false, format!("{name}: {e}")),
        }
    }

    // designated mutants fail on the predicted items
    let inter_mutant = fixtures::inter_mutant_model();
    match graded_to_lax(&inter_mutant) {
        Ok(pres) => {
            let report = check_lax_presentation(&pres);
            r.check(
                report.failing().contains(&"2.iii"),
                format!("inter mutant: failing items {:?}", report.failing()),
            );
        }
        Err(e) => r.check(false, format!("inter mutant: {e}")),
    }
    let m = fixtures::two_scalar_model();
    if let Ok(mut pres) = graded_to_lax(&m) {
        let one = 1usize;
        let labels = m.hom_labels(one, 0, 0).to_vec();
        let p1 = labels.iter().position(|l| l == "p").expect("p at grade 1");
        let uu = labels.iter().position(|l| l == "u.u").expect("u.u at grade 1");
        let p0 = m
            .hom_labels(0, 0, 0)
            .iter()
            .position(|l| l == "p")
            .expect("p at grade 0");
        pres.perturb_laxator((0, one, one, 0, 0, 0, 0), p0, p1, uu)
            .expect("laxator entry");
        let report = check_lax_presentation(&pres);
        let failing = report.failing();
        r.check(
            failing.contains(&"1.vi") || failing.contains(&"1.ix"),
            format!("laxator mutant: failing items {failing:?}"),
        );
    }
    r
}

/// Run criteria 1 through 9 (criterion 10 is the CLI golden suite, which
/// lives with the CLI's own tests).
pub fn run_all(seed: u64) -> Vec<CriterionResult> {
    vec![
        criterion_1_pcm_laws(10_000, seed),
        criterion_2_classification(10_000, seed),
        criterion_3_axiom_suite(250, seed),
        criterion_4_oracle_agreement(500, seed),
        criterion_5_interchange(500, seed),
        criterion_6_effectful_roundtrip(),
        criterion_7_coreflection(),
        criterion_8_global(500, seed),
        criterion_9_convolution(seed),
    ]
}
