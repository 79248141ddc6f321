//! Shared fixtures: the PCM zoo, small graded signatures over each, and the
//! finite models exercised by the verification suites.

use crate::finmodel::{scalar_truncation, FiniteGradedModel, ModelBuilder, ObjectMonoid};
use crate::freecat::{Signature, SignatureBuilder};
use crate::pcm::{Grade, Pcm};
use crate::rational::Rational;

pub fn halves_table() -> Pcm {
    // {0, h, 1} with h ⊕ h = 1: the interval [0,1] discretized to halves.
    Pcm::table(
        vec!["0", "h", "1"],
        vec![
            vec![Some(0), Some(1), Some(2)],
            vec![Some(1), Some(2), None],
            vec![Some(2), None, None],
        ],
        0,
        true,
    )
    .expect("halves table is a PCM")
}

pub fn diamond_semilattice() -> Pcm {
    Pcm::semilattice(
        vec!["bot", "a", "b", "top"],
        vec![
            vec![0, 1, 2, 3],
            vec![1, 1, 3, 3],
            vec![2, 3, 2, 3],
            vec![3, 3, 3, 3],
        ],
    )
    .expect("diamond is a semilattice")
}

/// The PCM fixtures of the law suite, paired with display names.
pub fn pcm_fixtures() -> Vec<(&'static str, Pcm)> {
    vec![
        ("singleton", Pcm::singleton()),
        ("two", Pcm::two()),
        ("three", Pcm::three()),
        ("powerset4", Pcm::powerset(vec!["a", "b", "c", "d"]).expect("unique names")),
        ("rw2", Pcm::read_write(vec!["x", "y"]).expect("unique names")),
        ("product_two_three", Pcm::product(vec![Pcm::two(), Pcm::three()]).expect("nonempty")),
        ("semilattice_diamond", diamond_semilattice()),
        ("halves", halves_table()),
        ("interval1", Pcm::interval(Rational::ONE).expect("positive bound")),
        ("nat_plus", Pcm::nat_plus()),
        ("nat_max", Pcm::nat_max()),
    ]
}

fn grade(pcm: &Pcm, lit: &str) -> Grade {
    pcm.parse_grade(lit).expect("fixture grade literal")
}

/// Wire signature over `two`: a pure endo, two effectful endos on separate
/// objects, and a shape-changing pure generator.
pub fn sig_two() -> Signature {
    let p = Pcm::two();
    SignatureBuilder::new(p.clone())
        .object("A")
        .object("B")
        .gen("p", &["A"], &["A"], grade(&p, "0"))
        .gen("f", &["A"], &["A"], grade(&p, "1"))
        .gen("g", &["B"], &["B"], grade(&p, "1"))
        .gen("d", &["A"], &["A", "B"], grade(&p, "0"))
        .build()
        .expect("fixture signature")
}

pub fn sig_three() -> Signature {
    let p = Pcm::three();
    SignatureBuilder::new(p.clone())
        .object("A")
        .object("B")
        .gen("p", &["A"], &["A"], grade(&p, "0"))
        .gen("c", &["A"], &["A"], grade(&p, "1"))
        .gen("u", &["A"], &["A"], grade(&p, "2"))
        .gen("v", &["B"], &["B"], grade(&p, "2"))
        .build()
        .expect("fixture signature")
}

pub fn sig_powerset_ab() -> Signature {
    let p = Pcm::powerset(vec!["a", "b"]).expect("unique names");
    SignatureBuilder::new(p.clone())
        .object("A")
        .object("B")
        .gen("p", &["A"], &["A"], grade(&p, "{}"))
        .gen("f", &["A"], &["A"], grade(&p, "{a}"))
        .gen("g", &["B"], &["B"], grade(&p, "{b}"))
        .gen("w", &["A", "B"], &["B", "A"], grade(&p, "{a,b}"))
        .build()
        .expect("fixture signature")
}

pub fn sig_nat_plus() -> Signature {
    let p = Pcm::nat_plus();
    SignatureBuilder::new(p.clone())
        .object("A")
        .object("B")
        .gen("p", &["A"], &["A"], grade(&p, "0"))
        .gen("f", &["A"], &["A"], grade(&p, "1"))
        .gen("g", &["B"], &["B"], grade(&p, "1"))
        .gen("h", &["A"], &["A"], grade(&p, "2"))
        .build()
        .expect("fixture signature")
}

pub fn sig_nat_max() -> Signature {
    let p = Pcm::nat_max();
    SignatureBuilder::new(p.clone())
        .object("A")
        .object("B")
        .gen("p", &["A"], &["A"], grade(&p, "0"))
        .gen("s2", &["A"], &["A"], grade(&p, "2"))
        .gen("s3", &["A"], &["A"], grade(&p, "3"))
        .gen("g", &["B"], &["B"], grade(&p, "1"))
        .build()
        .expect("fixture signature")
}

/// The four signatures of the free-category axiom suite, with the grade
/// palettes their random instances draw from.
pub fn axiom_suite_signatures() -> Vec<(Signature, Vec<Grade>)> {
    let two = sig_two();
    let three = sig_three();
    let pow = sig_powerset_ab();
    let nat = sig_nat_plus();
    let palette = |sig: &Signature, lits: &[&str]| -> Vec<Grade> {
        lits.iter().map(|l| grade(sig.pcm(), l)).collect()
    };
    vec![
        (two.clone(), palette(&two, &["0", "1"])),
        (three.clone(), palette(&three, &["0", "1", "2"])),
        (pow.clone(), palette(&pow, &["{}", "{a}", "{b}", "{a,b}"])),
        (nat.clone(), palette(&nat, &["0", "1", "2", "3", "4"])),
    ]
}

/// Scalar signatures (all generators `I -> I`) used by the truncation
/// exporter.
pub fn scalar_sig_two() -> Signature {
    let p = Pcm::two();
    SignatureBuilder::new(p.clone())
        .gen("p", &[], &[], grade(&p, "0"))
        .gen("u", &[], &[], grade(&p, "1"))
        .gen("v", &[], &[], grade(&p, "1"))
        .build()
        .expect("fixture signature")
}

pub fn scalar_sig_three() -> Signature {
    let p = Pcm::three();
    SignatureBuilder::new(p.clone())
        .gen("p", &[], &[], grade(&p, "0"))
        .gen("c", &[], &[], grade(&p, "1"))
        .gen("u", &[], &[], grade(&p, "2"))
        .gen("v", &[], &[], grade(&p, "2"))
        .build()
        .expect("fixture signature")
}

pub fn scalar_sig_powerset() -> Signature {
    let p = Pcm::powerset(vec!["a", "b"]).expect("unique names");
    SignatureBuilder::new(p.clone())
        .gen("p", &[], &[], grade(&p, "{}"))
        .gen("f", &[], &[], grade(&p, "{a}"))
        .gen("g", &[], &[], grade(&p, "{b}"))
        .build()
        .expect("fixture signature")
}

pub fn scalar_sig_halves() -> Signature {
    let p = halves_table();
    SignatureBuilder::new(p.clone())
        .gen("p", &[], &[], grade(&p, "0"))
        .gen("w", &[], &[], grade(&p, "h"))
        .build()
        .expect("fixture signature")
}

pub fn scalar_sig_nat_plus() -> Signature {
    let p = Pcm::nat_plus();
    SignatureBuilder::new(p.clone())
        .gen("p", &[], &[], grade(&p, "0"))
        .gen("u", &[], &[], grade(&p, "1"))
        .gen("v", &[], &[], grade(&p, "1"))
        .build()
        .expect("fixture signature")
}

/// The terminal model over a finite PCM: one object, one morphism per grade.
pub fn terminal_model(pcm: &Pcm) -> FiniteGradedModel {
    let carrier = pcm.carrier().expect("finite fixture PCM");
    let mut b = ModelBuilder::new(pcm.clone()).id("I", "*").braid("I", "I", "*");
    for e in &carrier {
        b = b.hom(e, "I", "I", &["*"]).comp(e, "I", "I", "I", "*", "*", "*");
    }
    for e in &carrier {
        for e2 in &carrier {
            if e != e2 && pcm.leq(e, e2).expect("owned") {
                b = b.regrade(e, e2, "I", "I", "*", "*");
            }
            if pcm.add(e, e2).expect("owned").is_some() {
                b = b.tensor(e, e2, "I", "I", "I", "I", "*", "*", "*");
            }
        }
    }
    b.build().expect("terminal model is well formed")
}

/// Truncated free models over the scalar signatures. `max = 2` keeps the
/// hom-sets small while still exercising grade-sensitive exchange.
pub fn two_scalar_model() -> FiniteGradedModel {
    scalar_truncation(&scalar_sig_two(), 2, None).expect("export")
}

pub fn three_scalar_model() -> FiniteGradedModel {
    scalar_truncation(&scalar_sig_three(), 2, None).expect("export")
}

pub fn powerset_scalar_model() -> FiniteGradedModel {
    scalar_truncation(&scalar_sig_powerset(), 2, None).expect("export")
}

pub fn halves_scalar_model() -> FiniteGradedModel {
    scalar_truncation(&scalar_sig_halves(), 2, None).expect("export")
}

pub fn nat_plus_scalar_model() -> FiniteGradedModel {
    let p = Pcm::nat_plus();
    let support = vec![grade(&p, "0"), grade(&p, "1"), grade(&p, "2")];
    scalar_truncation(&scalar_sig_nat_plus(), 2, Some(support)).expect("export")
}

/// Small couniversal fixtures: one-generator truncations with hom-sets of
/// at most three labels.
pub fn tiny_three_model() -> FiniteGradedModel {
    let p = Pcm::three();
    let sig = SignatureBuilder::new(p.clone())
        .gen("u", &[], &[], grade(&p, "2"))
        .build()
        .expect("fixture signature");
    scalar_truncation(&sig, 1, None).expect("export")
}

pub fn tiny_halves_model() -> FiniteGradedModel {
    let p = halves_table();
    let sig = SignatureBuilder::new(p.clone())
        .gen("w", &[], &[], grade(&p, "h"))
        .build()
        .expect("fixture signature");
    scalar_truncation(&sig, 1, None).expect("export")
}

/// The right-zero effectful model over `two`: objects form the group of
/// order two, pure morphisms are identities, and the effectful scalars `s`
/// and `t` compose by "later wins", so neither is central.
pub fn rz_model() -> FiniteGradedModel {
    let p = Pcm::two();
    let g0 = grade(&p, "0");
    let g1 = grade(&p, "1");
    let objects = ObjectMonoid::new(
        vec!["I".to_string(), "A".to_string()],
        0,
        vec![vec![0, 1], vec![1, 0]],
    )
    .expect("Z/2 object monoid");

    // label sets: plain names on I, `-a` suffixed copies on A
    let il = ["i1", "s", "t"];
    let al = ["ia1", "sa", "ta"];
    let mut b = ModelBuilder::new(p.clone())
        .objects(objects)
        .hom(&g0, "I", "I", &["i"])
        .hom(&g0, "A", "A", &["ia"])
        .hom(&g1, "I", "I", &il)
        .hom(&g1, "A", "A", &al)
        .id("I", "i")
        .id("A", "ia")
        .comp(&g0, "I", "I", "I", "i", "i", "i")
        .comp(&g0, "A", "A", "A", "ia", "ia", "ia")
        .regrade(&g0, &g1, "I", "I", "i", "i1")
        .regrade(&g0, &g1, "A", "A", "ia", "ia1");

    // right-zero composition with unit, on both copies
    let rz = |unit: &'static str, f: &'static str, g: &'static str| -> &'static str {
        if g == unit {
            f
        } else {
            g
        }
    };
    for f in il {
        for g in il {
            b = b.comp(&g1, "I", "I", "I", f, g, rz("i1", f, g));
        }
    }
    for f in al {
        for g in al {
            b = b.comp(&g1, "A", "A", "A", f, g, rz("ia1", f, g));
        }
    }

    // tensors: identities toggle between the plain and whiskered copies
    let toggle = |l: &'static str| -> &'static str {
        match l {
            "i1" => "ia1",
            "s" => "sa",
            "t" => "ta",
            "ia1" => "i1",
            "sa" => "s",
            "ta" => "t",
            other => other,
        }
    };
    b = b
        .tensor(&g0, &g0, "I", "I", "I", "I", "i", "i", "i")
        .tensor(&g0, &g0, "I", "I", "A", "A", "i", "ia", "ia")
        .tensor(&g0, &g0, "A", "A", "I", "I", "ia", "i", "ia")
        .tensor(&g0, &g0, "A", "A", "A", "A", "ia", "ia", "i");
    for l in il {
        b = b
            .tensor(&g0, &g1, "I", "I", "I", "I", "i", l, l)
            .tensor(&g0, &g1, "A", "A", "I", "I", "ia", l, toggle(l))
            .tensor(&g1, &g0, "I", "I", "I", "I", l, "i", l)
            .tensor(&g1, &g0, "I", "I", "A", "A", l, "ia", toggle(l));
    }
    for l in al {
        b = b
            .tensor(&g0, &g1, "I", "I", "A", "A", "i", l, l)
            .tensor(&g0, &g1, "A", "A", "A", "A", "ia", l, toggle(l))
            .tensor(&g1, &g0, "A", "A", "I", "I", l, "i", l)
            .tensor(&g1, &g0, "A", "A", "A", "A", l, "ia", toggle(l));
    }

    b = b
        .braid("I", "I", "i")
        .braid("I", "A", "ia")
        .braid("A", "I", "ia")
        .braid("A", "A", "i");

    b.build().expect("right-zero model is well formed")
}

/// A singleton-graded model whose declared braiding fails naturality: the
/// tensor of endomorphisms of the idempotent object projects onto its
/// second factor, so no braiding can be natural.
pub fn rzt_naturality_mutant() -> FiniteGradedModel {
    let p = Pcm::singleton();
    let g0 = p.zero();
    let objects = ObjectMonoid::new(
        vec!["I".to_string(), "A".to_string()],
        0,
        vec![vec![0, 1], vec![1, 1]],
    )
    .expect("idempotent object monoid");
    let al = ["ia", "s", "t"];
    let mut b = ModelBuilder::new(p.clone())
        .objects(objects)
        .hom(&g0, "I", "I", &["i"])
        .hom(&g0, "A", "A", &al)
        .id("I", "i")
        .id("A", "ia")
        .comp(&g0, "I", "I", "I", "i", "i", "i")
        .tensor(&g0, &g0, "I", "I", "I", "I", "i", "i", "i")
        .braid("I", "I", "i")
        .braid("I", "A", "ia")
        .braid("A", "I", "ia")
        .braid("A", "A", "ia");
    let rz = |f: &'static str, g: &'static str| -> &'static str {
        if g == "ia" {
            f
        } else {
            g
        }
    };
    for f in al {
        for g in al {
            b = b.comp(&g0, "A", "A", "A", f, g, rz(f, g));
        }
        b = b
            .tensor(&g0, &g0, "I", "I", "A", "A", "i", f, f)
            .tensor(&g0, &g0, "A", "A", "I", "I", f, "i", f);
        for g in al {
            // second projection: f ⊗ g := g
            b = b.tensor(&g0, &g0, "A", "A", "A", "A", f, g, g);
        }
    }
    b.build().expect("projection-tensor model is well formed")
}

/// Mutate one composition entry of the two-generator scalar model so that
/// the interchange axiom fails: `p↑ ; u` is redirected to `u.u`.
pub fn inter_mutant_model() -> FiniteGradedModel {
    let mut m = two_scalar_model();
    let one = m.grade_ix(&grade(m.pcm(), "1")).expect("grade 1 in support");
    let labels = m.hom_labels(one, 0, 0).to_vec();
    let p_up = labels.iter().position(|l| l == "p").expect("label p at grade 1");
    let u = labels.iter().position(|l| l == "u").expect("label u at grade 1");
    let uu = labels.iter().position(|l| l == "u.u").expect("label u.u at grade 1");
    let table = m.comp.get_mut(&(one, 0, 0, 0)).expect("comp table at grade 1");
    table[p_up][u] = uu;
    m
}

/// The three-graded inflation of the right-zero model along the PCM
/// homomorphism `three -> two` sending 1 to 0 and 2 to 1. Coreflecting it
/// recovers the right-zero model.
pub fn rz_three_inflation() -> FiniteGradedModel {
    let rz = rz_model();
    let three = Pcm::three();
    let two = Pcm::two();
    let phi = crate::pcm::PcmHom::from_table(
        three.clone(),
        two.clone(),
        vec![grade(&two, "0"), grade(&two, "0"), grade(&two, "1")],
    )
    .expect("three -> two homomorphism");
    crate::finmodel::pullback(&rz, &phi).expect("pullback of the right-zero model")
}
