use crate::pcm::Pcm;
use crate::rational::Rational;
use crate::rng::Rng;

use super::random::{random_morphism, random_morphism_at};
use super::*;

fn sig_two() -> Signature {
    let two = Pcm::two();
    SignatureBuilder::new(two.clone())
        .object("A")
        .object("B")
        .gen("p", &["A"], &["A"], two.parse_grade("0").unwrap())
        .gen("f", &["A"], &["A"], two.parse_grade("1").unwrap())
        .gen("g", &["B"], &["B"], two.parse_grade("1").unwrap())
        .build()
        .unwrap()
}

fn sig_nat() -> Signature {
    let n = Pcm::nat_plus();
    SignatureBuilder::new(n.clone())
        .object("A")
        .object("B")
        .gen("f", &["A"], &["A"], n.parse_grade("1").unwrap())
        .gen("g", &["B"], &["B"], n.parse_grade("1").unwrap())
        .build()
        .unwrap()
}

#[test]
fn identity_examples() {
    let sig = sig_two();
    let zero = sig.pcm().zero();
    let a = sig.word(&["A"]).unwrap();
    let id = FreeMorphism::identity(&sig, a.clone(), zero.clone()).unwrap();
    assert!(id.slices().is_empty());

    let unit = FreeMorphism::identity(&sig, Word::empty(), zero.clone()).unwrap();
    assert!(unit.dom().is_empty() && unit.cod().is_empty());

    let one = sig.pcm().parse_grade("1").unwrap();
    let id1 = FreeMorphism::identity(&sig, a, one.clone()).unwrap();
    assert_eq!(id1, id.regrade(&one).unwrap());
}

#[test]
fn generator_examples() {
    let sig = sig_two();
    let f = FreeMorphism::generator(&sig, "f").unwrap();
    assert_eq!(f.slices().len(), 1);
    assert_eq!(f.ambient_grade(), &sig.pcm().parse_grade("1").unwrap());

    let scal = SignatureBuilder::new(Pcm::two())
        .object("B")
        .gen("s", &[], &["B"], Pcm::two().zero())
        .build()
        .unwrap();
    let s = FreeMorphism::generator(&scal, "s").unwrap();
    assert!(s.dom().is_empty());

    assert!(matches!(
        FreeMorphism::generator(&sig, "missing"),
        Err(TermError::UnknownGenerator(_))
    ));
}

#[test]
fn regrade_examples() {
    let sig = sig_nat();
    let f = FreeMorphism::generator(&sig, "f").unwrap();
    let g2 = sig.pcm().parse_grade("2").unwrap();
    let g3 = sig.pcm().parse_grade("3").unwrap();
    let via =
        f.regrade(&g2).unwrap().regrade(&g3).unwrap();
    assert_eq!(via, f.regrade(&g3).unwrap());
    assert_eq!(f.regrade(f.ambient_grade()).unwrap(), f);

    let sig2 = sig_two();
    let f1 = FreeMorphism::generator(&sig2, "f").unwrap();
    assert!(matches!(f1.regrade(&sig2.pcm().zero()), Err(TermError::NotLeq { .. })));
}

#[test]
fn compose_examples() {
    let sig = sig_two();
    let one = sig.pcm().parse_grade("1").unwrap();
    let f = FreeMorphism::generator(&sig, "f").unwrap();
    let a = sig.word(&["A"]).unwrap();
    let id1 = FreeMorphism::identity(&sig, a, one.clone()).unwrap();

    let lhs = id1.compose(&f).unwrap();
    assert_eq!(lhs, f.clone());

    let two_step = f.compose(&f).unwrap();
    assert_eq!(two_step.slices().len(), 2);
    two_step.check_invariants().unwrap();

    let p = FreeMorphism::generator(&sig, "p").unwrap();
    assert!(matches!(f.compose(&p), Err(TermError::GradeMismatch { .. })));
}

#[test]
fn tensor_examples() {
    let sig = sig_two();
    let f = FreeMorphism::generator(&sig, "f").unwrap();
    let g = FreeMorphism::generator(&sig, "g").unwrap();
    assert!(matches!(f.tensor(&g), Err(TermError::NonOrthogonalGrades { .. })));

    let unit = FreeMorphism::identity(&sig, Word::empty(), sig.pcm().zero()).unwrap();
    assert_eq!(f.tensor(&unit).unwrap(), f);
    assert_eq!(unit.tensor(&f).unwrap(), f);

    let p = Pcm::powerset(vec!["a", "b"]).unwrap();
    let psig = SignatureBuilder::new(p.clone())
        .object("A")
        .object("B")
        .gen("f", &["A"], &["A"], p.parse_grade("{a}").unwrap())
        .gen("g", &["B"], &["B"], p.parse_grade("{b}").unwrap())
        .build()
        .unwrap();
    let pf = FreeMorphism::generator(&psig, "f").unwrap();
    let pg = FreeMorphism::generator(&psig, "g").unwrap();
    let both = pf.tensor(&pg).unwrap();
    assert_eq!(both.ambient_grade(), &p.parse_grade("{a,b}").unwrap());
    both.check_invariants().unwrap();
}

fn staircases_over(sig: &Signature, ambient: &str) -> (FreeMorphism, FreeMorphism) {
    let c = sig.pcm().parse_grade(ambient).unwrap();
    let f = FreeMorphism::generator(sig, "f").unwrap();
    let g = FreeMorphism::generator(sig, "g").unwrap();
    let ida = FreeMorphism::identity(sig, sig.word(&["A"]).unwrap(), sig.pcm().zero()).unwrap();
    let idb = FreeMorphism::identity(sig, sig.word(&["B"]).unwrap(), sig.pcm().zero()).unwrap();
    let fg = f
        .tensor(&idb)
        .unwrap()
        .regrade(&c)
        .unwrap()
        .compose(&ida.tensor(&g).unwrap().regrade(&c).unwrap())
        .unwrap();
    let gf = ida
        .tensor(&g)
        .unwrap()
        .regrade(&c)
        .unwrap()
        .compose(&f.tensor(&idb).unwrap().regrade(&c).unwrap())
        .unwrap();
    (fg, gf)
}

#[test]
fn canonical_form_examples() {
    // pure p on disjoint wires from effectful f: both orders normalize
    // identically over two
    let sig = sig_two();
    let one = sig.pcm().parse_grade("1").unwrap();
    let p = FreeMorphism::generator(&sig, "p").unwrap();
    let g = FreeMorphism::generator(&sig, "g").unwrap();
    let ida = FreeMorphism::identity(&sig, sig.word(&["A"]).unwrap(), sig.pcm().zero()).unwrap();
    let idb = FreeMorphism::identity(&sig, sig.word(&["B"]).unwrap(), sig.pcm().zero()).unwrap();
    let pg = p
        .tensor(&idb)
        .unwrap()
        .regrade(&one)
        .unwrap()
        .compose(&ida.tensor(&g).unwrap().regrade(&one).unwrap())
        .unwrap();
    let gp = ida
        .tensor(&g)
        .unwrap()
        .regrade(&one)
        .unwrap()
        .compose(&p.tensor(&idb).unwrap().regrade(&one).unwrap())
        .unwrap();
    assert_eq!(pg.canonical_form().slices(), gp.canonical_form().slices());

    // two effectful generators on disjoint wires stay distinct over two at 1
    let (fg, gf) = staircases_over(&sig, "1");
    assert_ne!(fg.canonical_form().slices(), gf.canonical_form().slices());

    // over nat_plus they merge at ambient 2 but not at ambient 1
    let nsig = sig_nat();
    let (nfg, ngf) = staircases_over(&nsig, "2");
    assert_eq!(nfg.canonical_form().slices(), ngf.canonical_form().slices());
    let (nfg1, ngf1) = staircases_over(&nsig, "1");
    assert!(nfg1.check_invariants().is_ok() && ngf1.check_invariants().is_ok());
    assert_ne!(nfg1.canonical_form().slices(), ngf1.canonical_form().slices());
}

#[test]
fn equal_at_examples() {
    // a Reg-⊗ instance over powerset{a,b}
    let p = Pcm::powerset(vec!["a", "b"]).unwrap();
    let sig = SignatureBuilder::new(p.clone())
        .object("A")
        .object("B")
        .gen("f", &["A"], &["A"], p.parse_grade("{a}").unwrap())
        .gen("g", &["B"], &["B"], p.parse_grade("{}").unwrap())
        .build()
        .unwrap();
    let f = FreeMorphism::generator(&sig, "f").unwrap();
    let g = FreeMorphism::generator(&sig, "g").unwrap();
    let c = p.parse_grade("{a}").unwrap();
    let d = p.parse_grade("{b}").unwrap();
    let cd = p.parse_grade("{a,b}").unwrap();
    let lhs = f.tensor(&g).unwrap().regrade(&cd).unwrap();
    let rhs = f.regrade(&c).unwrap().tensor(&g.regrade(&d).unwrap()).unwrap();
    assert!(lhs.equal_at(&rhs, &cd).unwrap());
    assert!(equal_oracle(&lhs, &rhs, &cd, 10_000).unwrap());

    // reflexivity
    assert!(f.equal_at(&f, &c).unwrap());

    // the two grade-1 staircases over two are distinct at 1
    let sig2 = sig_two();
    let one = sig2.pcm().parse_grade("1").unwrap();
    let (fg, gf) = staircases_over(&sig2, "1");
    assert!(!fg.equal_at(&gf, &one).unwrap());
    assert!(!equal_oracle(&fg, &gf, &one, 10_000).unwrap());
}

#[test]
fn oracle_matches_equal_at_on_staircases_over_nat() {
    let nsig = sig_nat();
    let two_grade = nsig.pcm().parse_grade("2").unwrap();
    let (fg, gf) = staircases_over(&nsig, "2");
    assert!(fg.equal_at(&gf, &two_grade).unwrap());
    assert!(equal_oracle(&fg, &gf, &two_grade, 10_000).unwrap());
}

#[test]
fn valid_grades_examples() {
    let sig = sig_two();
    let f = FreeMorphism::generator(&sig, "f").unwrap();
    let one = sig.pcm().parse_grade("1").unwrap();
    assert_eq!(f.valid_grades().unwrap(), vec![one.clone()]);

    let id = FreeMorphism::identity(&sig, sig.word(&["A"]).unwrap(), sig.pcm().zero()).unwrap();
    assert_eq!(id.valid_grades().unwrap().len(), 2);

    let p = Pcm::powerset(vec!["a", "b"]).unwrap();
    let psig = SignatureBuilder::new(p.clone())
        .object("A")
        .gen("f", &["A"], &["A"], p.parse_grade("{a}").unwrap())
        .gen("g", &["A"], &["A"], p.parse_grade("{b}").unwrap())
        .build()
        .unwrap();
    let m = FreeMorphism::generator(&psig, "f")
        .unwrap()
        .regrade(&p.parse_grade("{a,b}").unwrap())
        .unwrap()
        .compose(
            &FreeMorphism::generator(&psig, "g")
                .unwrap()
                .regrade(&p.parse_grade("{a,b}").unwrap())
                .unwrap(),
        )
        .unwrap();
    assert_eq!(m.valid_grades().unwrap(), vec![p.parse_grade("{a,b}").unwrap()]);
}

#[test]
fn effectful_view_examples() {
    let sig = sig_two();
    let view = EffectfulView::new(&sig).unwrap();
    let p = FreeMorphism::generator(&sig, "p").unwrap();
    assert!(view.is_pure(&p));
    let pf = view.include(&p).unwrap();
    assert!(view.is_effectful(&pf));

    // pure inclusion commutes with tensor
    let idb = FreeMorphism::identity(&sig, sig.word(&["B"]).unwrap(), sig.pcm().zero()).unwrap();
    let left = view.include(&p.tensor(&idb).unwrap()).unwrap();
    let right = view.include(&p).unwrap();
    let top = view.top_grade().clone();
    assert!(left
        .equal_at(&right.tensor(&idb).unwrap().regrade(&top).unwrap(), &top)
        .unwrap());

    // over interval(1) the effectful tensor is rejected
    let i = Pcm::interval(Rational::ONE).unwrap();
    let isig = SignatureBuilder::new(i.clone())
        .object("A")
        .gen("f", &["A"], &["A"], i.parse_grade("1/1").unwrap())
        .build()
        .unwrap();
    let iview = EffectfulView::new(&isig).unwrap();
    let f = FreeMorphism::generator(&isig, "f").unwrap();
    assert!(matches!(
        iview.tensor_effectful(&f, &f),
        Err(TermError::NonOrthogonalGrades { .. })
    ));

    // no top on nat_plus
    assert!(EffectfulView::new(&sig_nat()).is_err());
}

#[test]
fn canonical_form_is_idempotent_and_oracle_equivalent() {
    let sig = sig_two();
    let palette = sig.pcm().carrier().unwrap();
    let mut rng = Rng::new(0xfeed);
    for _ in 0..150 {
        let m = random_morphism(&sig, &mut rng, &palette, 3, 5).unwrap();
        let c1 = m.canonical_form();
        c1.check_invariants().unwrap();
        let c2 = c1.canonical_form();
        assert_eq!(c1.slices(), c2.slices());
        assert!(equal_oracle(&m, &c1, m.ambient_grade(), 100_000).unwrap());
    }
}

#[test]
fn equal_at_is_monotone_under_coarsening() {
    // equality at a grade persists at any larger grade
    let nsig = sig_nat();
    let mut rng = Rng::new(0xabc);
    let palette: Vec<_> = ["0", "1", "2"]
        .iter()
        .map(|s| nsig.pcm().parse_grade(s).unwrap())
        .collect();
    let three = nsig.pcm().parse_grade("3").unwrap();
    for _ in 0..100 {
        let dom = super::random::random_word(&nsig, &mut rng, 3);
        let a = random_morphism_at(&nsig, &mut rng, dom.clone(), palette[2].clone(), 4).unwrap();
        let b = random_morphism_at(&nsig, &mut rng, dom, palette[2].clone(), 4).unwrap();
        if a.cod() == b.cod() && a.equal_at(&b, &palette[2]).unwrap() {
            assert!(a.equal_at(&b, &three).unwrap());
        }
    }
}

#[test]
fn equal_at_is_an_equivalence_and_a_congruence() {
    let sig = sig_nat();
    let pcm = sig.pcm().clone();
    let two_g = pcm.parse_grade("2").unwrap();
    let four_g = pcm.parse_grade("4").unwrap();
    let mut rng = Rng::new(0xc0135);
    for _ in 0..60 {
        let dom = super::random::random_word(&sig, &mut rng, 2);
        let a = random_morphism_at(&sig, &mut rng, dom.clone(), two_g.clone(), 3).unwrap();
        let b = super::random::random_shuffle(&a, &mut rng, 4);
        let c = super::random::random_shuffle(&b, &mut rng, 4);
        // reflexivity, symmetry, transitivity on a shuffled chain
        assert!(a.equal_at(&a, &two_g).unwrap());
        assert_eq!(a.equal_at(&b, &two_g).unwrap(), b.equal_at(&a, &two_g).unwrap());
        assert!(a.equal_at(&b, &two_g).unwrap() && b.equal_at(&c, &two_g).unwrap());
        assert!(a.equal_at(&c, &two_g).unwrap());

        // congruence for compose and tensor
        let tail = random_morphism_at(&sig, &mut rng, a.cod().clone(), two_g.clone(), 2).unwrap();
        let left = a.compose(&tail).unwrap();
        let right = b.compose(&tail).unwrap();
        assert!(left.equal_at(&right, &two_g).unwrap());

        let other_dom = super::random::random_word(&sig, &mut rng, 1);
        let other =
            random_morphism_at(&sig, &mut rng, other_dom, two_g.clone(), 2).unwrap();
        let lt = a.tensor(&other).unwrap();
        let rt = b.tensor(&other).unwrap();
        assert!(lt.equal_at(&rt, &four_g).unwrap());
    }
}

#[test]
fn morphisms_of_different_signatures_do_not_mix() {
    let a = FreeMorphism::generator(&sig_two(), "f").unwrap();
    let b = FreeMorphism::generator(&sig_nat(), "f").unwrap();
    assert!(matches!(a.compose(&b), Err(TermError::SignatureMismatch)));
    assert!(matches!(a.tensor(&b), Err(TermError::SignatureMismatch)));
}

#[test]
fn regrade_equals_tensor_with_graded_unit_identity() {
    // f regraded along a witness c equals f ⊗ (id_I at c)
    let p = Pcm::powerset(vec!["a", "b"]).unwrap();
    let sig = SignatureBuilder::new(p.clone())
        .object("A")
        .gen("f", &["A"], &["A"], p.parse_grade("{a}").unwrap())
        .build()
        .unwrap();
    let f = FreeMorphism::generator(&sig, "f").unwrap();
    let b = p.parse_grade("{a,b}").unwrap();
    for c in p.witnesses(f.ambient_grade(), &b).unwrap() {
        let unit_id = FreeMorphism::identity(&sig, Word::empty(), c).unwrap();
        let rhs = f.tensor(&unit_id).unwrap();
        assert!(f.regrade(&b).unwrap().equal_at(&rhs, &b).unwrap());
    }
}
