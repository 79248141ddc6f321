use std::sync::Arc;

use crate::fixtures::{
    halves_scalar_model, inter_mutant_model, nat_plus_scalar_model, powerset_scalar_model,
    rz_model, rz_three_inflation, rzt_naturality_mutant, terminal_model, three_scalar_model,
    tiny_halves_model, tiny_three_model, two_scalar_model,
};
use crate::globalcat::GradedHom;
use crate::pcm::{Pcm, PcmHom};

use super::*;

#[test]
fn terminal_models_pass_all_checks() {
    for pcm in [
        Pcm::two(),
        Pcm::three(),
        Pcm::powerset(vec!["a", "b"]).unwrap(),
        crate::fixtures::halves_table(),
    ] {
        let m = terminal_model(&pcm);
        assert!(check_axioms(&m).passed(), "axioms on terminal over {pcm}");
        assert!(check_symmetric(&m).unwrap().passed(), "symmetry on terminal over {pcm}");
        assert!(check_interchange_lemma(&m).passed());
        assert!(check_regrade_as_unit_tensor(&m).passed());
    }
}

#[test]
fn scalar_truncations_pass_axioms() {
    for m in [
        two_scalar_model(),
        three_scalar_model(),
        powerset_scalar_model(),
        halves_scalar_model(),
        nat_plus_scalar_model(),
    ] {
        let report = check_axioms(&m);
        assert!(report.passed(), "axioms fail: {report}");
        assert!(check_symmetric(&m).unwrap().passed());
        assert!(check_interchange_lemma(&m).passed());
        assert!(check_regrade_as_unit_tensor(&m).passed());
    }
}

#[test]
fn rz_model_passes_axioms_and_symmetry() {
    let m = rz_model();
    let report = check_axioms(&m);
    assert!(report.passed(), "axioms fail: {report}");
    assert!(check_symmetric(&m).unwrap().passed());
    assert!(check_interchange_lemma(&m).passed());
}

#[test]
fn rz_model_has_noncentral_effectful_morphisms() {
    // s ; t = t but t ; s = s in the effectful layer
    let m = Arc::new(rz_model());
    let one = m.pcm().parse_grade("1").unwrap();
    let s = m.morphism(&one, "I", "I", "s").unwrap();
    let t = m.morphism(&one, "I", "I", "t").unwrap();
    let st = s.compose(&t).unwrap();
    let ts = t.compose(&s).unwrap();
    assert_eq!(st.label_name(), "t");
    assert_eq!(ts.label_name(), "s");
}

#[test]
fn inter_mutant_fails_exactly_at_inter() {
    let m = inter_mutant_model();
    m.validate().unwrap();
    let report = check_axioms(&m);
    assert!(!report.passed());
    assert!(report.failing().contains(&"INTER"), "failing: {:?}", report.failing());
}

#[test]
fn naturality_mutant_fails_braid_natural() {
    let m = rzt_naturality_mutant();
    assert!(check_axioms(&m).passed(), "the mutant must still be a graded model");
    let report = check_symmetric(&m).unwrap();
    assert!(!report.item("BRAID-NATURAL").unwrap().passed);
    assert!(report.item("BRAID-INVOL").unwrap().passed);
    assert!(report.item("BRAID-UNIT").unwrap().passed);
}

#[test]
fn no_braiding_is_an_error() {
    let m = two_scalar_model().without_braiding();
    assert!(matches!(check_symmetric(&m), Err(ModelError::NoBraiding)));
}

#[test]
fn monoidal_view_examples() {
    let m = two_scalar_model();
    let zero = m.pcm().zero();
    let v = monoidal_view(&m, &zero).unwrap();
    assert!(check_monoidal(&v).passed());

    let one = m.pcm().parse_grade("1").unwrap();
    assert!(matches!(monoidal_view(&m, &one), Err(ModelError::NotIdempotent(_))));

    // every semilattice grade is idempotent
    let lat = crate::fixtures::diamond_semilattice();
    let tm = terminal_model(&lat);
    for g in lat.carrier().unwrap() {
        let v = monoidal_view(&tm, &g).unwrap();
        assert!(check_monoidal(&v).passed());
    }
}

#[test]
fn premonoidal_views_pass_at_every_grade() {
    for m in [two_scalar_model(), rz_model()] {
        for g in m.support().to_vec() {
            let v = premonoidal_view(&m, &g).unwrap();
            let report = check_premonoidal(&v);
            assert!(report.passed(), "premonoidal at {g}: {report}");
        }
    }
}

#[test]
fn graded_functor_examples() {
    let m = rz_model();
    let ident = GradedFunctorData::identity(&m).unwrap();
    assert!(check_graded_functor(&ident).passed());

    // unique functor to the terminal model over two
    let term = terminal_model(&Pcm::two());
    let mut label_maps = std::collections::BTreeMap::new();
    for (&(e, x, y), labels) in &m.hom {
        label_maps.insert((e, x, y), vec![0; labels.len()]);
    }
    let to_terminal = GradedFunctorData {
        source: m.clone(),
        target: term,
        phi: PcmHom::identity(Pcm::two()).unwrap(),
        obj_map: vec![0, 0],
        label_maps,
    };
    assert!(check_graded_functor(&to_terminal).passed());

    // breaking one entry of a label map breaks the tensor equation
    let mut broken = GradedFunctorData::identity(&m).unwrap();
    let one = m.grade_ix(&m.pcm().parse_grade("1").unwrap()).unwrap();
    // swap s and t at grade 1 on I only
    let map = broken.label_maps.get_mut(&(one, 0, 0)).unwrap();
    map.swap(1, 2);
    let report = check_graded_functor(&broken);
    assert!(!report.passed());
    assert!(
        report.failing().contains(&"TENSOR-EQ") || report.failing().contains(&"FUNCTORIALITY"),
        "failing: {:?}",
        report.failing()
    );
}

#[test]
fn pullback_examples() {
    let m = rz_model();
    let ident = PcmHom::identity(Pcm::two()).unwrap();
    let same = pullback(&m, &ident).unwrap();
    assert_eq!(same, m);

    // pulling back along the canonical 2 -> E map gives the coreflection
    let c = rz_three_inflation();
    assert!(check_axioms(&c).passed());
    let phi = PcmHom::two_to_top(Pcm::three()).unwrap();
    let pulled = pullback(&c, &phi).unwrap();
    let (rc, _) = coreflect(&c).unwrap();
    assert_eq!(pulled, rc);
    assert_eq!(rc, rz_model());

    // a nat_plus truncation pulls back to a two-graded model
    let nat = nat_plus_scalar_model();
    let two = Pcm::two();
    let natp = Pcm::nat_plus();
    let phi = PcmHom::from_table(
        two.clone(),
        natp.clone(),
        vec![natp.zero(), natp.parse_grade("1").unwrap()],
    )
    .unwrap();
    let pulled = pullback(&nat, &phi).unwrap();
    assert!(check_axioms(&pulled).passed());
}

#[test]
fn effectful_roundtrips_are_mutually_inverse() {
    for m in [terminal_model(&Pcm::two()), rz_model(), two_scalar_model()] {
        let eff = to_effectful(&m).unwrap();
        assert!(eff.check().passed());
        let back = from_effectful(&eff).unwrap();
        assert_eq!(back, m, "from_effectful . to_effectful must be the identity");
        let eff2 = to_effectful(&back).unwrap();
        assert_eq!(eff2, eff, "to_effectful . from_effectful must be the identity");
    }
}

#[test]
fn to_effectful_rejects_axiom_failures() {
    let m = inter_mutant_model();
    assert!(matches!(to_effectful(&m), Err(ModelError::AxiomFailure(_))));
}

#[test]
fn coreflection_examples() {
    // over two the coreflection is the identity
    let m = rz_model();
    let (rc, counit) = coreflect(&m).unwrap();
    assert_eq!(rc, m);
    assert!(check_graded_functor(&counit).passed());

    // three-graded fixtures keep the 0 and 2 layers
    for c in [three_scalar_model(), rz_three_inflation()] {
        let (rc, counit) = coreflect(&c).unwrap();
        assert!(check_axioms(&rc).passed());
        assert!(check_graded_functor(&counit).passed());
        let two_ix = c.grade_ix(&c.pcm().top().unwrap()).unwrap();
        for x in 0..c.objects().len() {
            for y in 0..c.objects().len() {
                assert_eq!(rc.hom_labels(0, x, y), c.hom_labels(0, x, y));
                assert_eq!(rc.hom_labels(1, x, y), c.hom_labels(two_ix, x, y));
            }
        }
    }

    // powerset- and table-graded fixtures with tops
    for c in [powerset_scalar_model(), halves_scalar_model()] {
        let (rc, counit) = coreflect(&c).unwrap();
        assert!(check_axioms(&rc).passed());
        assert!(check_graded_functor(&counit).passed());
        assert!(check_symmetric(&rc).unwrap().passed());
    }

    assert!(matches!(coreflect(&nat_plus_scalar_model()), Err(ModelError::NoTop)));
}

#[test]
fn couniversal_certifies_existence_and_uniqueness() {
    // the counit of a tiny model factors through the identity
    let c = tiny_three_model();
    let (rc, counit) = coreflect(&c).unwrap();
    let report = check_couniversal(&c, &rc, &counit).unwrap();
    assert!(report.passed(), "counit couniversality: {report}");

    let c = tiny_halves_model();
    let (rc, counit) = coreflect(&c).unwrap();
    let report = check_couniversal(&c, &rc, &counit).unwrap();
    assert!(report.passed(), "halves couniversality: {report}");

    // a nontrivial M on the two-object right-zero inflation
    let c = rz_three_inflation();
    let d = rz_model();
    let mut label_maps = std::collections::BTreeMap::new();
    for (&(e, x, y), labels) in &d.hom {
        label_maps.insert((e, x, y), (0..labels.len()).collect());
    }
    let m = GradedFunctorData {
        source: d.clone(),
        target: c.clone(),
        phi: PcmHom::two_to_top(Pcm::three()).unwrap(),
        obj_map: vec![0, 1],
        label_maps,
    };
    let report = check_couniversal(&c, &d, &m).unwrap();
    assert!(report.passed(), "rz couniversality: {report}");

    // a broken M is reported as an invalid precondition
    let mut broken = m.clone();
    broken.label_maps.get_mut(&(1, 0, 0)).unwrap().swap(1, 2);
    let report = check_couniversal(&c, &d, &broken).unwrap();
    assert!(!report.item("M-VALID").unwrap().passed);
}

#[test]
fn model_format_roundtrips() {
    for m in [
        terminal_model(&Pcm::two()),
        rz_model(),
        two_scalar_model(),
        three_scalar_model(),
        nat_plus_scalar_model(),
    ] {
        let text = save_model(&m);
        let loaded = load_model(&text).unwrap();
        assert_eq!(loaded, m);
        // saving is deterministic
        assert_eq!(save_model(&loaded), text);
    }
}

#[test]
fn load_rejects_out_of_hom_entries() {
    let text = "\
gmcmodel/1
pcm two
objects I
unit I
hom 0 I I = i
hom 1 I I = u
id I = i
comp 0 I I I : i i = i
comp 1 I I I : u u = i
regrade 0 1 I I : i = u
tensor 0 0 I I I I : i i = i
tensor 0 1 I I I I : i u = u
tensor 1 0 I I I I : u i = u
";
    // `comp 1 ... = i` names a label outside hom(1, I, I)
    let err = load_model(text).unwrap_err();
    assert!(matches!(err, ModelError::ParseError { .. }), "got {err:?}");
}

#[test]
fn interchange_lemma_holds_on_fixture_models() {
    for m in [rz_model(), two_scalar_model(), three_scalar_model(), rz_three_inflation()] {
        assert!(check_interchange_lemma(&m).passed());
    }
}

#[test]
fn regrade_as_unit_tensor_holds_on_fixture_models() {
    for m in [rz_model(), two_scalar_model(), three_scalar_model(), powerset_scalar_model()] {
        assert!(check_regrade_as_unit_tensor(&m).passed());
    }
}

#[test]
fn model_morphisms_implement_the_graded_hom_contract() {
    let m = Arc::new(rz_model());
    let zero = m.pcm().zero();
    let one = m.pcm().parse_grade("1").unwrap();
    let i = m.morphism(&zero, "I", "I", "i").unwrap();
    let s = m.morphism(&one, "I", "I", "s").unwrap();
    let up = i.regrade(&one).unwrap();
    assert_eq!(up.label_name(), "i1");
    let st = up.compose(&s).unwrap();
    assert_eq!(st.label_name(), "s");
    let tensored = i.tensor(&s).unwrap();
    assert_eq!(tensored.label_name(), "s");
    assert!(s.equal_at(&s, &one).unwrap());
}
