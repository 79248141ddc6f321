//! End-to-end exercise of the public API: build a signature, work with
//! terms, export a truncation, coreflect it, translate it to a lax
//! presentation, and run the verifiers, using only the crate's surface.

use gmc_core::convolution::{
    check_convolution_coherence, check_lax_presentation, check_promonoidal_laws, convolve,
    format::load_copresheaf, graded_to_lax, lax_to_graded, promonoidal_from_pcm, Copresheaf,
};
use gmc_core::finmodel::{
    check_axioms, check_graded_functor, check_symmetric, coreflect, load_model, save_model,
    scalar_truncation,
};
use gmc_core::freecat::{EffectfulView, FreeMorphism, SignatureBuilder};
use gmc_core::globalcat::{global_compose, GlobalMorphism, UpperBoundingOp};
use gmc_core::pcm::Pcm;

#[test]
fn device_grading_pipeline() {
    let pcm = Pcm::powerset(vec!["db", "lock"]).unwrap();
    let sig = SignatureBuilder::new(pcm.clone())
        .object("A")
        .object("B")
        .gen("use_db", &["A"], &["A"], pcm.parse_grade("{db}").unwrap())
        .gen("use_lock", &["B"], &["B"], pcm.parse_grade("{lock}").unwrap())
        .gen("audit", &["A"], &["A"], pcm.parse_grade("{}").unwrap())
        .build()
        .unwrap();

    let use_db = FreeMorphism::generator(&sig, "use_db").unwrap();
    let use_lock = FreeMorphism::generator(&sig, "use_lock").unwrap();
    let audit = FreeMorphism::generator(&sig, "audit").unwrap();

    // disjoint devices tensor; shared devices do not
    let par = use_db.tensor(&use_lock).unwrap();
    assert_eq!(par.ambient_grade(), &pcm.parse_grade("{db,lock}").unwrap());
    assert!(use_db.tensor(&use_db).is_err());

    // the pure audit step interchanges with the effectful lock user on the
    // other wire: both staircase orders denote audit ⊗ use_lock
    let lock = pcm.parse_grade("{lock}").unwrap();
    let id_a = FreeMorphism::identity(&sig, sig.word(&["A"]).unwrap(), pcm.zero()).unwrap();
    let id_b = FreeMorphism::identity(&sig, sig.word(&["B"]).unwrap(), pcm.zero()).unwrap();
    let first = audit
        .tensor(&id_b)
        .unwrap()
        .regrade(&lock)
        .unwrap()
        .compose(&id_a.tensor(&use_lock).unwrap())
        .unwrap();
    let second = id_a
        .tensor(&use_lock)
        .unwrap()
        .compose(&audit.tensor(&id_b).unwrap().regrade(&lock).unwrap())
        .unwrap();
    assert!(first.equal_at(&second, &lock).unwrap());
    assert!(first.equal_at(&audit.tensor(&use_lock).unwrap(), &lock).unwrap());

    // heterogeneous sequencing through the global category
    let both = pcm.parse_grade("{db}").unwrap();
    let joined = global_compose(
        &GlobalMorphism::new(use_db.clone()),
        &GlobalMorphism::new(audit.compose(&audit).unwrap().regrade(&both).unwrap()),
        &UpperBoundingOp::Join,
    )
    .unwrap();
    assert_eq!(joined.grade(), both);

    // the effectful view sits at grades 0 and top
    let view = EffectfulView::new(&sig).unwrap();
    assert!(view.is_pure(&audit));
    assert!(view.is_effectful(&view.include(&audit).unwrap()));
}

#[test]
fn model_pipeline_roundtrips_through_text() {
    let pcm = Pcm::three();
    let sig = SignatureBuilder::new(pcm.clone())
        .gen("step", &[], &[], pcm.parse_grade("1").unwrap())
        .gen("emit", &[], &[], pcm.parse_grade("2").unwrap())
        .build()
        .unwrap();
    let model = scalar_truncation(&sig, 2, None).unwrap();
    assert!(check_axioms(&model).passed());
    assert!(check_symmetric(&model).unwrap().passed());

    // text round trip
    let text = save_model(&model);
    let loaded = load_model(&text).unwrap();
    assert_eq!(loaded, model);

    // coreflection to the 0/top layers
    let (rc, counit) = coreflect(&loaded).unwrap();
    assert!(check_axioms(&rc).passed());
    assert!(check_graded_functor(&counit).passed());

    // lax presentation round trip
    let pres = graded_to_lax(&loaded).unwrap();
    assert!(check_lax_presentation(&pres).passed());
    assert_eq!(lax_to_graded(&pres).unwrap(), loaded.without_braiding());
}

#[test]
fn convolution_pipeline_from_text() {
    let pcm = Pcm::two();
    let b = promonoidal_from_pcm(&pcm).unwrap();
    assert!(check_promonoidal_laws(&b).passed());

    let f = load_copresheaf(
        "copresheaf/1\npcm two\nset 0 = x\nset 1 = x'\nmap 0 1 : x = x'\n",
    )
    .unwrap();
    let j = Copresheaf::constant_singleton(&pcm).unwrap();
    let jf = convolve(&j, &f).unwrap();
    assert_eq!(jf.class_count(0), 1);
    assert_eq!(jf.class_count(1), 1);
    assert!(check_convolution_coherence(&f, &f, &f).unwrap().passed());
}
