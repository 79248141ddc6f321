//! Global categories assembled from the per-grade hom-sets.
//!
//! Heterogeneously graded morphisms compose by regrading both sides to an
//! upper bound of their grades: either the PCM's join, the PCM's own total
//! addition, or a user-supplied upper-bounding table. The directed quotient
//! identifies a morphism with all of its regradings; when the PCM has a top
//! element the quotient is isomorphic to the top-grade category, and when
//! the PCM is total the quotient is monoidal.
//!
//! Everything here is generic over a graded-hom contract so that global
//! morphisms can wrap either free-category terms or finite-model morphisms.

use thiserror::Error;

use crate::pcm::{Grade, Pcm, PcmError};
use crate::report::Report;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GlobalError {
    #[error("boundary mismatch: expected {expected}, found {found}")]
    TypeMismatch { expected: String, found: String },
    #[error("upper-bounding operation is invalid: {0}")]
    OpInvalid(String),
    #[error("the extension preorder is not directed")]
    NotDirected,
    #[error("the PCM is not total")]
    NotTotal,
    #[error("the PCM has no top element")]
    NoTop,
    #[error("{0}")]
    Underlying(String),
    #[error("PCM error: {0}")]
    Pcm(#[from] PcmError),
}

/// The contract shared by free-category morphisms and finite-model
/// morphisms, as needed by the global constructions.
pub trait GradedHom: Sized + Clone {
    type Boundary: PartialEq + Clone + std::fmt::Debug;

    fn pcm(&self) -> Pcm;
    fn grade(&self) -> Grade;
    fn dom(&self) -> Self::Boundary;
    fn cod(&self) -> Self::Boundary;
    fn regrade(&self, c: &Grade) -> Result<Self, GlobalError>;
    /// Grade-homogeneous composition (both sides at the same grade).
    fn compose(&self, other: &Self) -> Result<Self, GlobalError>;
    /// Monoidal product (grades must be orthogonal).
    fn tensor(&self, other: &Self) -> Result<Self, GlobalError>;
    fn equal_at(&self, other: &Self, c: &Grade) -> Result<bool, GlobalError>;
    /// Grades whose pairwise sums bound the exchanges this morphism can
    /// undergo; used for the stabilization grade of the directed quotient.
    fn component_grades(&self) -> Vec<Grade>;
}

impl GradedHom for crate::freecat::FreeMorphism {
    type Boundary = crate::freecat::Word;

    fn pcm(&self) -> Pcm {
        self.signature().pcm().clone()
    }

    fn grade(&self) -> Grade {
        self.ambient_grade().clone()
    }

    fn dom(&self) -> Self::Boundary {
        crate::freecat::FreeMorphism::dom(self).clone()
    }

    fn cod(&self) -> Self::Boundary {
        crate::freecat::FreeMorphism::cod(self).clone()
    }

    fn regrade(&self, c: &Grade) -> Result<Self, GlobalError> {
        crate::freecat::FreeMorphism::regrade(self, c).map_err(|e| GlobalError::Underlying(e.to_string()))
    }

    fn compose(&self, other: &Self) -> Result<Self, GlobalError> {
        crate::freecat::FreeMorphism::compose(self, other)
            .map_err(|e| GlobalError::Underlying(e.to_string()))
    }

    fn tensor(&self, other: &Self) -> Result<Self, GlobalError> {
        crate::freecat::FreeMorphism::tensor(self, other)
            .map_err(|e| GlobalError::Underlying(e.to_string()))
    }

    fn equal_at(&self, other: &Self, c: &Grade) -> Result<bool, GlobalError> {
        crate::freecat::FreeMorphism::equal_at(self, other, c)
            .map_err(|e| GlobalError::Underlying(e.to_string()))
    }

    fn component_grades(&self) -> Vec<Grade> {
        self.slice_grades()
    }
}

/// A grade-tagged morphism of the global category.
#[derive(Debug, Clone)]
pub struct GlobalMorphism<M: GradedHom> {
    body: M,
}

impl<M: GradedHom> GlobalMorphism<M> {
    pub fn new(body: M) -> GlobalMorphism<M> {
        GlobalMorphism { body }
    }

    pub fn grade(&self) -> Grade {
        self.body.grade()
    }

    pub fn body(&self) -> &M {
        &self.body
    }
}

/// An associative binary operation with unit 0 providing an upper bound of
/// its arguments in the extension preorder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UpperBoundingOp {
    /// The PCM's binary join.
    Join,
    /// The PCM's own addition; requires a total PCM.
    TotalAdd,
    /// Numeric addition on natural grades. On `nat_plus` this coincides
    /// with the PCM's addition; on `nat_max` it is the other upper-bounding
    /// operation, making grades sum under sequential composition.
    Plus,
    /// An explicit table over a finite carrier.
    Table(Vec<Vec<usize>>),
}

impl UpperBoundingOp {
    pub fn apply(&self, pcm: &Pcm, a: &Grade, b: &Grade) -> Result<Grade, GlobalError> {
        match self {
            UpperBoundingOp::Join => Ok(pcm.join(a, b)?),
            UpperBoundingOp::TotalAdd => match pcm.add(a, b)? {
                Some(g) => Ok(g),
                None => Err(GlobalError::OpInvalid(format!("{a} ⊕ {b} is undefined"))),
            },
            UpperBoundingOp::Plus => {
                use crate::pcm::Payload;
                if a.pcm() != pcm || b.pcm() != pcm {
                    return Err(GlobalError::Pcm(PcmError::OwnerMismatch));
                }
                match (a.payload(), b.payload()) {
                    (Payload::Nat(x), Payload::Nat(y)) => {
                        let sum = x.checked_add(*y).ok_or_else(|| {
                            GlobalError::OpInvalid("natural addition overflow".into())
                        })?;
                        Ok(pcm.grade_from_payload(Payload::Nat(sum)))
                    }
                    _ => Err(GlobalError::OpInvalid(
                        "plus is only available on natural-number grades".into(),
                    )),
                }
            }
            UpperBoundingOp::Table(table) => {
                let ia = pcm.index_in_carrier(a)?;
                let ib = pcm.index_in_carrier(b)?;
                let carrier = pcm.carrier()?;
                let row = table
                    .get(ia)
                    .ok_or_else(|| GlobalError::OpInvalid("table row out of range".into()))?;
                let ix = *row
                    .get(ib)
                    .ok_or_else(|| GlobalError::OpInvalid("table column out of range".into()))?;
                carrier
                    .get(ix)
                    .cloned()
                    .ok_or_else(|| GlobalError::OpInvalid("table entry out of range".into()))
            }
        }
    }
}

/// Verify associativity, unit, and the two upper-bound inequalities for an
/// operation, exhaustively for finite PCMs and over the sample pool
/// otherwise. Also notes whether the operation is idempotent.
pub fn check_upper_bounding(pcm: &Pcm, op: &UpperBoundingOp, budget: usize, seed: u64) -> Report {
    let mut report = Report::new();
    let pool = crate::pcm::sample_pool(pcm);
    let pairs: Vec<(Grade, Grade)> = if pcm.is_finite() {
        pool.iter()
            .flat_map(|a| pool.iter().map(move |b| (a.clone(), b.clone())))
            .collect()
    } else {
        let budget = if budget == 0 { 2000 } else { budget };
        let mut rng = crate::rng::Rng::new(seed);
        (0..budget)
            .map(|_| (rng.pick(&pool).clone(), rng.pick(&pool).clone()))
            .collect()
    };

    let apply = |a: &Grade, b: &Grade| op.apply(pcm, a, b);

    let mut unit: Option<String> = None;
    let zero = pcm.zero();
    for (a, _) in &pairs {
        match (apply(&zero, a), apply(a, &zero)) {
            (Ok(l), Ok(r)) if l.payload() == a.payload() && r.payload() == a.payload() => {}
            _ => {
                unit = Some(format!("{a}"));
                break;
            }
        }
    }
    report.push_outcome("UNIT", unit);

    let mut upper: Option<String> = None;
    for (a, b) in &pairs {
        let ok = match apply(a, b) {
            Ok(j) => pcm.leq(a, &j).unwrap_or(false) && pcm.leq(b, &j).unwrap_or(false),
            Err(_) => false,
        };
        if !ok {
            upper = Some(format!("{a} {b}"));
            break;
        }
    }
    report.push_outcome("UPPER-BOUND", upper);

    let mut assoc: Option<String> = None;
    let triple_count = if pcm.is_finite() { pool.len().pow(3) } else { pairs.len() };
    if pcm.is_finite() {
        'outer: for a in &pool {
            for b in &pool {
                for c in &pool {
                    let l = apply(a, b).and_then(|ab| apply(&ab, c));
                    let r = apply(b, c).and_then(|bc| apply(a, &bc));
                    match (l, r) {
                        (Ok(x), Ok(y)) if x.payload() == y.payload() => {}
                        _ => {
                            assoc = Some(format!("{a} {b} {c}"));
                            break 'outer;
                        }
                    }
                }
            }
        }
    } else {
        let mut rng = crate::rng::Rng::new(seed.wrapping_add(1));
        for _ in 0..triple_count {
            let a = rng.pick(&pool);
            let b = rng.pick(&pool);
            let c = rng.pick(&pool);
            let l = apply(a, b).and_then(|ab| apply(&ab, c));
            let r = apply(b, c).and_then(|bc| apply(a, &bc));
            match (l, r) {
                (Ok(x), Ok(y)) if x.payload() == y.payload() => {}
                _ => {
                    assoc = Some(format!("{a} {b} {c}"));
                    break;
                }
            }
        }
    }
    report.push_outcome("ASSOCIATIVITY", assoc);

    let idempotent = pairs
        .iter()
        .all(|(a, _)| matches!(apply(a, a), Ok(j) if j.payload() == a.payload()));
    report.note(format!("idempotent={idempotent}"));
    report
}

/// Heterogeneous sequential composition: regrade both bodies to
/// `op(grade(x), grade(y))` and compose there.
pub fn global_compose<M: GradedHom>(
    x: &GlobalMorphism<M>,
    y: &GlobalMorphism<M>,
    op: &UpperBoundingOp,
) -> Result<GlobalMorphism<M>, GlobalError> {
    if x.body.cod() != y.body.dom() {
        return Err(GlobalError::TypeMismatch {
            expected: format!("{:?}", x.body.cod()),
            found: format!("{:?}", y.body.dom()),
        });
    }
    let pcm = x.body.pcm();
    let target = op.apply(&pcm, &x.grade(), &y.grade())?;
    let bx = x.body.regrade(&target)?;
    let by = y.body.regrade(&target)?;
    Ok(GlobalMorphism::new(bx.compose(&by)?))
}

/// Monoidal product on the quotient; requires a total PCM.
pub fn global_tensor<M: GradedHom>(
    x: &GlobalMorphism<M>,
    y: &GlobalMorphism<M>,
) -> Result<GlobalMorphism<M>, GlobalError> {
    let pcm = x.body.pcm();
    if !pcm.is_total() {
        return Err(GlobalError::NotTotal);
    }
    Ok(GlobalMorphism::new(x.body.tensor(&y.body)?))
}

/// The stabilization grade: a common upper bound of both morphism grades and
/// of every defined pairwise sum of their component grades. Equality of the
/// directed-quotient classes is decided at this grade.
pub fn stabilization_grade<M: GradedHom>(
    x: &GlobalMorphism<M>,
    y: &GlobalMorphism<M>,
) -> Result<Grade, GlobalError> {
    let pcm = x.body.pcm();
    if pcm.is_finite() {
        if !pcm.is_directed()? {
            return Err(GlobalError::NotDirected);
        }
        return Ok(pcm.directed_top()?);
    }
    // Infinite built-ins: nat_plus, nat_max, and interval are join-directed.
    let mut grades = vec![x.grade(), y.grade()];
    let mut components = x.body.component_grades();
    components.extend(y.body.component_grades());
    for (i, a) in components.iter().enumerate() {
        for b in &components[i..] {
            if let Some(sum) = pcm.add(a, b)? {
                grades.push(sum);
            }
        }
    }
    let mut bound = pcm.zero();
    for g in &grades {
        bound = pcm.join(&bound, g)?;
    }
    Ok(bound)
}

/// Equality in the directed quotient: both representatives regrade to the
/// stabilization grade and are compared there.
pub fn quotient_equal<M: GradedHom>(
    x: &GlobalMorphism<M>,
    y: &GlobalMorphism<M>,
) -> Result<bool, GlobalError> {
    if x.body.dom() != y.body.dom() || x.body.cod() != y.body.cod() {
        return Ok(false);
    }
    let c = stabilization_grade(x, y)?;
    x.body.equal_at(&y.body, &c)
}

/// Regrade a representative to the top grade (PCMs with a top element).
pub fn to_top<M: GradedHom>(x: &GlobalMorphism<M>) -> Result<M, GlobalError> {
    let pcm = x.body.pcm();
    let top = pcm.top().map_err(|_| GlobalError::NoTop)?;
    x.body.regrade(&top)
}

/// Tag a top-graded morphism as a global one.
pub fn from_top<M: GradedHom>(m: M) -> Result<GlobalMorphism<M>, GlobalError> {
    let pcm = m.pcm();
    let top = pcm.top().map_err(|_| GlobalError::NoTop)?;
    if m.grade() != top {
        return Err(GlobalError::Underlying(format!(
            "expected a morphism at the top grade {top}, got {}",
            m.grade()
        )));
    }
    Ok(GlobalMorphism::new(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freecat::{FreeMorphism, SignatureBuilder};
    use crate::pcm::Pcm;

    fn nat_max_sig() -> crate::freecat::Signature {
        let n = Pcm::nat_max();
        SignatureBuilder::new(n.clone())
            .object("A")
            .gen("s2", &["A"], &["A"], n.parse_grade("2").unwrap())
            .gen("s3", &["A"], &["A"], n.parse_grade("3").unwrap())
            .build()
            .unwrap()
    }

    #[test]
    fn compose_with_join_and_plus() {
        let sig = nat_max_sig();
        let f = GlobalMorphism::new(FreeMorphism::generator(&sig, "s2").unwrap());
        let g = GlobalMorphism::new(FreeMorphism::generator(&sig, "s3").unwrap());

        let joined = global_compose(&f, &g, &UpperBoundingOp::Join).unwrap();
        assert_eq!(joined.grade(), sig.pcm().parse_grade("3").unwrap());

        // on nat_max the PCM's own total operation is max again
        let maxed = global_compose(&f, &g, &UpperBoundingOp::TotalAdd).unwrap();
        assert_eq!(maxed.grade(), sig.pcm().parse_grade("3").unwrap());

        let summed = global_compose(&f, &g, &UpperBoundingOp::Plus).unwrap();
        assert_eq!(summed.grade(), sig.pcm().parse_grade("5").unwrap());
    }

    #[test]
    fn zero_identity_is_a_unit() {
        let sig = nat_max_sig();
        let f = GlobalMorphism::new(FreeMorphism::generator(&sig, "s2").unwrap());
        let id = GlobalMorphism::new(
            FreeMorphism::identity(&sig, sig.word(&["A"]).unwrap(), sig.pcm().zero()).unwrap(),
        );
        let composed = global_compose(&id, &f, &UpperBoundingOp::Join).unwrap();
        assert_eq!(composed.grade(), f.grade());
        assert!(quotient_equal(&composed, &f).unwrap());
    }

    #[test]
    fn broken_op_on_two_fails_upper_bound() {
        // 1 ∨ 1 = 0 is associative and unital but not upper-bounding
        let two = Pcm::two();
        let op = UpperBoundingOp::Table(vec![vec![0, 1], vec![1, 0]]);
        let report = check_upper_bounding(&two, &op, 0, 0);
        assert!(!report.item("UPPER-BOUND").unwrap().passed);
        assert!(report.item("ASSOCIATIVITY").unwrap().passed);
    }

    #[test]
    fn plus_is_upper_bounding_but_not_idempotent_on_nat_plus() {
        let n = Pcm::nat_plus();
        let report = check_upper_bounding(&n, &UpperBoundingOp::TotalAdd, 500, 3);
        assert!(report.passed());
        assert!(report.notes.iter().any(|n| n == "idempotent=false"));
    }

    #[test]
    fn union_is_an_idempotent_join_on_powerset() {
        let p = Pcm::powerset(vec!["a", "b"]).unwrap();
        let report = check_upper_bounding(&p, &UpperBoundingOp::Join, 0, 0);
        assert!(report.passed());
        assert!(report.notes.iter().any(|n| n == "idempotent=true"));
    }

    fn staircases(sig: &crate::freecat::Signature) -> (FreeMorphism, FreeMorphism) {
        let pcm = sig.pcm();
        let f = FreeMorphism::generator(sig, "f").unwrap();
        let g = FreeMorphism::generator(sig, "g").unwrap();
        let ida = FreeMorphism::identity(sig, sig.word(&["A"]).unwrap(), pcm.zero()).unwrap();
        let idb = FreeMorphism::identity(sig, sig.word(&["B"]).unwrap(), pcm.zero()).unwrap();
        let one = f.ambient_grade().clone();
        let fg = f
            .tensor(&idb)
            .unwrap()
            .compose(&ida.tensor(&g).unwrap().regrade(&one).unwrap())
            .unwrap();
        let gf = ida
            .tensor(&g)
            .unwrap()
            .regrade(&one)
            .unwrap()
            .compose(&f.tensor(&idb).unwrap())
            .unwrap();
        (fg, gf)
    }

    #[test]
    fn quotient_identifies_regradings() {
        let sig = crate::fixtures::sig_nat_plus();
        let f = FreeMorphism::generator(&sig, "f").unwrap();
        let three = sig.pcm().parse_grade("3").unwrap();
        let a = GlobalMorphism::new(f.clone());
        let b = GlobalMorphism::new(f.regrade(&three).unwrap());
        assert!(quotient_equal(&a, &b).unwrap());
    }

    #[test]
    fn quotient_separates_staircases_over_two_but_not_nat_plus() {
        let sig = crate::fixtures::sig_two();
        let (fg, gf) = staircases(&sig);
        assert!(!quotient_equal(&GlobalMorphism::new(fg), &GlobalMorphism::new(gf)).unwrap());

        let sig = crate::fixtures::sig_nat_plus();
        let (fg, gf) = staircases(&sig);
        // the stabilization grade 2 admits the exchange
        assert!(quotient_equal(&GlobalMorphism::new(fg), &GlobalMorphism::new(gf)).unwrap());
    }

    #[test]
    fn quotient_is_not_defined_on_undirected_pcms() {
        let rw = Pcm::read_write(vec!["x"]).unwrap();
        let sig = crate::freecat::SignatureBuilder::new(rw.clone())
            .object("A")
            .gen("r", &["A"], &["A"], rw.parse_grade("({x},{})").unwrap())
            .build()
            .unwrap();
        let r1 = GlobalMorphism::new(FreeMorphism::generator(&sig, "r").unwrap());
        assert!(matches!(
            quotient_equal(&r1, &r1),
            Err(GlobalError::NotDirected)
        ));
    }

    #[test]
    fn quotient_is_a_congruence_for_global_compose() {
        let sig = crate::fixtures::sig_nat_plus();
        let pcm = sig.pcm().clone();
        let two_g = pcm.parse_grade("2").unwrap();
        let f = FreeMorphism::generator(&sig, "f").unwrap();
        let h = FreeMorphism::generator(&sig, "h").unwrap();
        let x = GlobalMorphism::new(f.clone());
        let x2 = GlobalMorphism::new(f.regrade(&two_g).unwrap());
        let y = GlobalMorphism::new(h.clone());
        assert!(quotient_equal(&x, &x2).unwrap());
        let left = global_compose(&x, &y, &UpperBoundingOp::Plus).unwrap();
        let right = global_compose(&x2, &y, &UpperBoundingOp::Plus).unwrap();
        assert!(quotient_equal(&left, &right).unwrap());
    }

    #[test]
    fn top_views_assemble_into_an_isomorphism() {
        let sig = crate::fixtures::sig_two();
        let pcm = sig.pcm().clone();
        let top = pcm.top().unwrap();
        let f = GlobalMorphism::new(FreeMorphism::generator(&sig, "f").unwrap());
        let p = GlobalMorphism::new(FreeMorphism::generator(&sig, "p").unwrap());

        // round trips are identities up to the quotient
        for x in [&f, &p] {
            let back = from_top(to_top(x).unwrap()).unwrap();
            assert!(quotient_equal(x, &back).unwrap());
        }

        // identities and composition are preserved
        let id = GlobalMorphism::new(
            FreeMorphism::identity(&sig, sig.word(&["A"]).unwrap(), pcm.zero()).unwrap(),
        );
        assert!(to_top(&id).unwrap().slices().is_empty());
        let composed = global_compose(&p, &f, &UpperBoundingOp::Join).unwrap();
        let lhs = to_top(&composed).unwrap();
        let rhs = to_top(&p).unwrap().compose(&to_top(&f).unwrap()).unwrap();
        assert!(lhs.equal_at(&rhs, &top).unwrap());
    }

    #[test]
    fn global_tensor_requires_a_total_pcm() {
        let sig = crate::fixtures::sig_two();
        let f = GlobalMorphism::new(FreeMorphism::generator(&sig, "f").unwrap());
        assert!(matches!(global_tensor(&f, &f), Err(GlobalError::NotTotal)));

        let nsig = crate::fixtures::sig_nat_plus();
        let g = GlobalMorphism::new(FreeMorphism::generator(&nsig, "f").unwrap());
        let t = global_tensor(&g, &g).unwrap();
        assert_eq!(t.grade(), nsig.pcm().parse_grade("2").unwrap());
    }

    #[test]
    fn tensor_with_the_graded_unit_identity_is_trivial_on_the_quotient() {
        let nsig = crate::fixtures::sig_nat_plus();
        let pcm = nsig.pcm().clone();
        let f = GlobalMorphism::new(FreeMorphism::generator(&nsig, "f").unwrap());
        let unit_id = GlobalMorphism::new(
            FreeMorphism::identity(&nsig, crate::freecat::Word::empty(), pcm.zero()).unwrap(),
        );
        let t = global_tensor(&f, &unit_id).unwrap();
        assert!(quotient_equal(&t, &f).unwrap());
    }
}
