//! Explicit finite graded monoidal categories as lookup tables.
//!
//! A model stores, over a grading PCM: a finite object monoid, per-grade
//! hom-sets of morphism labels, identity labels, and total composition,
//! regrading, and tensor tables, plus optional grade-0 braidings. Hom-sets
//! are plain label sets with total lookup tables; all partiality lives in
//! the PCM.
//!
//! Models over an infinite PCM are supported as truncations: the `support`
//! list names the grades with declared hom-sets, and tables are required
//! (and axioms checked) only for instances whose grades stay inside the
//! support.

mod check;
mod effectful;
mod export;
mod format;
mod functor;

pub use check::{
    check_axioms, check_interchange_lemma, check_monoidal, check_premonoidal,
    check_regrade_as_unit_tensor, check_symmetric, monoidal_view, premonoidal_view, MonoidalView,
    PremonoidalView,
};
pub use effectful::{check_couniversal, coreflect, from_effectful, to_effectful, EffectfulData};
pub use export::scalar_truncation;
pub use format::{load_model, save_model};
pub use functor::{check_graded_functor, pullback, GradedFunctorData};

use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use crate::pcm::{Grade, Pcm, PcmError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("parse error at line {line}: {message}")]
    ParseError { line: usize, message: String },
    #[error("ill-formed model at {location}: {message}")]
    IllFormed { location: String, message: String },
    #[error("grade {0} is not idempotent")]
    NotIdempotent(String),
    #[error("model has no braiding")]
    NoBraiding,
    #[error("invalid PCM homomorphism: {0}")]
    InvalidHom(String),
    #[error("input fails its law check: {0}")]
    AxiomFailure(String),
    #[error("the PCM has no top element")]
    NoTop,
    #[error("uniqueness enumeration too large: {0} candidates")]
    EnumerationTooLarge(u128),
    #[error("operation requires a finite PCM carrier")]
    InfiniteCarrier,
    #[error("unknown {what} {name}")]
    Unknown { what: String, name: String },
    #[error("PCM error: {0}")]
    Pcm(#[from] PcmError),
}

fn ill(location: impl Into<String>, message: impl Into<String>) -> ModelError {
    ModelError::IllFormed { location: location.into(), message: message.into() }
}

/// A finite monoid of objects given by a multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObjectMonoid {
    names: Vec<String>,
    unit: usize,
    mul: Vec<Vec<usize>>,
}

impl ObjectMonoid {
    pub fn new(names: Vec<String>, unit: usize, mul: Vec<Vec<usize>>) -> Result<ObjectMonoid, ModelError> {
        let n = names.len();
        if unit >= n {
            return Err(ill("objects", "unit index out of range"));
        }
        if mul.len() != n || mul.iter().any(|r| r.len() != n) {
            return Err(ill("objects", "multiplication table must be n x n"));
        }
        for row in &mul {
            for &v in row {
                if v >= n {
                    return Err(ill("objects", "multiplication entry out of range"));
                }
            }
        }
        let m = ObjectMonoid { names, unit, mul };
        for x in 0..n {
            if m.mul[m.unit][x] != x || m.mul[x][m.unit] != x {
                return Err(ill("objects", format!("unit law fails at {}", m.names[x])));
            }
            for y in 0..n {
                for z in 0..n {
                    if m.mul[m.mul[x][y]][z] != m.mul[x][m.mul[y][z]] {
                        return Err(ill(
                            "objects",
                            format!(
                                "associativity fails at {} {} {}",
                                m.names[x], m.names[y], m.names[z]
                            ),
                        ));
                    }
                }
            }
        }
        Ok(m)
    }

    /// The one-object monoid.
    pub fn trivial() -> ObjectMonoid {
        ObjectMonoid { names: vec!["I".to_string()], unit: 0, mul: vec![vec![0]] }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x][y]
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// All monoid homomorphisms into `other`, as index maps, sorted.
    pub fn homs_into(&self, other: &ObjectMonoid) -> Vec<Vec<usize>> {
        let n = self.len();
        let m = other.len();
        let mut out = Vec::new();
        let total = (m as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
        let mut k = 0u128;
        while k < total {
            let mut map = Vec::with_capacity(n);
            let mut v = k;
            for _ in 0..n {
                map.push((v % m as u128) as usize);
                v /= m as u128;
            }
            let valid = map[self.unit] == other.unit
                && (0..n)
                    .all(|x| (0..n).all(|y| map[self.mul(x, y)] == other.mul(map[x], map[y])));
            if valid {
                out.push(map);
            }
            k += 1;
        }
        out.sort();
        out
    }
}

pub(crate) type HomKey = (usize, usize, usize);
pub(crate) type CompKey = (usize, usize, usize, usize);
pub(crate) type RegradeKey = (usize, usize, usize, usize);
pub(crate) type TensorKey = (usize, usize, usize, usize, usize, usize);

/// The tables of a finite graded monoidal category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGradedModel {
    pub(crate) pcm: Pcm,
    pub(crate) support: Vec<Grade>,
    pub(crate) objects: ObjectMonoid,
    pub(crate) hom: BTreeMap<HomKey, Vec<String>>,
    pub(crate) id: Vec<usize>,
    pub(crate) comp: BTreeMap<CompKey, Vec<Vec<usize>>>,
    pub(crate) regrade: BTreeMap<RegradeKey, Vec<usize>>,
    pub(crate) tensor: BTreeMap<TensorKey, Vec<Vec<usize>>>,
    pub(crate) braiding: Option<BTreeMap<(usize, usize), usize>>,
}

impl FiniteGradedModel {
    pub fn pcm(&self) -> &Pcm {
        &self.pcm
    }

    pub fn support(&self) -> &[Grade] {
        &self.support
    }

    pub fn objects(&self) -> &ObjectMonoid {
        &self.objects
    }

    pub fn has_braiding(&self) -> bool {
        self.braiding.is_some()
    }

    pub fn zero_ix(&self) -> usize {
        self.grade_ix(&self.pcm.zero()).expect("zero is always in the support")
    }

    pub fn grade_ix(&self, g: &Grade) -> Option<usize> {
        self.support.iter().position(|s| s == g)
    }

    pub(crate) fn leq_ix(&self, a: usize, b: usize) -> bool {
        self.pcm
            .leq(&self.support[a], &self.support[b])
            .expect("support grades are owned")
    }

    /// Sum of two support grades when defined and itself in the support.
    pub(crate) fn add_ix(&self, a: usize, b: usize) -> Option<usize> {
        let sum = self
            .pcm
            .add(&self.support[a], &self.support[b])
            .expect("support grades are owned")?;
        self.grade_ix(&sum)
    }

    pub fn hom_labels(&self, e: usize, x: usize, y: usize) -> &[String] {
        self.hom.get(&(e, x, y)).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn hom_len(&self, e: usize, x: usize, y: usize) -> usize {
        self.hom_labels(e, x, y).len()
    }

    pub(crate) fn comp_ix(&self, e: usize, x: usize, y: usize, z: usize, f: usize, g: usize) -> usize {
        self.comp[&(e, x, y, z)][f][g]
    }

    pub(crate) fn regrade_ix(&self, e: usize, e2: usize, x: usize, y: usize, f: usize) -> usize {
        if e == e2 {
            // the identity regrading is implicit unless a table overrides it
            return self.regrade.get(&(e, e2, x, y)).map(|m| m[f]).unwrap_or(f);
        }
        self.regrade[&(e, e2, x, y)][f]
    }

    #[allow(clippy::too_many_arguments)]
    pub(crate) fn tensor_ix(
        &self,
        a: usize,
        b: usize,
        x: usize,
        y: usize,
        x2: usize,
        y2: usize,
        f: usize,
        g: usize,
    ) -> usize {
        self.tensor[&(a, b, x, y, x2, y2)][f][g]
    }

    /// The identity on `x` at grade `e` (the grade-0 identity regraded).
    pub(crate) fn id_at(&self, e: usize, x: usize) -> usize {
        self.regrade_ix(self.zero_ix(), e, x, x, self.id[x])
    }

    /// A copy with any braiding data dropped. The lax presentation does
    /// not carry braidings, so round trips compare against this.
    pub fn without_braiding(&self) -> FiniteGradedModel {
        let mut m = self.clone();
        m.braiding = None;
        m
    }

    /// Construct a morphism handle by label name.
    pub fn morphism(
        self: &Arc<Self>,
        grade: &Grade,
        dom: &str,
        cod: &str,
        label: &str,
    ) -> Result<ModelMorphism, ModelError> {
        let e = self
            .grade_ix(grade)
            .ok_or_else(|| ModelError::Unknown { what: "grade".into(), name: grade.to_string() })?;
        let x = self
            .objects
            .index(dom)
            .ok_or_else(|| ModelError::Unknown { what: "object".into(), name: dom.to_string() })?;
        let y = self
            .objects
            .index(cod)
            .ok_or_else(|| ModelError::Unknown { what: "object".into(), name: cod.to_string() })?;
        let l = self
            .hom_labels(e, x, y)
            .iter()
            .position(|n| n == label)
            .ok_or_else(|| ModelError::Unknown { what: "label".into(), name: label.to_string() })?;
        Ok(ModelMorphism { model: Arc::clone(self), grade_ix: e, dom: x, cod: y, label: l })
    }

    /// Structural well-formedness: totality of the declared tables and
    /// membership of every entry in its declared hom-set.
    pub fn validate(&self) -> Result<(), ModelError> {
        let n_obj = self.objects.len();
        let zero = self.pcm.zero();
        if !self.support.contains(&zero) {
            return Err(ill("support", "the zero grade must be in the support"));
        }
        for g in &self.support {
            if g.pcm() != &self.pcm {
                return Err(ill("support", "grade not owned by the model PCM"));
            }
        }
        if self.pcm.is_finite() {
            let carrier = self.pcm.carrier()?;
            if self.support != carrier {
                return Err(ill(
                    "support",
                    "for a finite PCM the support must be the whole carrier in canonical order",
                ));
            }
        }
        for ((e, x, y), labels) in &self.hom {
            if *e >= self.support.len() || *x >= n_obj || *y >= n_obj {
                return Err(ill("hom", "index out of range"));
            }
            for (i, l) in labels.iter().enumerate() {
                if labels[..i].contains(l) {
                    return Err(ill(format!("hom {e} {x} {y}"), format!("duplicate label {l}")));
                }
            }
        }
        if self.id.len() != n_obj {
            return Err(ill("id", "one identity label required per object"));
        }
        let zero_ix = self.zero_ix();
        for x in 0..n_obj {
            if self.id[x] >= self.hom_len(zero_ix, x, x) {
                return Err(ill(
                    format!("id {}", self.objects.name(x)),
                    "identity label outside hom(0, x, x)",
                ));
            }
        }
        // composition totality
        for e in 0..self.support.len() {
            for x in 0..n_obj {
                for y in 0..n_obj {
                    let nf = self.hom_len(e, x, y);
                    if nf == 0 {
                        continue;
                    }
                    for z in 0..n_obj {
                        let ng = self.hom_len(e, y, z);
                        if ng == 0 {
                            continue;
                        }
                        let loc = format!("comp {e} {x} {y} {z}");
                        let table = self
                            .comp
                            .get(&(e, x, y, z))
                            .ok_or_else(|| ill(&loc, "missing table"))?;
                        if table.len() != nf || table.iter().any(|r| r.len() != ng) {
                            return Err(ill(&loc, "table has wrong dimensions"));
                        }
                        let nh = self.hom_len(e, x, z);
                        for row in table {
                            for &v in row {
                                if v >= nh {
                                    return Err(ill(&loc, "entry exits its hom-set"));
                                }
                            }
                        }
                    }
                }
            }
        }
        // regrade totality for every comparable support pair
        for e in 0..self.support.len() {
            for e2 in 0..self.support.len() {
                if e == e2 || !self.leq_ix(e, e2) {
                    continue;
                }
                for x in 0..n_obj {
                    for y in 0..n_obj {
                        let nf = self.hom_len(e, x, y);
                        if nf == 0 {
                            continue;
                        }
                        let loc = format!("regrade {e} {e2} {x} {y}");
                        let map = self
                            .regrade
                            .get(&(e, e2, x, y))
                            .ok_or_else(|| ill(&loc, "missing map"))?;
                        if map.len() != nf {
                            return Err(ill(&loc, "map has wrong length"));
                        }
                        let nh = self.hom_len(e2, x, y);
                        for &v in map {
                            if v >= nh {
                                return Err(ill(&loc, "entry exits its hom-set"));
                            }
                        }
                    }
                }
            }
        }
        // tensor totality for orthogonal support pairs with an in-support sum
        for a in 0..self.support.len() {
            for b in 0..self.support.len() {
                let Some(c) = self.add_ix(a, b) else { continue };
                for x in 0..n_obj {
                    for y in 0..n_obj {
                        let nf = self.hom_len(a, x, y);
                        if nf == 0 {
                            continue;
                        }
                        for x2 in 0..n_obj {
                            for y2 in 0..n_obj {
                                let ng = self.hom_len(b, x2, y2);
                                if ng == 0 {
                                    continue;
                                }
                                let loc = format!("tensor {a} {b} {x} {y} {x2} {y2}");
                                let table = self
                                    .tensor
                                    .get(&(a, b, x, y, x2, y2))
                                    .ok_or_else(|| ill(&loc, "missing table"))?;
                                if table.len() != nf || table.iter().any(|r| r.len() != ng) {
                                    return Err(ill(&loc, "table has wrong dimensions"));
                                }
                                let xo = self.objects.mul(x, x2);
                                let yo = self.objects.mul(y, y2);
                                let nh = self.hom_len(c, xo, yo);
                                for row in table {
                                    for &v in row {
                                        if v >= nh {
                                            return Err(ill(&loc, "entry exits its hom-set"));
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        if let Some(braiding) = &self.braiding {
            for x in 0..n_obj {
                for y in 0..n_obj {
                    let loc = format!("braid {} {}", self.objects.name(x), self.objects.name(y));
                    let ix = braiding
                        .get(&(x, y))
                        .ok_or_else(|| ill(&loc, "missing braiding label"))?;
                    let xy = self.objects.mul(x, y);
                    let yx = self.objects.mul(y, x);
                    if *ix >= self.hom_len(zero_ix, xy, yx) {
                        return Err(ill(&loc, "entry exits hom(0, x⊗y, y⊗x)"));
                    }
                }
            }
        }
        Ok(())
    }
}

/// A morphism handle into a shared model, implementing the graded-hom
/// contract used by the global constructions.
#[derive(Debug, Clone)]
pub struct ModelMorphism {
    model: Arc<FiniteGradedModel>,
    grade_ix: usize,
    dom: usize,
    cod: usize,
    label: usize,
}

impl PartialEq for ModelMorphism {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.model, &other.model)
            && self.grade_ix == other.grade_ix
            && self.dom == other.dom
            && self.cod == other.cod
            && self.label == other.label
    }
}

impl ModelMorphism {
    pub fn label_name(&self) -> &str {
        &self.model.hom_labels(self.grade_ix, self.dom, self.cod)[self.label]
    }
}

impl crate::globalcat::GradedHom for ModelMorphism {
    type Boundary = (usize, usize);

    fn pcm(&self) -> Pcm {
        self.model.pcm.clone()
    }

    fn grade(&self) -> Grade {
        self.model.support[self.grade_ix].clone()
    }

    fn dom(&self) -> Self::Boundary {
        (self.dom, 0)
    }

    fn cod(&self) -> Self::Boundary {
        (self.cod, 0)
    }

    fn regrade(&self, c: &Grade) -> Result<Self, crate::globalcat::GlobalError> {
        let e2 = self.model.grade_ix(c).ok_or_else(|| {
            crate::globalcat::GlobalError::Underlying(format!("grade {c} outside the support"))
        })?;
        if !self.model.leq_ix(self.grade_ix, e2) {
            return Err(crate::globalcat::GlobalError::Underlying(format!(
                "grade {} does not extend to {c}",
                self.model.support[self.grade_ix]
            )));
        }
        Ok(ModelMorphism {
            model: Arc::clone(&self.model),
            grade_ix: e2,
            dom: self.dom,
            cod: self.cod,
            label: self.model.regrade_ix(self.grade_ix, e2, self.dom, self.cod, self.label),
        })
    }

    fn compose(&self, other: &Self) -> Result<Self, crate::globalcat::GlobalError> {
        if self.grade_ix != other.grade_ix {
            return Err(crate::globalcat::GlobalError::Underlying(
                "composition requires matching grades".into(),
            ));
        }
        if self.cod != other.dom {
            return Err(crate::globalcat::GlobalError::TypeMismatch {
                expected: self.model.objects.name(self.cod).to_string(),
                found: self.model.objects.name(other.dom).to_string(),
            });
        }
        Ok(ModelMorphism {
            model: Arc::clone(&self.model),
            grade_ix: self.grade_ix,
            dom: self.dom,
            cod: other.cod,
            label: self.model.comp_ix(
                self.grade_ix,
                self.dom,
                self.cod,
                other.cod,
                self.label,
                other.label,
            ),
        })
    }

    fn tensor(&self, other: &Self) -> Result<Self, crate::globalcat::GlobalError> {
        let c = self.model.add_ix(self.grade_ix, other.grade_ix).ok_or_else(|| {
            crate::globalcat::GlobalError::Underlying(
                "grades are not orthogonal within the support".into(),
            )
        })?;
        Ok(ModelMorphism {
            model: Arc::clone(&self.model),
            grade_ix: c,
            dom: self.model.objects.mul(self.dom, other.dom),
            cod: self.model.objects.mul(self.cod, other.cod),
            label: self.model.tensor_ix(
                self.grade_ix,
                other.grade_ix,
                self.dom,
                self.cod,
                other.dom,
                other.cod,
                self.label,
                other.label,
            ),
        })
    }

    fn equal_at(&self, other: &Self, c: &Grade) -> Result<bool, crate::globalcat::GlobalError> {
        let lhs = crate::globalcat::GradedHom::regrade(self, c)?;
        let rhs = crate::globalcat::GradedHom::regrade(other, c)?;
        Ok(lhs.label == rhs.label && lhs.dom == rhs.dom && lhs.cod == rhs.cod)
    }

    fn component_grades(&self) -> Vec<Grade> {
        vec![crate::globalcat::GradedHom::grade(self)]
    }
}

/// Builder for hand-written and generated models. Table entries are given
/// by label names; validation happens in [`ModelBuilder::build`].
pub struct ModelBuilder {
    pcm: Pcm,
    support: Option<Vec<Grade>>,
    objects: Option<ObjectMonoid>,
    hom: BTreeMap<(Grade, String, String), Vec<String>>,
    id: BTreeMap<String, String>,
    comp: BTreeMap<(Grade, String, String, String), Vec<((String, String), String)>>,
    regrade: BTreeMap<(Grade, Grade, String, String), Vec<(String, String)>>,
    tensor: BTreeMap<(Grade, Grade, String, String, String, String), Vec<((String, String), String)>>,
    braiding: Option<BTreeMap<(String, String), String>>,
}

impl ModelBuilder {
    pub fn new(pcm: Pcm) -> ModelBuilder {
        ModelBuilder {
            pcm,
            support: None,
            objects: None,
            hom: BTreeMap::new(),
            id: BTreeMap::new(),
            comp: BTreeMap::new(),
            regrade: BTreeMap::new(),
            tensor: BTreeMap::new(),
            braiding: None,
        }
    }

    pub fn support(mut self, grades: Vec<Grade>) -> Self {
        self.support = Some(grades);
        self
    }

    pub fn objects(mut self, objects: ObjectMonoid) -> Self {
        self.objects = Some(objects);
        self
    }

    pub fn hom(mut self, g: &Grade, x: &str, y: &str, labels: &[&str]) -> Self {
        self.hom.insert(
            (g.clone(), x.to_string(), y.to_string()),
            labels.iter().map(|s| s.to_string()).collect(),
        );
        self
    }

    pub fn id(mut self, x: &str, label: &str) -> Self {
        self.id.insert(x.to_string(), label.to_string());
        self
    }

    pub fn comp(mut self, g: &Grade, x: &str, y: &str, z: &str, f: &str, gg: &str, h: &str) -> Self {
        self.comp
            .entry((g.clone(), x.to_string(), y.to_string(), z.to_string()))
            .or_default()
            .push(((f.to_string(), gg.to_string()), h.to_string()));
        self
    }

    pub fn regrade(mut self, e: &Grade, e2: &Grade, x: &str, y: &str, f: &str, f2: &str) -> Self {
        self.regrade
            .entry((e.clone(), e2.clone(), x.to_string(), y.to_string()))
            .or_default()
            .push((f.to_string(), f2.to_string()));
        self
    }

    #[allow(clippy::too_many_arguments)]
    pub fn tensor(
        mut self,
        a: &Grade,
        b: &Grade,
        x: &str,
        y: &str,
        x2: &str,
        y2: &str,
        f: &str,
        g: &str,
        h: &str,
    ) -> Self {
        self.tensor
            .entry((
                a.clone(),
                b.clone(),
                x.to_string(),
                y.to_string(),
                x2.to_string(),
                y2.to_string(),
            ))
            .or_default()
            .push(((f.to_string(), g.to_string()), h.to_string()));
        self
    }

    pub fn braid(mut self, x: &str, y: &str, label: &str) -> Self {
        self.braiding
            .get_or_insert_with(BTreeMap::new)
            .insert((x.to_string(), y.to_string()), label.to_string());
        self
    }

    pub fn build(self) -> Result<FiniteGradedModel, ModelError> {
        let pcm = self.pcm;
        let support = match self.support {
            Some(s) => s,
            None => pcm.carrier().map_err(|_| {
                ill("support", "an explicit support is required for an infinite PCM")
            })?,
        };
        let objects = self.objects.unwrap_or_else(ObjectMonoid::trivial);

        let grade_ix = |g: &Grade| -> Result<usize, ModelError> {
            support
                .iter()
                .position(|s| s == g)
                .ok_or_else(|| ModelError::Unknown { what: "grade".into(), name: g.to_string() })
        };
        let obj_ix = |n: &str| -> Result<usize, ModelError> {
            objects
                .index(n)
                .ok_or_else(|| ModelError::Unknown { what: "object".into(), name: n.to_string() })
        };

        let mut hom: BTreeMap<HomKey, Vec<String>> = BTreeMap::new();
        for ((g, x, y), labels) in &self.hom {
            hom.insert((grade_ix(g)?, obj_ix(x)?, obj_ix(y)?), labels.clone());
        }
        let hom_ix = |hom: &BTreeMap<HomKey, Vec<String>>,
                      key: HomKey,
                      label: &str|
         -> Result<usize, ModelError> {
            hom.get(&key)
                .and_then(|ls| ls.iter().position(|l| l == label))
                .ok_or_else(|| ModelError::Unknown { what: "label".into(), name: label.to_string() })
        };

        let zero_ix = grade_ix(&pcm.zero())?;
        let mut id = Vec::with_capacity(objects.len());
        for x in 0..objects.len() {
            let name = objects.name(x).to_string();
            let label = self
                .id
                .get(&name)
                .ok_or_else(|| ill(format!("id {name}"), "missing identity label"))?;
            id.push(hom_ix(&hom, (zero_ix, x, x), label)?);
        }

        let mut comp: BTreeMap<CompKey, Vec<Vec<usize>>> = BTreeMap::new();
        for ((g, x, y, z), entries) in &self.comp {
            let (e, xi, yi, zi) = (grade_ix(g)?, obj_ix(x)?, obj_ix(y)?, obj_ix(z)?);
            let nf = hom.get(&(e, xi, yi)).map(Vec::len).unwrap_or(0);
            let ng = hom.get(&(e, yi, zi)).map(Vec::len).unwrap_or(0);
            let mut table = vec![vec![usize::MAX; ng]; nf];
            for ((f, gg), h) in entries {
                let fi = hom_ix(&hom, (e, xi, yi), f)?;
                let gi = hom_ix(&hom, (e, yi, zi), gg)?;
                table[fi][gi] = hom_ix(&hom, (e, xi, zi), h)?;
            }
            if table.iter().any(|r| r.iter().any(|&v| v == usize::MAX)) {
                return Err(ill(format!("comp {g} {x} {y} {z}"), "incomplete table"));
            }
            comp.insert((e, xi, yi, zi), table);
        }

        let mut regrade: BTreeMap<RegradeKey, Vec<usize>> = BTreeMap::new();
        for ((e, e2, x, y), entries) in &self.regrade {
            let (ei, e2i, xi, yi) = (grade_ix(e)?, grade_ix(e2)?, obj_ix(x)?, obj_ix(y)?);
            let nf = hom.get(&(ei, xi, yi)).map(Vec::len).unwrap_or(0);
            let mut map = vec![usize::MAX; nf];
            for (f, f2) in entries {
                let fi = hom_ix(&hom, (ei, xi, yi), f)?;
                map[fi] = hom_ix(&hom, (e2i, xi, yi), f2)?;
            }
            if map.iter().any(|&v| v == usize::MAX) {
                return Err(ill(format!("regrade {e} {e2} {x} {y}"), "incomplete map"));
            }
            regrade.insert((ei, e2i, xi, yi), map);
        }

        let mut tensor: BTreeMap<TensorKey, Vec<Vec<usize>>> = BTreeMap::new();
        for ((a, b, x, y, x2, y2), entries) in &self.tensor {
            let (ai, bi) = (grade_ix(a)?, grade_ix(b)?);
            let (xi, yi, x2i, y2i) = (obj_ix(x)?, obj_ix(y)?, obj_ix(x2)?, obj_ix(y2)?);
            let nf = hom.get(&(ai, xi, yi)).map(Vec::len).unwrap_or(0);
            let ng = hom.get(&(bi, x2i, y2i)).map(Vec::len).unwrap_or(0);
            let sum = pcm
                .add(&support[ai], &support[bi])?
                .and_then(|s| support.iter().position(|g| *g == s))
                .ok_or_else(|| ill("tensor", "grades are not orthogonal within the support"))?;
            let xo = objects.mul(xi, x2i);
            let yo = objects.mul(yi, y2i);
            let mut table = vec![vec![usize::MAX; ng]; nf];
            for ((f, g), h) in entries {
                let fi = hom_ix(&hom, (ai, xi, yi), f)?;
                let gi = hom_ix(&hom, (bi, x2i, y2i), g)?;
                table[fi][gi] = hom_ix(&hom, (sum, xo, yo), h)?;
            }
            if table.iter().any(|r| r.iter().any(|&v| v == usize::MAX)) {
                return Err(ill("tensor", "incomplete table"));
            }
            tensor.insert((ai, bi, xi, yi, x2i, y2i), table);
        }

        let braiding = match self.braiding {
            None => None,
            Some(map) => {
                let mut out = BTreeMap::new();
                for ((x, y), label) in &map {
                    let (xi, yi) = (obj_ix(x)?, obj_ix(y)?);
                    let xy = objects.mul(xi, yi);
                    let yx = objects.mul(yi, xi);
                    out.insert((xi, yi), hom_ix(&hom, (zero_ix, xy, yx), label)?);
                }
                Some(out)
            }
        };

        let model = FiniteGradedModel {
            pcm,
            support,
            objects,
            hom,
            id,
            comp,
            regrade,
            tensor,
            braiding,
        };
        model.validate()?;
        Ok(model)
    }
}

#[cfg(test)]
mod tests;
