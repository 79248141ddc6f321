//! The free graded monoidal category over a graded signature.
//!
//! Objects are words over the signature's object generators (the free monoid;
//! the empty word is the unit `I`). A morphism is an ambient grade together
//! with a list of slices, each slice a single generator whiskered by identity
//! wires on both sides. Composition concatenates slice lists at a shared
//! ambient grade; the monoidal product pads and concatenates, and exists
//! exactly when the ambient grades are orthogonal.
//!
//! Equality at a grade is exchange-reachability of slice lists: adjacent
//! slices swap when their wire intervals are disjoint and the sum of their
//! generator grades is defined and bounded by the ambient grade. The greedy
//! canonical form in [`canonical_form`](FreeMorphism::canonical_form) is
//! cross-checked against the breadth-first [`equal_oracle`].

mod effectful;
mod normal;
pub mod random;

pub use effectful::EffectfulView;
pub use normal::equal_oracle;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::pcm::{Grade, Pcm, PcmError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TermError {
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("unknown object {0}")]
    UnknownObject(String),
    #[error("duplicate name {0}")]
    DuplicateName(String),
    #[error("grade is not owned by the signature's PCM")]
    OwnerMismatch,
    #[error("boundary mismatch: expected {expected}, found {found}")]
    TypeMismatch { expected: String, found: String },
    #[error("grade {from} does not extend to {to}")]
    NotLeq { from: String, to: String },
    #[error("grades {left} and {right} differ; use a global composition (gcompose) for heterogeneous grades")]
    GradeMismatch { left: String, right: String },
    #[error("grades {left} and {right} are not orthogonal: their sum is undefined")]
    NonOrthogonalGrades { left: String, right: String },
    #[error("morphisms belong to different signatures")]
    SignatureMismatch,
    #[error("search budget exceeded after {0} states")]
    BudgetExceeded(usize),
    #[error("PCM error: {0}")]
    Pcm(#[from] PcmError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenDecl {
    pub name: String,
    pub dom: Word,
    pub cod: Word,
    pub grade: Grade,
}

#[derive(Debug, PartialEq, Eq)]
struct SigData {
    pcm: Pcm,
    objects: Vec<String>,
    gens: Vec<GenDecl>,
}

/// A graded signature: object generators plus morphism generators with a
/// declared grade each.
#[derive(Debug, Clone)]
pub struct Signature(Arc<SigData>);

impl PartialEq for Signature {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Signature {}

/// A word over the object generators; the empty word is the monoidal unit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word(self.0[range].to_vec())
    }
}

pub struct SignatureBuilder {
    pcm: Pcm,
    objects: Vec<String>,
    gens: Vec<(String, Vec<String>, Vec<String>, Grade)>,
}

impl SignatureBuilder {
    pub fn new(pcm: Pcm) -> SignatureBuilder {
        SignatureBuilder { pcm, objects: Vec::new(), gens: Vec::new() }
    }

    pub fn object(mut self, name: &str) -> SignatureBuilder {
        self.objects.push(name.to_string());
        self
    }

    pub fn gen(mut self, name: &str, dom: &[&str], cod: &[&str], grade: Grade) -> SignatureBuilder {
        self.gens.push((
            name.to_string(),
            dom.iter().map(|s| s.to_string()).collect(),
            cod.iter().map(|s| s.to_string()).collect(),
            grade,
        ));
        self
    }

    pub fn build(self) -> Result<Signature, TermError> {
        let mut data = SigData { pcm: self.pcm, objects: Vec::new(), gens: Vec::new() };
        for name in self.objects {
            if data.objects.contains(&name) {
                return Err(TermError::DuplicateName(name));
            }
            data.objects.push(name);
        }
        let sig = Signature(Arc::new(data));
        let mut gens = Vec::new();
        for (name, dom, cod, grade) in self.gens {
            if gens.iter().any(|g: &GenDecl| g.name == name) || sig.0.objects.contains(&name) {
                return Err(TermError::DuplicateName(name));
            }
            if grade.pcm() != &sig.0.pcm {
                return Err(TermError::OwnerMismatch);
            }
            let dom = sig.word_of_names(&dom)?;
            let cod = sig.word_of_names(&cod)?;
            gens.push(GenDecl { name, dom, cod, grade });
        }
        let data = SigData {
            pcm: sig.0.pcm.clone(),
            objects: sig.0.objects.clone(),
            gens,
        };
        Ok(Signature(Arc::new(data)))
    }
}

impl Signature {
    pub fn pcm(&self) -> &Pcm {
        &self.0.pcm
    }

    pub fn objects(&self) -> &[String] {
        &self.0.objects
    }

    pub fn gens(&self) -> &[GenDecl] {
        &self.0.gens
    }

    pub fn gen_named(&self, name: &str) -> Result<(usize, &GenDecl), TermError> {
        self.0
            .gens
            .iter()
            .enumerate()
            .find(|(_, g)| g.name == name)
            .ok_or_else(|| TermError::UnknownGenerator(name.to_string()))
    }

    fn word_of_names(&self, names: &[String]) -> Result<Word, TermError> {
        let mut ids = Vec::with_capacity(names.len());
        for n in names {
            let ix = self
                .0
                .objects
                .iter()
                .position(|o| o == n)
                .ok_or_else(|| TermError::UnknownObject(n.clone()))?;
            ids.push(ix);
        }
        Ok(Word(ids))
    }

    pub fn word(&self, names: &[&str]) -> Result<Word, TermError> {
        self.word_of_names(&names.iter().map(|s| s.to_string()).collect::<Vec<_>>())
    }

    pub fn word_to_string(&self, w: &Word) -> String {
        if w.is_empty() {
            "I".to_string()
        } else {
            w.0.iter().map(|&i| self.0.objects[i].as_str()).collect::<Vec<_>>().join(" ")
        }
    }
}

/// A generator whiskered by identity wires: its domain is
/// `left · dom(gen) · right`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Slice {
    pub left: Word,
    pub gen: usize,
    pub right: Word,
}

/// A morphism of the free graded category: an ambient grade and a chain of
/// slices from `dom` to `cod`. Every slice's generator grade must extend to
/// the ambient grade.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeMorphism {
    sig: Signature,
    ambient: Grade,
    dom: Word,
    cod: Word,
    slices: Vec<Slice>,
}

impl FreeMorphism {
    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn ambient_grade(&self) -> &Grade {
        &self.ambient
    }

    pub fn dom(&self) -> &Word {
        &self.dom
    }

    pub fn cod(&self) -> &Word {
        &self.cod
    }

    pub fn slices(&self) -> &[Slice] {
        &self.slices
    }

    pub fn slice_grades(&self) -> Vec<Grade> {
        self.slices.iter().map(|s| self.sig.gens()[s.gen].grade.clone()).collect()
    }

    fn slice_dom(sig: &Signature, s: &Slice) -> Word {
        s.left.concat(&sig.gens()[s.gen].dom).concat(&s.right)
    }

    fn slice_cod(sig: &Signature, s: &Slice) -> Word {
        s.left.concat(&sig.gens()[s.gen].cod).concat(&s.right)
    }

    /// The identity on `w` at grade `c` (an empty slice list).
    pub fn identity(sig: &Signature, w: Word, c: Grade) -> Result<FreeMorphism, TermError> {
        if c.pcm() != sig.pcm() {
            return Err(TermError::OwnerMismatch);
        }
        Ok(FreeMorphism {
            sig: sig.clone(),
            ambient: c,
            dom: w.clone(),
            cod: w,
            slices: Vec::new(),
        })
    }

    /// The one-slice morphism of a declared generator, at its own grade.
    pub fn generator(sig: &Signature, name: &str) -> Result<FreeMorphism, TermError> {
        let (ix, decl) = sig.gen_named(name)?;
        Ok(FreeMorphism {
            sig: sig.clone(),
            ambient: decl.grade.clone(),
            dom: decl.dom.clone(),
            cod: decl.cod.clone(),
            slices: vec![Slice { left: Word::empty(), gen: ix, right: Word::empty() }],
        })
    }

    /// Regrade to `c`; requires the current ambient grade to extend to `c`.
    pub fn regrade(&self, c: &Grade) -> Result<FreeMorphism, TermError> {
        let pcm = self.sig.pcm();
        if c.pcm() != pcm {
            return Err(TermError::OwnerMismatch);
        }
        if !pcm.leq(&self.ambient, c)? {
            return Err(TermError::NotLeq {
                from: self.ambient.to_string(),
                to: c.to_string(),
            });
        }
        let mut out = self.clone();
        out.ambient = c.clone();
        Ok(out)
    }

    /// Grade-homogeneous sequential composition: `self ⨾ other`.
    pub fn compose(&self, other: &FreeMorphism) -> Result<FreeMorphism, TermError> {
        if self.sig != other.sig {
            return Err(TermError::SignatureMismatch);
        }
        if self.ambient != other.ambient {
            return Err(TermError::GradeMismatch {
                left: self.ambient.to_string(),
                right: other.ambient.to_string(),
            });
        }
        if self.cod != other.dom {
            return Err(TermError::TypeMismatch {
                expected: self.sig.word_to_string(&self.cod),
                found: self.sig.word_to_string(&other.dom),
            });
        }
        let mut slices = self.slices.clone();
        slices.extend(other.slices.iter().cloned());
        let out = FreeMorphism {
            sig: self.sig.clone(),
            ambient: self.ambient.clone(),
            dom: self.dom.clone(),
            cod: other.cod.clone(),
            slices,
        };
        debug_assert!(out.check_invariants().is_ok());
        Ok(out)
    }

    /// Monoidal product; defined exactly when the ambient grades are
    /// orthogonal, with the sum as the resulting grade.
    pub fn tensor(&self, other: &FreeMorphism) -> Result<FreeMorphism, TermError> {
        if self.sig != other.sig {
            return Err(TermError::SignatureMismatch);
        }
        let pcm = self.sig.pcm();
        let ambient = match pcm.add(&self.ambient, &other.ambient)? {
            Some(g) => g,
            None => {
                return Err(TermError::NonOrthogonalGrades {
                    left: self.ambient.to_string(),
                    right: other.ambient.to_string(),
                })
            }
        };
        let mut slices = Vec::with_capacity(self.slices.len() + other.slices.len());
        for s in &self.slices {
            slices.push(Slice {
                left: s.left.clone(),
                gen: s.gen,
                right: s.right.concat(&other.dom),
            });
        }
        for s in &other.slices {
            slices.push(Slice {
                left: self.cod.concat(&s.left),
                gen: s.gen,
                right: s.right.clone(),
            });
        }
        let out = FreeMorphism {
            sig: self.sig.clone(),
            ambient,
            dom: self.dom.concat(&other.dom),
            cod: self.cod.concat(&other.cod),
            slices,
        };
        debug_assert!(out.check_invariants().is_ok());
        Ok(out)
    }

    /// Whether every slice grade extends to `c`.
    pub fn admissible_at(&self, c: &Grade) -> Result<bool, TermError> {
        let pcm = self.sig.pcm();
        if c.pcm() != pcm {
            return Err(TermError::OwnerMismatch);
        }
        for g in self.slice_grades() {
            if !pcm.leq(&g, c)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All grades the slice list is admissible at (finite PCMs only).
    pub fn valid_grades(&self) -> Result<Vec<Grade>, TermError> {
        let pcm = self.sig.pcm();
        let mut out = Vec::new();
        for c in pcm.carrier()? {
            if self.admissible_at(&c)? {
                out.push(c);
            }
        }
        Ok(out)
    }

    /// The deterministic representative of this morphism's exchange class at
    /// its ambient grade.
    pub fn canonical_form(&self) -> FreeMorphism {
        normal::canonical_form(self)
    }

    /// Decidable equality at grade `c`: both sides are regraded to `c` and
    /// their canonical forms compared structurally.
    pub fn equal_at(&self, other: &FreeMorphism, c: &Grade) -> Result<bool, TermError> {
        if self.sig != other.sig {
            return Err(TermError::SignatureMismatch);
        }
        if self.dom != other.dom || self.cod != other.cod {
            return Err(TermError::TypeMismatch {
                expected: format!(
                    "{} -> {}",
                    self.sig.word_to_string(&self.dom),
                    self.sig.word_to_string(&self.cod)
                ),
                found: format!(
                    "{} -> {}",
                    self.sig.word_to_string(&other.dom),
                    self.sig.word_to_string(&other.cod)
                ),
            });
        }
        let lhs = self.regrade(c)?.canonical_form();
        let rhs = other.regrade(c)?.canonical_form();
        Ok(lhs.slices == rhs.slices)
    }

    /// Check the chaining and admissibility invariants; used by tests and
    /// debug assertions after structural operations.
    pub fn check_invariants(&self) -> Result<(), TermError> {
        let pcm = self.sig.pcm();
        let mut current = self.dom.clone();
        for s in &self.slices {
            let sdom = Self::slice_dom(&self.sig, s);
            if sdom != current {
                return Err(TermError::TypeMismatch {
                    expected: self.sig.word_to_string(&current),
                    found: self.sig.word_to_string(&sdom),
                });
            }
            current = Self::slice_cod(&self.sig, s);
            let g = &self.sig.gens()[s.gen].grade;
            if !pcm.leq(g, &self.ambient)? {
                return Err(TermError::NotLeq {
                    from: g.to_string(),
                    to: self.ambient.to_string(),
                });
            }
        }
        if current != self.cod {
            return Err(TermError::TypeMismatch {
                expected: self.sig.word_to_string(&self.cod),
                found: self.sig.word_to_string(&current),
            });
        }
        Ok(())
    }

    /// Replace the slice list of a morphism, revalidating the invariants.
    pub(crate) fn with_slices(&self, slices: Vec<Slice>) -> Result<FreeMorphism, TermError> {
        let mut out = self.clone();
        out.slices = slices;
        out.check_invariants()?;
        Ok(out)
    }

    /// Render one slice per line as `left | gen@grade | right`.
    pub fn render_slices(&self) -> String {
        let mut out = String::new();
        for s in &self.slices {
            let decl = &self.sig.gens()[s.gen];
            out.push_str(&format!(
                "{} | {}@{} | {}\n",
                self.sig.word_to_string(&s.left),
                decl.name,
                decl.grade,
                self.sig.word_to_string(&s.right)
            ));
        }
        out
    }

    /// Compact one-line rendering used by `gcompose` output.
    pub fn render_compact(&self) -> String {
        if self.slices.is_empty() {
            return format!("id[{}]", self.sig.word_to_string(&self.dom).replace(' ', "."));
        }
        self.slices
            .iter()
            .map(|s| {
                let decl = &self.sig.gens()[s.gen];
                format!(
                    "{}|{}@{}|{}",
                    self.sig.word_to_string(&s.left).replace(' ', "."),
                    decl.name,
                    decl.grade,
                    self.sig.word_to_string(&s.right).replace(' ', ".")
                )
            })
            .collect::<Vec<_>>()
            .join(" ; ")
    }
}

impl fmt::Display for FreeMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} -> {} @ {}",
            self.sig.word_to_string(&self.dom),
            self.sig.word_to_string(&self.cod),
            self.ambient
        )
    }
}

#[cfg(test)]
mod tests;
