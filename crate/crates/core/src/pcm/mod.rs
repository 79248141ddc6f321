//! Partial commutative monoids.
//!
//! A PCM `(E, ⊕, 0)` is a set with a partial commutative associative
//! operation and a unit. Grades of morphisms are drawn from a PCM; the
//! partiality of `⊕` is what makes monoidal products of morphisms partial.
//!
//! Built-in kinds:
//!
//! - `singleton`: one element, total operation.
//! - `two`: `{0,1}` with `1 ⊕ 1` undefined (effectful/pure grading).
//! - `three`: `{0,1,2}` with `max`, except `2 ⊕ 2` undefined.
//! - `powerset`: finite subsets under disjoint union (devices).
//! - `rw`: pairs (reads, writes) of finite sets; sums exist exactly for
//!   race-free pairs (read-read overlap allowed, writes exclusive).
//! - `interval`: exact rationals in `[0, r]` under bounded addition.
//! - `product`: componentwise product of PCMs.
//! - `nat_plus`, `nat_max`: total monoids on the naturals.
//! - `semilattice`: a finite join-semilattice table (always validated).
//! - `table`: an arbitrary finite partial addition table.
//!
//! Every grade carries the identity of its owning PCM; mixing grades across
//! instances is reported as [`PcmError::OwnerMismatch`] rather than coerced.

mod hom;
mod laws;
pub mod syntax;

pub use hom::{check_hom, PcmHom};
pub use laws::{check_effect_algebra, check_pcm_laws, check_separation, sample_pool};

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PcmError {
    #[error("grade does not belong to this PCM")]
    OwnerMismatch,
    #[error("malformed PCM description: {0}")]
    MalformedSpec(String),
    #[error("PCM law {law} fails at {counterexample}")]
    LawViolation { law: String, counterexample: String },
    #[error("operation requires a finite carrier")]
    InfiniteCarrier,
    #[error("no least upper bound exists")]
    NoJoin,
    #[error("the extension preorder has no top element")]
    NoTop,
    #[error("not an effect algebra: {0}")]
    NotEffectAlgebra(String),
    #[error("extension preorder is not decidable for this kind")]
    Undecidable,
    #[error("not a PCM homomorphism: {0}")]
    InvalidHom(String),
    #[error("rational arithmetic overflow")]
    Overflow,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) enum PcmKind {
    Singleton,
    Two,
    Three,
    Powerset { devices: Vec<String> },
    ReadWrite { locations: Vec<String> },
    Interval { bound: Rational },
    Product { components: Vec<Pcm> },
    NatPlus,
    NatMax,
    Semilattice { elems: Vec<String>, join: Vec<Vec<usize>>, unit: usize },
    Table { elems: Vec<String>, add: Vec<Vec<Option<usize>>>, zero: usize },
}

/// A partial commutative monoid instance. Cheap to clone; equality is
/// structural on the stored description.
#[derive(Debug, Clone)]
pub struct Pcm(Arc<PcmKind>);

impl PartialEq for Pcm {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Pcm {}

impl std::hash::Hash for Pcm {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        // structural, matching the PartialEq above
        self.0.hash(state);
    }
}

/// The payload of a grade. Variants correspond to PCM kinds; sets are stored
/// as bitmasks over the instance's carrier name list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Payload {
    Unit,
    Small(u8),
    Mask(u32),
    RwMask { reads: u32, writes: u32 },
    Ratio(Rational),
    Tuple(Vec<Payload>),
    Nat(u64),
    Index(usize),
}

/// An element of a specific PCM instance.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Grade {
    pcm: Pcm,
    payload: Payload,
}

impl PartialOrd for Grade {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Grade {
    // Payload order within one PCM; grades of distinct PCMs should not be
    // mixed in ordered collections.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.payload.cmp(&other.payload)
    }
}

impl Grade {
    pub fn pcm(&self) -> &Pcm {
        &self.pcm
    }

    pub fn payload(&self) -> &Payload {
        &self.payload
    }

    pub fn is_zero(&self) -> bool {
        self.payload == self.pcm.zero().payload
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        syntax::format_grade(self, f)
    }
}

fn unique_names(names: &[String], what: &str) -> Result<(), PcmError> {
    for (i, n) in names.iter().enumerate() {
        if n.is_empty() {
            return Err(PcmError::MalformedSpec(format!("empty {what} name")));
        }
        if names[..i].contains(n) {
            return Err(PcmError::MalformedSpec(format!("duplicate {what} name {n}")));
        }
    }
    if names.len() > 16 {
        return Err(PcmError::MalformedSpec(format!("at most 16 {what} names supported")));
    }
    Ok(())
}

impl Pcm {
    fn from_kind(kind: PcmKind) -> Pcm {
        Pcm(Arc::new(kind))
    }

    pub(crate) fn kind(&self) -> &PcmKind {
        &self.0
    }

    pub fn singleton() -> Pcm {
        Pcm::from_kind(PcmKind::Singleton)
    }

    pub fn two() -> Pcm {
        Pcm::from_kind(PcmKind::Two)
    }

    pub fn three() -> Pcm {
        Pcm::from_kind(PcmKind::Three)
    }

    pub fn powerset<S: Into<String>>(devices: Vec<S>) -> Result<Pcm, PcmError> {
        let devices: Vec<String> = devices.into_iter().map(Into::into).collect();
        unique_names(&devices, "device")?;
        Ok(Pcm::from_kind(PcmKind::Powerset { devices }))
    }

    pub fn read_write<S: Into<String>>(locations: Vec<S>) -> Result<Pcm, PcmError> {
        let locations: Vec<String> = locations.into_iter().map(Into::into).collect();
        unique_names(&locations, "location")?;
        Ok(Pcm::from_kind(PcmKind::ReadWrite { locations }))
    }

    pub fn interval(bound: Rational) -> Result<Pcm, PcmError> {
        if !bound.is_positive() {
            return Err(PcmError::MalformedSpec(format!(
                "interval bound must be positive, got {bound}"
            )));
        }
        Ok(Pcm::from_kind(PcmKind::Interval { bound }))
    }

    pub fn product(components: Vec<Pcm>) -> Result<Pcm, PcmError> {
        if components.is_empty() {
            return Err(PcmError::MalformedSpec("product needs at least one component".into()));
        }
        Ok(Pcm::from_kind(PcmKind::Product { components }))
    }

    pub fn nat_plus() -> Pcm {
        Pcm::from_kind(PcmKind::NatPlus)
    }

    pub fn nat_max() -> Pcm {
        Pcm::from_kind(PcmKind::NatMax)
    }

    /// A finite join-semilattice given by its full join table. The table is
    /// always validated (idempotence, commutativity, associativity, and the
    /// existence of a bottom element acting as the PCM unit).
    pub fn semilattice<S: Into<String>>(
        elems: Vec<S>,
        join: Vec<Vec<usize>>,
    ) -> Result<Pcm, PcmError> {
        let elems: Vec<String> = elems.into_iter().map(Into::into).collect();
        unique_names(&elems, "element")?;
        let n = elems.len();
        if join.len() != n || join.iter().any(|row| row.len() != n) {
            return Err(PcmError::MalformedSpec("join table must be n x n".into()));
        }
        for row in &join {
            for &v in row {
                if v >= n {
                    return Err(PcmError::MalformedSpec("join table entry out of range".into()));
                }
            }
        }
        let name = |i: usize| elems[i].clone();
        for a in 0..n {
            if join[a][a] != a {
                return Err(PcmError::LawViolation {
                    law: "IDEMPOTENCE".into(),
                    counterexample: name(a),
                });
            }
            for b in 0..n {
                if join[a][b] != join[b][a] {
                    return Err(PcmError::LawViolation {
                        law: "COMMUTATIVITY".into(),
                        counterexample: format!("{} {}", name(a), name(b)),
                    });
                }
                for c in 0..n {
                    if join[join[a][b]][c] != join[a][join[b][c]] {
                        return Err(PcmError::LawViolation {
                            law: "ASSOCIATIVITY".into(),
                            counterexample: format!("{} {} {}", name(a), name(b), name(c)),
                        });
                    }
                }
            }
        }
        let unit = (0..n)
            .find(|&u| (0..n).all(|a| join[u][a] == a))
            .ok_or_else(|| PcmError::MalformedSpec("semilattice has no bottom element".into()))?;
        Ok(Pcm::from_kind(PcmKind::Semilattice { elems, join, unit }))
    }

    /// An arbitrary finite partial addition table. With `validate` set the
    /// full PCM law suite must pass, otherwise construction fails with the
    /// first witnessing tuple.
    pub fn table<S: Into<String>>(
        elems: Vec<S>,
        add: Vec<Vec<Option<usize>>>,
        zero: usize,
        validate: bool,
    ) -> Result<Pcm, PcmError> {
        let elems: Vec<String> = elems.into_iter().map(Into::into).collect();
        unique_names(&elems, "element")?;
        let n = elems.len();
        if zero >= n {
            return Err(PcmError::MalformedSpec("zero index out of range".into()));
        }
        if add.len() != n || add.iter().any(|row| row.len() != n) {
            return Err(PcmError::MalformedSpec("addition table must be n x n".into()));
        }
        for row in &add {
            for v in row.iter().flatten() {
                if *v >= n {
                    return Err(PcmError::MalformedSpec("table entry out of range".into()));
                }
            }
        }
        let pcm = Pcm::from_kind(PcmKind::Table { elems, add, zero });
        if validate {
            let report = laws::check_pcm_laws(&pcm, 0, 0);
            if let Some(item) = report.items.iter().find(|i| !i.passed) {
                return Err(PcmError::LawViolation {
                    law: item.name.clone(),
                    counterexample: item.counterexample.clone().unwrap_or_default(),
                });
            }
        }
        Ok(pcm)
    }

    /// Run the law suite on an already-built instance (finite kinds check
    /// exhaustively; infinite kinds over `budget` sampled triples).
    pub fn validate(&self, budget: usize, seed: u64) -> Result<(), PcmError> {
        let report = laws::check_pcm_laws(self, budget, seed);
        match report.items.iter().find(|i| !i.passed) {
            None => Ok(()),
            Some(item) => Err(PcmError::LawViolation {
                law: item.name.clone(),
                counterexample: item.counterexample.clone().unwrap_or_default(),
            }),
        }
    }

    fn grade(&self, payload: Payload) -> Grade {
        Grade { pcm: self.clone(), payload }
    }

    pub fn zero(&self) -> Grade {
        let payload = match self.kind() {
            PcmKind::Singleton => Payload::Unit,
            PcmKind::Two | PcmKind::Three => Payload::Small(0),
            PcmKind::Powerset { .. } => Payload::Mask(0),
            PcmKind::ReadWrite { .. } => Payload::RwMask { reads: 0, writes: 0 },
            PcmKind::Interval { .. } => Payload::Ratio(Rational::ZERO),
            PcmKind::Product { components } => {
                Payload::Tuple(components.iter().map(|c| c.zero().payload).collect())
            }
            PcmKind::NatPlus | PcmKind::NatMax => Payload::Nat(0),
            PcmKind::Semilattice { unit, .. } => Payload::Index(*unit),
            PcmKind::Table { zero, .. } => Payload::Index(*zero),
        };
        self.grade(payload)
    }

    pub fn is_finite(&self) -> bool {
        match self.kind() {
            PcmKind::Singleton
            | PcmKind::Two
            | PcmKind::Three
            | PcmKind::Powerset { .. }
            | PcmKind::ReadWrite { .. }
            | PcmKind::Semilattice { .. }
            | PcmKind::Table { .. } => true,
            PcmKind::Interval { .. } | PcmKind::NatPlus | PcmKind::NatMax => false,
            PcmKind::Product { components } => components.iter().all(Pcm::is_finite),
        }
    }

    /// Whether `⊕` is total on this instance.
    pub fn is_total(&self) -> bool {
        match self.kind() {
            PcmKind::Singleton | PcmKind::NatPlus | PcmKind::NatMax | PcmKind::Semilattice { .. } => true,
            PcmKind::Two | PcmKind::Three | PcmKind::Interval { .. } => false,
            PcmKind::Powerset { devices } => devices.is_empty(),
            PcmKind::ReadWrite { locations } => locations.is_empty(),
            PcmKind::Product { components } => components.iter().all(Pcm::is_total),
            PcmKind::Table { add, .. } => add.iter().all(|row| row.iter().all(Option::is_some)),
        }
    }

    /// Enumerate the carrier in canonical order.
    pub fn carrier(&self) -> Result<Vec<Grade>, PcmError> {
        let payloads = self.carrier_payloads()?;
        Ok(payloads.into_iter().map(|p| self.grade(p)).collect())
    }

    fn carrier_payloads(&self) -> Result<Vec<Payload>, PcmError> {
        match self.kind() {
            PcmKind::Singleton => Ok(vec![Payload::Unit]),
            PcmKind::Two => Ok(vec![Payload::Small(0), Payload::Small(1)]),
            PcmKind::Three => Ok(vec![Payload::Small(0), Payload::Small(1), Payload::Small(2)]),
            PcmKind::Powerset { devices } => {
                Ok((0u32..1 << devices.len()).map(Payload::Mask).collect())
            }
            PcmKind::ReadWrite { locations } => {
                let n = 1u32 << locations.len();
                let mut out = Vec::new();
                for reads in 0..n {
                    for writes in 0..n {
                        out.push(Payload::RwMask { reads, writes });
                    }
                }
                Ok(out)
            }
            PcmKind::Product { components } => {
                let mut out = vec![Vec::new()];
                for c in components {
                    let cp = c.carrier_payloads()?;
                    let mut next = Vec::with_capacity(out.len() * cp.len());
                    for prefix in &out {
                        for p in &cp {
                            let mut t = prefix.clone();
                            t.push(p.clone());
                            next.push(t);
                        }
                    }
                    out = next;
                }
                Ok(out.into_iter().map(Payload::Tuple).collect())
            }
            PcmKind::Semilattice { elems, .. } | PcmKind::Table { elems, .. } => {
                Ok((0..elems.len()).map(Payload::Index).collect())
            }
            PcmKind::Interval { .. } | PcmKind::NatPlus | PcmKind::NatMax => {
                Err(PcmError::InfiniteCarrier)
            }
        }
    }

    pub fn index_in_carrier(&self, g: &Grade) -> Result<usize, PcmError> {
        self.check_owner(g)?;
        let carrier = self.carrier()?;
        carrier
            .iter()
            .position(|c| c.payload == g.payload)
            .ok_or(PcmError::OwnerMismatch)
    }

    fn check_owner(&self, g: &Grade) -> Result<(), PcmError> {
        if &g.pcm == self {
            Ok(())
        } else {
            Err(PcmError::OwnerMismatch)
        }
    }

    /// The partial addition. Returns `Ok(None)` when `a ⊕ b` is undefined.
    pub fn add(&self, a: &Grade, b: &Grade) -> Result<Option<Grade>, PcmError> {
        self.check_owner(a)?;
        self.check_owner(b)?;
        Ok(self.add_payload(&a.payload, &b.payload)?.map(|p| self.grade(p)))
    }

    fn add_payload(&self, a: &Payload, b: &Payload) -> Result<Option<Payload>, PcmError> {
        match (self.kind(), a, b) {
            (PcmKind::Singleton, Payload::Unit, Payload::Unit) => Ok(Some(Payload::Unit)),
            (PcmKind::Two, Payload::Small(x), Payload::Small(y)) => {
                Ok(if *x == 1 && *y == 1 { None } else { Some(Payload::Small(x.max(y).to_owned())) })
            }
            (PcmKind::Three, Payload::Small(x), Payload::Small(y)) => {
                Ok(if *x == 2 && *y == 2 { None } else { Some(Payload::Small(*x.max(y))) })
            }
            (PcmKind::Powerset { .. }, Payload::Mask(x), Payload::Mask(y)) => {
                Ok(if x & y == 0 { Some(Payload::Mask(x | y)) } else { None })
            }
            (
                PcmKind::ReadWrite { .. },
                Payload::RwMask { reads: r1, writes: w1 },
                Payload::RwMask { reads: r2, writes: w2 },
            ) => {
                let race = w1 & (r2 | w2) != 0 || w2 & (r1 | w1) != 0;
                Ok(if race {
                    None
                } else {
                    Some(Payload::RwMask { reads: r1 | r2, writes: w1 | w2 })
                })
            }
            (PcmKind::Interval { bound }, Payload::Ratio(x), Payload::Ratio(y)) => {
                let sum = x.add(y).map_err(|_| PcmError::Overflow)?;
                Ok(if sum <= *bound { Some(Payload::Ratio(sum)) } else { None })
            }
            (PcmKind::Product { components }, Payload::Tuple(xs), Payload::Tuple(ys)) => {
                let mut out = Vec::with_capacity(components.len());
                for ((c, x), y) in components.iter().zip(xs).zip(ys) {
                    match c.add_payload(x, y)? {
                        Some(p) => out.push(p),
                        None => return Ok(None),
                    }
                }
                Ok(Some(Payload::Tuple(out)))
            }
            (PcmKind::NatPlus, Payload::Nat(x), Payload::Nat(y)) => {
                Ok(Some(Payload::Nat(x.checked_add(*y).ok_or(PcmError::Overflow)?)))
            }
            (PcmKind::NatMax, Payload::Nat(x), Payload::Nat(y)) => {
                Ok(Some(Payload::Nat(*x.max(y))))
            }
            (PcmKind::Semilattice { join, .. }, Payload::Index(x), Payload::Index(y)) => {
                Ok(Some(Payload::Index(join[*x][*y])))
            }
            (PcmKind::Table { add, .. }, Payload::Index(x), Payload::Index(y)) => {
                Ok(add[*x][*y].map(Payload::Index))
            }
            _ => Err(PcmError::OwnerMismatch),
        }
    }

    /// `a ⊥ b`: whether `a ⊕ b` is defined.
    pub fn is_orthogonal(&self, a: &Grade, b: &Grade) -> Result<bool, PcmError> {
        Ok(self.add(a, b)?.is_some())
    }

    /// The extension preorder: `a ⩽ b` iff some `c` has `a ⊕ c = b`.
    /// Implemented directly per kind, with [`Pcm::leq_by_search`] as the
    /// exhaustive cross-check for finite kinds.
    pub fn leq(&self, a: &Grade, b: &Grade) -> Result<bool, PcmError> {
        self.check_owner(a)?;
        self.check_owner(b)?;
        self.leq_payload(&a.payload, &b.payload)
    }

    fn leq_payload(&self, a: &Payload, b: &Payload) -> Result<bool, PcmError> {
        match (self.kind(), a, b) {
            (PcmKind::Singleton, ..) => Ok(true),
            (PcmKind::Two, Payload::Small(x), Payload::Small(y))
            | (PcmKind::Three, Payload::Small(x), Payload::Small(y)) => Ok(x <= y),
            (PcmKind::Powerset { .. }, Payload::Mask(x), Payload::Mask(y)) => Ok(x & !y == 0),
            (
                PcmKind::ReadWrite { .. },
                Payload::RwMask { reads: r1, writes: w1 },
                Payload::RwMask { reads: r2, writes: w2 },
            ) => {
                // The unique candidate witness is (r2 \ r1, w2 \ w1); the
                // side conditions of ⊕ then reduce to these mask tests.
                let sub = r1 & !r2 == 0 && w1 & !w2 == 0;
                let no_new_read_clash = w1 & (r2 & !r1) == 0;
                let no_new_write_clash = (w2 & !w1) & r1 == 0;
                Ok(sub && no_new_read_clash && no_new_write_clash)
            }
            (PcmKind::Interval { .. }, Payload::Ratio(x), Payload::Ratio(y)) => Ok(x <= y),
            (PcmKind::Product { components }, Payload::Tuple(xs), Payload::Tuple(ys)) => {
                for ((c, x), y) in components.iter().zip(xs).zip(ys) {
                    if !c.leq_payload(x, y)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            (PcmKind::NatPlus, Payload::Nat(x), Payload::Nat(y))
            | (PcmKind::NatMax, Payload::Nat(x), Payload::Nat(y)) => Ok(x <= y),
            (PcmKind::Semilattice { join, .. }, Payload::Index(x), Payload::Index(y)) => {
                Ok(join[*x][*y] == *y)
            }
            (PcmKind::Table { .. }, Payload::Index(_), Payload::Index(_)) => {
                // No direct rule; exhaustive witness search is the rule.
                let a = self.grade(a.clone());
                let b = self.grade(b.clone());
                self.leq_by_search(&a, &b)
            }
            _ => Err(PcmError::OwnerMismatch),
        }
    }

    /// Exhaustive witness search over the carrier (finite kinds only).
    pub fn leq_by_search(&self, a: &Grade, b: &Grade) -> Result<bool, PcmError> {
        Ok(!self.witnesses(a, b)?.is_empty())
    }

    /// All `c` with `a ⊕ c = b` (finite kinds only).
    pub fn witnesses(&self, a: &Grade, b: &Grade) -> Result<Vec<Grade>, PcmError> {
        self.check_owner(a)?;
        self.check_owner(b)?;
        let mut out = Vec::new();
        for c in self.carrier()? {
            if let Some(sum) = self.add(a, &c)? {
                if sum.payload == b.payload {
                    out.push(c);
                }
            }
        }
        Ok(out)
    }

    /// Least upper bound in the extension preorder.
    pub fn join(&self, a: &Grade, b: &Grade) -> Result<Grade, PcmError> {
        self.check_owner(a)?;
        self.check_owner(b)?;
        match (self.kind(), &a.payload, &b.payload) {
            (PcmKind::Singleton, ..) => Ok(self.zero()),
            (PcmKind::Two, Payload::Small(x), Payload::Small(y))
            | (PcmKind::Three, Payload::Small(x), Payload::Small(y)) => {
                Ok(self.grade(Payload::Small(*x.max(y))))
            }
            (PcmKind::Powerset { .. }, Payload::Mask(x), Payload::Mask(y)) => {
                Ok(self.grade(Payload::Mask(x | y)))
            }
            (PcmKind::Interval { .. }, Payload::Ratio(x), Payload::Ratio(y)) => {
                Ok(self.grade(Payload::Ratio(*x.max(y))))
            }
            (PcmKind::NatPlus, Payload::Nat(x), Payload::Nat(y))
            | (PcmKind::NatMax, Payload::Nat(x), Payload::Nat(y)) => {
                Ok(self.grade(Payload::Nat(*x.max(y))))
            }
            (PcmKind::Semilattice { join, .. }, Payload::Index(x), Payload::Index(y)) => {
                Ok(self.grade(Payload::Index(join[*x][*y])))
            }
            (PcmKind::Product { components }, Payload::Tuple(xs), Payload::Tuple(ys)) => {
                let mut out = Vec::with_capacity(components.len());
                for ((c, x), y) in components.iter().zip(xs).zip(ys) {
                    out.push(c.join(&c.grade(x.clone()), &c.grade(y.clone()))?.payload);
                }
                Ok(self.grade(Payload::Tuple(out)))
            }
            // rw and raw tables: certify a least upper bound by search.
            _ => self.join_by_search(a, b),
        }
    }

    fn join_by_search(&self, a: &Grade, b: &Grade) -> Result<Grade, PcmError> {
        let carrier = self.carrier()?;
        let mut uppers = Vec::new();
        for u in &carrier {
            if self.leq(a, u)? && self.leq(b, u)? {
                uppers.push(u.clone());
            }
        }
        for u in &uppers {
            let mut least = true;
            for v in &uppers {
                if !self.leq(u, v)? {
                    least = false;
                    break;
                }
            }
            if least {
                return Ok(u.clone());
            }
        }
        Err(PcmError::NoJoin)
    }

    /// Top element of the extension preorder, when one exists.
    pub fn top(&self) -> Result<Grade, PcmError> {
        match self.kind() {
            PcmKind::Singleton => Ok(self.zero()),
            PcmKind::Two => Ok(self.grade(Payload::Small(1))),
            PcmKind::Three => Ok(self.grade(Payload::Small(2))),
            PcmKind::Powerset { devices } => {
                Ok(self.grade(Payload::Mask((1u32 << devices.len()) - 1)))
            }
            PcmKind::Interval { bound } => Ok(self.grade(Payload::Ratio(*bound))),
            PcmKind::NatPlus | PcmKind::NatMax => Err(PcmError::NoTop),
            PcmKind::Semilattice { elems, join, .. } => {
                let n = elems.len();
                let mut t = 0;
                for x in 1..n {
                    t = join[t][x];
                }
                Ok(self.grade(Payload::Index(t)))
            }
            PcmKind::Product { components } => {
                let mut out = Vec::with_capacity(components.len());
                for c in components {
                    out.push(c.top()?.payload);
                }
                Ok(self.grade(Payload::Tuple(out)))
            }
            PcmKind::ReadWrite { .. } | PcmKind::Table { .. } => {
                let carrier = self.carrier()?;
                for u in &carrier {
                    let mut ok = true;
                    for a in &carrier {
                        if !self.leq(a, u)? {
                            ok = false;
                            break;
                        }
                    }
                    if ok {
                        return Ok(u.clone());
                    }
                }
                Err(PcmError::NoTop)
            }
        }
    }

    /// The orthocomplement toward the top: the unique `b` with `a ⊕ b = ⊤`.
    pub fn complement(&self, a: &Grade) -> Result<Grade, PcmError> {
        self.check_owner(a)?;
        match (self.kind(), &a.payload) {
            (PcmKind::Interval { bound }, Payload::Ratio(x)) => {
                let y = bound.sub(x).map_err(|_| PcmError::Overflow)?;
                Ok(self.grade(Payload::Ratio(y)))
            }
            (PcmKind::Two, Payload::Small(x)) => Ok(self.grade(Payload::Small(1 - x))),
            (PcmKind::Powerset { devices }, Payload::Mask(m)) => {
                let full = (1u32 << devices.len()) - 1;
                Ok(self.grade(Payload::Mask(full & !m)))
            }
            (PcmKind::Product { components }, Payload::Tuple(xs)) => {
                let mut out = Vec::with_capacity(components.len());
                for (c, x) in components.iter().zip(xs) {
                    out.push(c.complement(&c.grade(x.clone()))?.payload);
                }
                Ok(self.grade(Payload::Tuple(out)))
            }
            _ => {
                let top = self.top()?;
                let mut found = Vec::new();
                for b in self.carrier().map_err(|_| {
                    PcmError::NotEffectAlgebra("no complement rule for this kind".into())
                })? {
                    if let Some(sum) = self.add(a, &b)? {
                        if sum.payload == top.payload {
                            found.push(b);
                        }
                    }
                }
                match found.len() {
                    1 => Ok(found.pop().expect("len checked")),
                    0 => Err(PcmError::NotEffectAlgebra(format!("{a} has no complement"))),
                    _ => Err(PcmError::NotEffectAlgebra(format!(
                        "{a} has {} complements",
                        found.len()
                    ))),
                }
            }
        }
    }

    /// Whether every pair of elements has a common upper bound. Decided by
    /// scan for finite kinds; the infinite built-ins are all directed.
    pub fn is_directed(&self) -> Result<bool, PcmError> {
        match self.kind() {
            PcmKind::Interval { .. } | PcmKind::NatPlus | PcmKind::NatMax => Ok(true),
            PcmKind::Product { components } => {
                for c in components {
                    if !c.is_directed()? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            _ => {
                let carrier = self.carrier()?;
                for a in &carrier {
                    for b in &carrier {
                        let mut found = false;
                        for u in &carrier {
                            if self.leq(a, u)? && self.leq(b, u)? {
                                found = true;
                                break;
                            }
                        }
                        if !found {
                            return Ok(false);
                        }
                    }
                }
                Ok(true)
            }
        }
    }

    /// A maximum element of a finite directed PCM, obtained by folding
    /// binary upper bounds over the carrier.
    pub fn directed_top(&self) -> Result<Grade, PcmError> {
        let carrier = self.carrier()?;
        let mut t = self.zero();
        for a in &carrier {
            let mut found = None;
            for u in &carrier {
                if self.leq(&t, u)? && self.leq(a, u)? {
                    found = Some(u.clone());
                    break;
                }
            }
            t = found.ok_or(PcmError::NoTop)?;
        }
        Ok(t)
    }

    /// Parse a grade literal in this instance's syntax.
    pub fn parse_grade(&self, text: &str) -> Result<Grade, syntax::SyntaxError> {
        syntax::parse_grade(self, text)
    }

    pub(crate) fn grade_from_payload(&self, payload: Payload) -> Grade {
        self.grade(payload)
    }
}

impl fmt::Display for Pcm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        syntax::format_pcm(self, f)
    }
}

#[cfg(test)]
mod tests;
