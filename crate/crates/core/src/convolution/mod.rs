//! The promonoidal encoding of a finite PCM, copresheaves over it, and the
//! Day convolution monoidal structure computed as finite quotients.
//!
//! A copresheaf assigns a finite set to each grade and a function to each
//! comparable pair, functorially. Convolution at a grade `c` quotients the
//! tagged pairs `(a, b, x, y)` with `a ⊕ b ⩽ c` by the least equivalence
//! generated by single regrading steps in either coordinate; the quotient
//! is computed by union-find, and class representatives are the
//! lexicographically least members.

pub mod format;
mod lax;

pub use lax::{check_lax_presentation, graded_to_lax, lax_to_graded, LaxPresentation};

use std::collections::BTreeMap;

use thiserror::Error;

use crate::pcm::{Grade, Pcm, PcmError};
use crate::report::Report;
use crate::unionfind::UnionFind;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConvError {
    #[error("copresheaves are over different PCMs")]
    PcmMismatch,
    #[error("operation requires a finite PCM carrier")]
    InfiniteCarrier,
    #[error("parse error at line {line}: {message}")]
    ParseError { line: usize, message: String },
    #[error("ill-formed copresheaf: {0}")]
    IllFormed(String),
    #[error("input fails its law check: {0}")]
    AxiomFailure(String),
    #[error("PCM error: {0}")]
    Pcm(#[from] PcmError),
}

/// The thin promonoidal structure of a finite PCM: `P(a,b;c)` holds iff
/// `a ⊕ b` is defined and extends to `c`; `I(c)` holds always.
#[derive(Debug, Clone)]
pub struct BoolPromonoidal {
    pcm: Pcm,
    carrier: Vec<Grade>,
    p: Vec<Vec<Vec<bool>>>,
    i: Vec<bool>,
}

impl BoolPromonoidal {
    pub fn pcm(&self) -> &Pcm {
        &self.pcm
    }

    pub fn carrier(&self) -> &[Grade] {
        &self.carrier
    }

    pub fn p(&self, a: usize, b: usize, c: usize) -> bool {
        self.p[a][b][c]
    }

    pub fn i(&self, c: usize) -> bool {
        self.i[c]
    }

    fn leq(&self, a: usize, b: usize) -> bool {
        self.pcm.leq(&self.carrier[a], &self.carrier[b]).expect("owned grades")
    }
}

pub fn promonoidal_from_pcm(pcm: &Pcm) -> Result<BoolPromonoidal, ConvError> {
    let carrier = pcm.carrier()?;
    let n = carrier.len();
    let mut p = vec![vec![vec![false; n]; n]; n];
    for a in 0..n {
        for b in 0..n {
            if let Some(sum) = pcm.add(&carrier[a], &carrier[b])? {
                for (c, gc) in carrier.iter().enumerate() {
                    p[a][b][c] = pcm.leq(&sum, gc)?;
                }
            }
        }
    }
    Ok(BoolPromonoidal { pcm: pcm.clone(), carrier, p, i: vec![true; n] })
}

/// Exhaustively verify functoriality of `P` and `I`, the associativity
/// biconditional, and both unit laws of the promonoidal structure.
pub fn check_promonoidal_laws(b: &BoolPromonoidal) -> Report {
    let mut report = Report::new();
    let n = b.carrier.len();
    let g = |i: usize| b.carrier[i].to_string();

    // functoriality: contravariant in the first two arguments, covariant in
    // the third; I is upward closed
    let mut cex: Option<String> = None;
    'func: for a in 0..n {
        for a2 in 0..n {
            if !b.leq(a2, a) {
                continue;
            }
            for x in 0..n {
                for c in 0..n {
                    if b.p(a, x, c) && !b.p(a2, x, c) {
                        cex = Some(format!("P({},{};{}) with {} <= {}", g(a), g(x), g(c), g(a2), g(a)));
                        break 'func;
                    }
                    if b.p(x, a, c) && !b.p(x, a2, c) {
                        cex = Some(format!("P({},{};{}) with {} <= {}", g(x), g(a), g(c), g(a2), g(a)));
                        break 'func;
                    }
                }
            }
        }
        for c in 0..n {
            for c2 in 0..n {
                if !b.leq(c, c2) {
                    continue;
                }
                for x in 0..n {
                    if b.p(a, x, c) && !b.p(a, x, c2) {
                        cex = Some(format!("P({},{};{}) with {} <= {}", g(a), g(x), g(c), g(c), g(c2)));
                        break 'func;
                    }
                }
                if b.i(c) && !b.i(c2) {
                    cex = Some(format!("I({}) with {} <= {}", g(c), g(c), g(c2)));
                    break 'func;
                }
            }
        }
    }
    report.push_outcome("FUNCTORIALITY", cex);

    // associativity: ∃x (P(b,c;x) ∧ P(a,x;d)) ⇔ ∃x (P(a,b;x) ∧ P(x,c;d))
    let mut cex: Option<String> = None;
    'assoc: for a in 0..n {
        for bb in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let lhs = (0..n).any(|x| b.p(bb, c, x) && b.p(a, x, d));
                    let rhs = (0..n).any(|x| b.p(a, bb, x) && b.p(x, c, d));
                    if lhs != rhs {
                        cex = Some(format!("{} {} {} {}", g(a), g(bb), g(c), g(d)));
                        break 'assoc;
                    }
                }
            }
        }
    }
    report.push_outcome("ASSOCIATIVITY", cex);

    // unit laws: ∃x (I(x) ∧ P(a,x;b)) ⇔ a ⩽ b, and symmetrically
    let mut right: Option<String> = None;
    let mut left: Option<String> = None;
    for a in 0..n {
        for c in 0..n {
            let expect = b.leq(a, c);
            if right.is_none() {
                let got = (0..n).any(|x| b.i(x) && b.p(a, x, c));
                if got != expect {
                    right = Some(format!("{} {}", g(a), g(c)));
                }
            }
            if left.is_none() {
                let got = (0..n).any(|x| b.i(x) && b.p(x, a, c));
                if got != expect {
                    left = Some(format!("{} {}", g(a), g(c)));
                }
            }
        }
    }
    report.push_outcome("UNIT-RIGHT", right);
    report.push_outcome("UNIT-LEFT", left);
    report
}

/// A finite copresheaf over a finite PCM: a set per grade and a function
/// per comparable pair, satisfying the functor laws.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Copresheaf {
    pcm: Pcm,
    carrier: Vec<Grade>,
    sets: Vec<Vec<String>>,
    /// maps for every pair `e ⩽ e'` with `e != e'`; identity maps implicit
    maps: BTreeMap<(usize, usize), Vec<usize>>,
}

impl Copresheaf {
    /// Build from explicit data; `maps` may cover any generating set of
    /// comparable pairs, and is completed by composition. Fails when some
    /// comparable pair is underdetermined or overdetermined inconsistently.
    pub fn new(
        pcm: Pcm,
        sets: Vec<Vec<String>>,
        given: BTreeMap<(usize, usize), Vec<usize>>,
    ) -> Result<Copresheaf, ConvError> {
        let carrier = pcm.carrier()?;
        let n = carrier.len();
        if sets.len() != n {
            return Err(ConvError::IllFormed(format!(
                "expected {n} per-grade sets, got {}",
                sets.len()
            )));
        }
        for (e, labels) in sets.iter().enumerate() {
            for (i, l) in labels.iter().enumerate() {
                if labels[..i].contains(l) {
                    return Err(ConvError::IllFormed(format!(
                        "duplicate element {l} at grade {}",
                        carrier[e]
                    )));
                }
            }
        }
        for (&(e, e2), map) in &given {
            if e >= n || e2 >= n {
                return Err(ConvError::IllFormed("map grade out of range".into()));
            }
            if !pcm.leq(&carrier[e], &carrier[e2])? {
                return Err(ConvError::IllFormed(format!(
                    "map given for incomparable grades {} and {}",
                    carrier[e], carrier[e2]
                )));
            }
            if map.len() != sets[e].len() || map.iter().any(|&v| v >= sets[e2].len()) {
                return Err(ConvError::IllFormed(format!(
                    "map {} -> {} has the wrong shape",
                    carrier[e], carrier[e2]
                )));
            }
        }

        // complete by composition to all comparable pairs; pairs with an
        // empty source always get the empty map
        let mut maps: BTreeMap<(usize, usize), Vec<usize>> = given.clone();
        for e in 0..n {
            if !sets[e].is_empty() {
                continue;
            }
            for e2 in 0..n {
                if e != e2 && pcm.leq(&carrier[e], &carrier[e2])? {
                    maps.entry((e, e2)).or_insert_with(Vec::new);
                }
            }
        }
        loop {
            let mut progress = false;
            for e in 0..n {
                for e2 in 0..n {
                    if e == e2 || !pcm.leq(&carrier[e], &carrier[e2])? {
                        continue;
                    }
                    if maps.contains_key(&(e, e2)) {
                        continue;
                    }
                    'mid: for mid in 0..n {
                        if mid == e || mid == e2 {
                            continue;
                        }
                        if let (Some(first), Some(second)) =
                            (maps.get(&(e, mid)), maps.get(&(mid, e2)))
                        {
                            let composed: Vec<usize> =
                                first.iter().map(|&v| second[v]).collect();
                            maps.insert((e, e2), composed);
                            progress = true;
                            break 'mid;
                        }
                    }
                }
            }
            if !progress {
                break;
            }
        }

        let cop = Copresheaf { pcm, carrier, sets, maps };
        cop.validate()?;
        Ok(cop)
    }

    /// The unit copresheaf: a singleton at every grade.
    pub fn constant_singleton(pcm: &Pcm) -> Result<Copresheaf, ConvError> {
        let carrier = pcm.carrier()?;
        let n = carrier.len();
        let sets = vec![vec!["*".to_string()]; n];
        let mut maps = BTreeMap::new();
        for e in 0..n {
            for e2 in 0..n {
                if e != e2 && pcm.leq(&carrier[e], &carrier[e2])? {
                    maps.insert((e, e2), vec![0]);
                }
            }
        }
        Ok(Copresheaf { pcm: pcm.clone(), carrier, sets, maps })
    }

    pub fn pcm(&self) -> &Pcm {
        &self.pcm
    }

    pub fn carrier(&self) -> &[Grade] {
        &self.carrier
    }

    pub fn set(&self, e: usize) -> &[String] {
        &self.sets[e]
    }

    pub fn sets(&self) -> &[Vec<String>] {
        &self.sets
    }

    pub(crate) fn maps(&self) -> &BTreeMap<(usize, usize), Vec<usize>> {
        &self.maps
    }

    /// Apply the regrading function `F(e ⩽ e')` to an element index.
    pub fn map(&self, e: usize, e2: usize, x: usize) -> usize {
        if e == e2 {
            x
        } else {
            self.maps[&(e, e2)][x]
        }
    }

    fn leq(&self, a: usize, b: usize) -> bool {
        self.pcm.leq(&self.carrier[a], &self.carrier[b]).expect("owned grades")
    }

    /// Check the functor laws: identity is implicit; every comparable pair
    /// has a map and all composition paths agree.
    pub fn validate(&self) -> Result<(), ConvError> {
        let n = self.carrier.len();
        for e in 0..n {
            for e2 in 0..n {
                if e == e2 || !self.leq(e, e2) {
                    continue;
                }
                let map = self.maps.get(&(e, e2)).ok_or_else(|| {
                    ConvError::IllFormed(format!(
                        "no map derivable for {} <= {}",
                        self.carrier[e], self.carrier[e2]
                    ))
                })?;
                if map.len() != self.sets[e].len()
                    || map.iter().any(|&v| v >= self.sets[e2].len())
                {
                    return Err(ConvError::IllFormed(format!(
                        "map {} -> {} has the wrong shape",
                        self.carrier[e], self.carrier[e2]
                    )));
                }
                for mid in 0..n {
                    if mid == e || mid == e2 || !self.leq(e, mid) || !self.leq(mid, e2) {
                        continue;
                    }
                    let first = &self.maps[&(e, mid)];
                    let second = &self.maps[&(mid, e2)];
                    for x in 0..self.sets[e].len() {
                        if second[first[x]] != map[x] {
                            return Err(ConvError::IllFormed(format!(
                                "composition law fails: {} <= {} <= {} at {}",
                                self.carrier[e],
                                self.carrier[mid],
                                self.carrier[e2],
                                self.sets[e][x]
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// A tagged pair of a convolution: grade indices and element indices.
pub type Tagged = (usize, usize, usize, usize);

/// The result of a Day convolution: per grade, the sorted equivalence
/// classes of tagged pairs, plus the induced copresheaf.
#[derive(Debug, Clone)]
pub struct Convolution {
    pcm: Pcm,
    carrier: Vec<Grade>,
    pub classes: Vec<Vec<Vec<Tagged>>>,
}

impl Convolution {
    pub fn class_count(&self, c: usize) -> usize {
        self.classes[c].len()
    }

    /// The class containing a member at grade `c`.
    pub fn class_of(&self, c: usize, member: &Tagged) -> Option<usize> {
        self.classes[c].iter().position(|cl| cl.binary_search(member).is_ok())
    }

    fn render(&self, f: &Copresheaf, g: &Copresheaf, t: &Tagged) -> String {
        format!(
            "({},{},{},{})",
            self.carrier[t.0],
            self.carrier[t.1],
            f.set(t.0)[t.2],
            g.set(t.1)[t.3]
        )
    }

    /// Forget the class structure, keeping representative names.
    pub fn as_copresheaf(&self, f: &Copresheaf, g: &Copresheaf) -> Result<Copresheaf, ConvError> {
        let n = self.carrier.len();
        let sets: Vec<Vec<String>> = (0..n)
            .map(|c| self.classes[c].iter().map(|cl| self.render(f, g, &cl[0])).collect())
            .collect();
        let mut maps = BTreeMap::new();
        for e in 0..n {
            for e2 in 0..n {
                if e == e2
                    || !self
                        .pcm
                        .leq(&self.carrier[e], &self.carrier[e2])
                        .expect("owned grades")
                {
                    continue;
                }
                let map: Vec<usize> = self.classes[e]
                    .iter()
                    .map(|cl| {
                        self.class_of(e2, &cl[0])
                            .expect("members at e are members at any larger grade")
                    })
                    .collect();
                maps.insert((e, e2), map);
            }
        }
        Copresheaf::new(self.pcm.clone(), sets, maps)
    }

    /// Deterministic listing used by the CLI: one line per class.
    pub fn render_classes(&self, f: &Copresheaf, g: &Copresheaf) -> String {
        let mut out = String::new();
        for (c, classes) in self.classes.iter().enumerate() {
            out.push_str(&format!("grade {}: {} classes\n", self.carrier[c], classes.len()));
            for cl in classes {
                let members: Vec<String> = cl.iter().map(|t| self.render(f, g, t)).collect();
                out.push_str(&format!("  {{ {} }}\n", members.join(" ")));
            }
        }
        out
    }
}

/// A random copresheaf over a finite PCM, drawn by choosing maps on the
/// covering pairs of the extension preorder and deriving the closure.
/// Grades whose upward cone hits an empty set are forced empty so every
/// required function exists. PCMs whose covers admit several derivation
/// paths can yield inconsistent draws; those fall back to constant maps.
pub fn random_copresheaf(pcm: &Pcm, rng: &mut crate::rng::Rng, max_size: usize) -> Copresheaf {
    let carrier = pcm.carrier().expect("finite PCM");
    let n = carrier.len();
    let leq = |a: usize, b: usize| pcm.leq(&carrier[a], &carrier[b]).expect("owned");
    let strict = |a: usize, b: usize| a != b && leq(a, b);

    let mut sizes: Vec<usize> = (0..n).map(|_| rng.below(max_size + 1)).collect();
    loop {
        let mut changed = false;
        for e in 0..n {
            for e2 in 0..n {
                if strict(e, e2) && sizes[e2] == 0 && sizes[e] > 0 {
                    sizes[e] = 0;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let sets: Vec<Vec<String>> = sizes
        .iter()
        .enumerate()
        .map(|(e, &s)| (0..s).map(|i| format!("e{e}x{i}")).collect())
        .collect();

    let draw = |rng: &mut crate::rng::Rng, constant: bool| {
        let mut given: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for e in 0..n {
            for e2 in 0..n {
                if !strict(e, e2) {
                    continue;
                }
                let is_cover =
                    !(0..n).any(|m| m != e && m != e2 && strict(e, m) && strict(m, e2));
                if !is_cover {
                    continue;
                }
                let map: Vec<usize> = (0..sizes[e])
                    .map(|_| if constant { 0 } else { rng.below(sizes[e2]) })
                    .collect();
                given.insert((e, e2), map);
            }
        }
        given
    };
    match Copresheaf::new(pcm.clone(), sets.clone(), draw(rng, false)) {
        Ok(c) => c,
        Err(_) => Copresheaf::new(pcm.clone(), sets, draw(rng, true))
            .expect("constant cover maps compose consistently"),
    }
}

/// Day convolution of two copresheaves over the same finite PCM.
pub fn convolve(f: &Copresheaf, g: &Copresheaf) -> Result<Convolution, ConvError> {
    if f.pcm != g.pcm {
        return Err(ConvError::PcmMismatch);
    }
    let pcm = f.pcm.clone();
    let carrier = f.carrier.clone();
    let n = carrier.len();

    // precompute sums and the order
    let mut sum = vec![vec![None; n]; n];
    let mut leq = vec![vec![false; n]; n];
    for a in 0..n {
        for b in 0..n {
            if let Some(s) = pcm.add(&carrier[a], &carrier[b])? {
                sum[a][b] = carrier.iter().position(|g| *g == s);
            }
            leq[a][b] = pcm.leq(&carrier[a], &carrier[b])?;
        }
    }

    let mut classes = Vec::with_capacity(n);
    for c in 0..n {
        let mut members: Vec<Tagged> = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let Some(s) = sum[a][b] else { continue };
                if !leq[s][c] {
                    continue;
                }
                for x in 0..f.set(a).len() {
                    for y in 0..g.set(b).len() {
                        members.push((a, b, x, y));
                    }
                }
            }
        }
        members.sort();
        let index_of = |t: &Tagged| members.binary_search(t).expect("generated member");

        let mut uf = UnionFind::new(members.len());
        for (i, &(a, b, x, y)) in members.iter().enumerate() {
            for a2 in 0..n {
                if a2 == a || !leq[a][a2] {
                    continue;
                }
                let Some(s2) = sum[a2][b] else { continue };
                if !leq[s2][c] {
                    continue;
                }
                let t = (a2, b, f.map(a, a2, x), y);
                uf.union(i, index_of(&t));
            }
            for b2 in 0..n {
                if b2 == b || !leq[b][b2] {
                    continue;
                }
                let Some(s2) = sum[a][b2] else { continue };
                if !leq[s2][c] {
                    continue;
                }
                let t = (a, b2, x, g.map(b, b2, y));
                uf.union(i, index_of(&t));
            }
        }
        let grouped: Vec<Vec<Tagged>> = uf
            .classes()
            .into_iter()
            .map(|ixs| ixs.into_iter().map(|i| members[i]).collect())
            .collect();
        classes.push(grouped);
    }
    Ok(Convolution { pcm, carrier, classes })
}

/// Verify the canonical unit and associativity coherence maps class-by-
/// class: each must be well defined on classes, bijective, and commute
/// with all regrade maps.
pub fn check_convolution_coherence(
    f: &Copresheaf,
    g: &Copresheaf,
    h: &Copresheaf,
) -> Result<Report, ConvError> {
    let mut report = Report::new();
    let pcm = f.pcm.clone();
    let j = Copresheaf::constant_singleton(&pcm)?;
    let carrier = f.carrier.clone();
    let n = carrier.len();

    // left unit: (J * F)(c) -> F(c), (a, b, *, y) ↦ F(b <= c)(y)
    let jf = convolve(&j, f)?;
    let mut cex: Option<String> = None;
    let mut unit_maps: Vec<Vec<usize>> = Vec::with_capacity(n);
    'left: for c in 0..n {
        let mut map = Vec::with_capacity(jf.classes[c].len());
        for class in &jf.classes[c] {
            let images: Vec<usize> =
                class.iter().map(|&(_a, b, _x, y)| f.map(b, c, y)).collect();
            if images.windows(2).any(|w| w[0] != w[1]) {
                cex = Some(format!("map not constant on a class at {}", carrier[c]));
                break 'left;
            }
            map.push(images[0]);
        }
        // bijectivity onto F(c)
        let mut seen = vec![false; f.set(c).len()];
        for &v in &map {
            if seen[v] {
                cex = Some(format!("not injective at {}", carrier[c]));
                break 'left;
            }
            seen[v] = true;
        }
        if seen.iter().any(|s| !s) {
            cex = Some(format!("not surjective at {}", carrier[c]));
            break 'left;
        }
        unit_maps.push(map);
    }
    if cex.is_none() {
        // naturality with regrades
        'nat: for c in 0..n {
            for c2 in 0..n {
                if c == c2 || !pcm.leq(&carrier[c], &carrier[c2])? {
                    continue;
                }
                for (k, class) in jf.classes[c].iter().enumerate() {
                    let up = jf
                        .class_of(c2, &class[0])
                        .expect("class inclusion along regrades");
                    if unit_maps[c2][up] != f.map(c, c2, unit_maps[c][k]) {
                        cex = Some(format!(
                            "unit map does not commute with {} <= {}",
                            carrier[c], carrier[c2]
                        ));
                        break 'nat;
                    }
                }
            }
        }
    }
    report.push_outcome("UNIT-LEFT", cex);

    // right unit: (F * J)(c) -> F(c), (a, b, x, *) ↦ F(a <= c)(x)
    let fj = convolve(f, &j)?;
    let mut cex: Option<String> = None;
    let mut unit_maps: Vec<Vec<usize>> = Vec::with_capacity(n);
    'right: for c in 0..n {
        let mut map = Vec::with_capacity(fj.classes[c].len());
        for class in &fj.classes[c] {
            let images: Vec<usize> =
                class.iter().map(|&(a, _b, x, _y)| f.map(a, c, x)).collect();
            if images.windows(2).any(|w| w[0] != w[1]) {
                cex = Some(format!("map not constant on a class at {}", carrier[c]));
                break 'right;
            }
            map.push(images[0]);
        }
        let mut seen = vec![false; f.set(c).len()];
        for &v in &map {
            if seen[v] {
                cex = Some(format!("not injective at {}", carrier[c]));
                break 'right;
            }
            seen[v] = true;
        }
        if seen.iter().any(|s| !s) {
            cex = Some(format!("not surjective at {}", carrier[c]));
            break 'right;
        }
        unit_maps.push(map);
    }
    if cex.is_none() {
        'nat2: for c in 0..n {
            for c2 in 0..n {
                if c == c2 || !pcm.leq(&carrier[c], &carrier[c2])? {
                    continue;
                }
                for (k, class) in fj.classes[c].iter().enumerate() {
                    let up = fj
                        .class_of(c2, &class[0])
                        .expect("class inclusion along regrades");
                    if unit_maps[c2][up] != f.map(c, c2, unit_maps[c][k]) {
                        cex = Some(format!(
                            "unit map does not commute with {} <= {}",
                            carrier[c], carrier[c2]
                        ));
                        break 'nat2;
                    }
                }
            }
        }
    }
    report.push_outcome("UNIT-RIGHT", cex);

    // associativity: ((F*G)*H)(d) -> (F*(G*H))(d)
    let fg = convolve(f, g)?;
    let fg_cop = fg.as_copresheaf(f, g)?;
    let fgh = convolve(&fg_cop, h)?;
    let gh = convolve(g, h)?;
    let gh_cop = gh.as_copresheaf(g, h)?;
    let fgh2 = convolve(f, &gh_cop)?;

    let mut sum = vec![vec![None; n]; n];
    for a in 0..n {
        for b in 0..n {
            if let Some(s) = pcm.add(&carrier[a], &carrier[b])? {
                sum[a][b] = carrier.iter().position(|g| *g == s);
            }
        }
    }

    // target class of one member of ((F*G)*H)(d)
    let assoc_image = |d: usize, t: &Tagged| -> Option<usize> {
        let (u, w, p, r) = *t;
        let (a, b, x, y) = fg.classes[u][p][0];
        let v = sum[b][w]?;
        let q = gh.class_of(v, &(b, w, y, r))?;
        fgh2.class_of(d, &(a, v, x, q))
    };

    let mut cex: Option<String> = None;
    let mut assoc_maps: Vec<Vec<usize>> = Vec::with_capacity(n);
    'assoc: for d in 0..n {
        let mut map = Vec::with_capacity(fgh.classes[d].len());
        for class in &fgh.classes[d] {
            let mut images = Vec::with_capacity(class.len());
            for t in class {
                match assoc_image(d, t) {
                    Some(i) => images.push(i),
                    None => {
                        cex = Some(format!("image undefined at {}", carrier[d]));
                        break 'assoc;
                    }
                }
            }
            if images.windows(2).any(|w| w[0] != w[1]) {
                cex = Some(format!("map not constant on a class at {}", carrier[d]));
                break 'assoc;
            }
            map.push(images[0]);
        }
        let mut seen = vec![false; fgh2.classes[d].len()];
        for &v in &map {
            if seen[v] {
                cex = Some(format!("not injective at {}", carrier[d]));
                break 'assoc;
            }
            seen[v] = true;
        }
        if seen.iter().any(|s| !s) {
            cex = Some(format!("not surjective at {}", carrier[d]));
            break 'assoc;
        }
        assoc_maps.push(map);
    }
    if cex.is_none() {
        'nat3: for d in 0..n {
            for d2 in 0..n {
                if d == d2 || !pcm.leq(&carrier[d], &carrier[d2])? {
                    continue;
                }
                for (k, class) in fgh.classes[d].iter().enumerate() {
                    let up = fgh
                        .class_of(d2, &class[0])
                        .expect("class inclusion along regrades");
                    let lhs = assoc_maps[d2][up];
                    let rhs_member = fgh2.classes[d][assoc_maps[d][k]][0];
                    let rhs = fgh2
                        .class_of(d2, &rhs_member)
                        .expect("class inclusion along regrades");
                    if lhs != rhs {
                        cex = Some(format!(
                            "associator does not commute with {} <= {}",
                            carrier[d], carrier[d2]
                        ));
                        break 'nat3;
                    }
                }
            }
        }
    }
    report.push_outcome("ASSOCIATIVITY", cex);

    Ok(report)
}

#[cfg(test)]
mod tests;
