//! Graded models as monoids of hom-copresheaves: the lax-monoidal
//! presentation with laxators `⊗_{a,b;c}` for every `a ⊕ b ⩽ c`, units
//! `η_c`, per-grade identities, and the full coherence checklist.

use std::collections::BTreeMap;

use crate::finmodel::{FiniteGradedModel, ModelError, ObjectMonoid};
use crate::pcm::{Grade, Pcm};
use crate::report::Report;

use super::ConvError;

type HomKey = (usize, usize, usize);
type CompKey = (usize, usize, usize, usize);
type RegradeKey = (usize, usize, usize, usize);
type LaxKey = (usize, usize, usize, usize, usize, usize, usize);

/// The unpacked monoid data equivalent to a finite graded model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaxPresentation {
    pub(crate) pcm: Pcm,
    pub(crate) carrier: Vec<Grade>,
    pub(crate) objects: ObjectMonoid,
    pub(crate) hom: BTreeMap<HomKey, Vec<String>>,
    pub(crate) regrade: BTreeMap<RegradeKey, Vec<usize>>,
    /// laxator tables keyed by (a, b, c, x, y, x', y') for every a ⊕ b ⩽ c
    pub(crate) laxator: BTreeMap<LaxKey, Vec<Vec<usize>>>,
    /// unit element of hom(c, I, I) per grade c
    pub(crate) eta: Vec<usize>,
    pub(crate) comp: BTreeMap<CompKey, Vec<Vec<usize>>>,
    /// (grade, object) -> identity element of hom(e, x, x)
    pub(crate) ids: BTreeMap<(usize, usize), usize>,
}

impl LaxPresentation {
    fn hom_len(&self, e: usize, x: usize, y: usize) -> usize {
        self.hom.get(&(e, x, y)).map(Vec::len).unwrap_or(0)
    }

    fn regrade_ix(&self, e: usize, e2: usize, x: usize, y: usize, f: usize) -> usize {
        if e == e2 {
            f
        } else {
            self.regrade[&(e, e2, x, y)][f]
        }
    }

    fn leq(&self, a: usize, b: usize) -> bool {
        self.pcm.leq(&self.carrier[a], &self.carrier[b]).expect("owned grades")
    }

    fn add(&self, a: usize, b: usize) -> Option<usize> {
        self.pcm
            .add(&self.carrier[a], &self.carrier[b])
            .expect("owned grades")
            .and_then(|s| self.carrier.iter().position(|g| *g == s))
    }

    /// Grade triples (a, b, c) with `a ⊕ b ⩽ c`.
    fn lax_triples(&self) -> Vec<(usize, usize, usize)> {
        let n = self.carrier.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let Some(ab) = self.add(a, b) else { continue };
                for c in 0..n {
                    if self.leq(ab, c) {
                        out.push((a, b, c));
                    }
                }
            }
        }
        out
    }
}

/// Unpack a model into its lax presentation:
/// `f ⊗_{a,b;c} g := (f ⊗_{a,b} g)↑` and `η_c := (id_I)↑c`.
pub fn graded_to_lax(model: &FiniteGradedModel) -> Result<LaxPresentation, ConvError> {
    if !model.pcm().is_finite() {
        return Err(ConvError::InfiniteCarrier);
    }
    let pcm = model.pcm().clone();
    let carrier = pcm.carrier()?;
    let n = carrier.len();
    let no = model.objects().len();
    let unit = model.objects().unit();

    let mut hom = BTreeMap::new();
    for e in 0..n {
        for x in 0..no {
            for y in 0..no {
                let labels = model.hom_labels(e, x, y);
                if !labels.is_empty() {
                    hom.insert((e, x, y), labels.to_vec());
                }
            }
        }
    }

    let mut pres = LaxPresentation {
        pcm,
        carrier,
        objects: model.objects().clone(),
        hom,
        regrade: model.regrade.clone(),
        laxator: BTreeMap::new(),
        eta: (0..n).map(|c| model.id_at(c, unit)).collect(),
        comp: model.comp.clone(),
        ids: {
            let mut ids = BTreeMap::new();
            for e in 0..n {
                for x in 0..no {
                    if model.hom_len(e, x, x) > 0 {
                        ids.insert((e, x), model.id_at(e, x));
                    }
                }
            }
            ids
        },
    };

    for (a, b, c) in pres.lax_triples() {
        let ab = pres.add(a, b).expect("triple is orthogonal");
        for x in 0..no {
            for y in 0..no {
                let nf = model.hom_len(a, x, y);
                if nf == 0 {
                    continue;
                }
                for x2 in 0..no {
                    for y2 in 0..no {
                        let ng = model.hom_len(b, x2, y2);
                        if ng == 0 {
                            continue;
                        }
                        let xo = model.objects().mul(x, x2);
                        let yo = model.objects().mul(y, y2);
                        let mut table = vec![vec![0usize; ng]; nf];
                        for (f, row) in table.iter_mut().enumerate() {
                            for (g, slot) in row.iter_mut().enumerate() {
                                let t = model.tensor_ix(a, b, x, y, x2, y2, f, g);
                                *slot = model.regrade_ix(ab, c, xo, yo, t);
                            }
                        }
                        pres.laxator.insert((a, b, c, x, y, x2, y2), table);
                    }
                }
            }
        }
    }
    Ok(pres)
}

/// Repack a presentation into a model: `⊗_{a,b} := ⊗_{a,b;a⊕b}` and the
/// grade-0 identities become the model identities.
pub fn lax_to_graded(pres: &LaxPresentation) -> Result<FiniteGradedModel, ConvError> {
    let n = pres.carrier.len();
    let no = pres.objects.len();
    let zero = pres
        .carrier
        .iter()
        .position(|g| *g == pres.pcm.zero())
        .expect("carrier contains zero");

    let mut tensor = BTreeMap::new();
    for a in 0..n {
        for b in 0..n {
            let Some(ab) = pres.add(a, b) else { continue };
            for x in 0..no {
                for y in 0..no {
                    for x2 in 0..no {
                        for y2 in 0..no {
                            if let Some(table) = pres.laxator.get(&(a, b, ab, x, y, x2, y2)) {
                                tensor.insert((a, b, x, y, x2, y2), table.clone());
                            }
                        }
                    }
                }
            }
        }
    }

    let mut id = Vec::with_capacity(no);
    for x in 0..no {
        let ix = pres.ids.get(&(zero, x)).copied().ok_or_else(|| {
            ConvError::IllFormed(format!("missing identity at grade 0 for object {x}"))
        })?;
        id.push(ix);
    }

    let model = FiniteGradedModel {
        pcm: pres.pcm.clone(),
        support: pres.carrier.clone(),
        objects: pres.objects.clone(),
        hom: pres.hom.clone(),
        id,
        comp: pres.comp.clone(),
        regrade: pres.regrade.clone(),
        tensor,
        braiding: None,
    };
    model
        .validate()
        .map_err(|e: ModelError| ConvError::IllFormed(e.to_string()))?;
    Ok(model)
}

/// The coherence checklist, itemized with the labels used throughout:
/// regrade functoriality (1.iii), equivalence compatibility (1.vi), unit
/// naturality (1.vii), tensor naturality (1.viii), lax associativity
/// (1.ix), lax unit (1.x), composition naturality and monoidality (2.ii,
/// 2.iii), identity naturality/monoidality/unit-compatibility (3.ii-3.iv),
/// and the monoid laws (4.i, 4.ii).
pub fn check_lax_presentation(pres: &LaxPresentation) -> Report {
    let mut report = Report::new();
    let n = pres.carrier.len();
    let no = pres.objects.len();
    let unit = pres.objects.unit();
    let gname = |e: usize| pres.carrier[e].to_string();
    let triples = pres.lax_triples();

    // 1.iii regrade functoriality
    let mut cex: Option<String> = None;
    'i3: for e in 0..n {
        for e2 in 0..n {
            if !pres.leq(e, e2) {
                continue;
            }
            for e3 in 0..n {
                if !pres.leq(e2, e3) {
                    continue;
                }
                for x in 0..no {
                    for y in 0..no {
                        for f in 0..pres.hom_len(e, x, y) {
                            let via =
                                pres.regrade_ix(e2, e3, x, y, pres.regrade_ix(e, e2, x, y, f));
                            if via != pres.regrade_ix(e, e3, x, y, f) {
                                cex = Some(format!("{} <= {} <= {}", gname(e), gname(e2), gname(e3)));
                                break 'i3;
                            }
                        }
                    }
                }
            }
        }
    }
    report.push_outcome("1.iii", cex);

    // 1.vi equivalence compatibility
    let mut cex: Option<String> = None;
    'i6: for &(a, b, c) in &triples {
        for a2 in 0..n {
            if !pres.leq(a, a2) {
                continue;
            }
            for b2 in 0..n {
                if !pres.leq(b, b2) {
                    continue;
                }
                let Some(a2b2) = pres.add(a2, b2) else { continue };
                if !pres.leq(a2b2, c) {
                    continue;
                }
                for x in 0..no {
                    for y in 0..no {
                        let nf = pres.hom_len(a, x, y);
                        for x2 in 0..no {
                            for y2 in 0..no {
                                let ng = pres.hom_len(b, x2, y2);
                                if nf == 0 || ng == 0 {
                                    continue;
                                }
                                let Some(hi) = pres.laxator.get(&(a2, b2, c, x, y, x2, y2))
                                else {
                                    continue;
                                };
                                let lo = &pres.laxator[&(a, b, c, x, y, x2, y2)];
                                for f in 0..nf {
                                    for g in 0..ng {
                                        let rf = pres.regrade_ix(a, a2, x, y, f);
                                        let rg = pres.regrade_ix(b, b2, x2, y2, g);
                                        if hi[rf][rg] != lo[f][g] {
                                            cex = Some(format!(
                                                "({},{};{}) vs ({},{};{})",
                                                gname(a),
                                                gname(b),
                                                gname(c),
                                                gname(a2),
                                                gname(b2),
                                                gname(c)
                                            ));
                                            break 'i6;
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    report.push_outcome("1.vi", cex);

    // 1.vii unit naturality
    let mut cex: Option<String> = None;
    for c in 0..n {
        for c2 in 0..n {
            if !pres.leq(c, c2) {
                continue;
            }
            if pres.regrade_ix(c, c2, unit, unit, pres.eta[c]) != pres.eta[c2] {
                cex = Some(format!("{} <= {}", gname(c), gname(c2)));
                break;
            }
        }
    }
    report.push_outcome("1.vii", cex);

    // 1.viii tensor naturality
    let mut cex: Option<String> = None;
    'i8: for &(a, b, c) in &triples {
        for d in 0..n {
            if !pres.leq(c, d) {
                continue;
            }
            for x in 0..no {
                for y in 0..no {
                    for x2 in 0..no {
                        for y2 in 0..no {
                            let Some(at_c) = pres.laxator.get(&(a, b, c, x, y, x2, y2)) else {
                                continue;
                            };
                            let at_d = &pres.laxator[&(a, b, d, x, y, x2, y2)];
                            let xo = pres.objects.mul(x, x2);
                            let yo = pres.objects.mul(y, y2);
                            for (f, row) in at_c.iter().enumerate() {
                                for (g, &v) in row.iter().enumerate() {
                                    if pres.regrade_ix(c, d, xo, yo, v) != at_d[f][g] {
                                        cex = Some(format!(
                                            "({},{};{}) regraded to {}",
                                            gname(a),
                                            gname(b),
                                            gname(c),
                                            gname(d)
                                        ));
                                        break 'i8;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    report.push_outcome("1.viii", cex);

    // 1.ix lax associativity
    let mut cex: Option<String> = None;
    'i9: for &(a, b, xg) in &triples {
        for c in 0..n {
            let Some(xc) = pres.add(xg, c) else { continue };
            for d in 0..n {
                if !pres.leq(xc, d) {
                    continue;
                }
                for yg in 0..n {
                    let Some(bc) = pres.add(b, c) else { continue };
                    if !pres.leq(bc, yg) {
                        continue;
                    }
                    let Some(ay) = pres.add(a, yg) else { continue };
                    if !pres.leq(ay, d) {
                        continue;
                    }
                    for x in 0..no {
                        for y in 0..no {
                            let nf = pres.hom_len(a, x, y);
                            for x2 in 0..no {
                                for y2 in 0..no {
                                    let ng = pres.hom_len(b, x2, y2);
                                    for x3 in 0..no {
                                        for y3 in 0..no {
                                            let nh = pres.hom_len(c, x3, y3);
                                            if nf == 0 || ng == 0 || nh == 0 {
                                                continue;
                                            }
                                            let fg =
                                                &pres.laxator[&(a, b, xg, x, y, x2, y2)];
                                            let fg_h = &pres.laxator[&(
                                                xg,
                                                c,
                                                d,
                                                pres.objects.mul(x, x2),
                                                pres.objects.mul(y, y2),
                                                x3,
                                                y3,
                                            )];
                                            let gh =
                                                &pres.laxator[&(b, c, yg, x2, y2, x3, y3)];
                                            let f_gh = &pres.laxator[&(
                                                a,
                                                yg,
                                                d,
                                                x,
                                                y,
                                                pres.objects.mul(x2, x3),
                                                pres.objects.mul(y2, y3),
                                            )];
                                            for f in 0..nf {
                                                for g in 0..ng {
                                                    for h in 0..nh {
                                                        if fg_h[fg[f][g]][h]
                                                            != f_gh[f][gh[g][h]]
                                                        {
                                                            cex = Some(format!(
                                                                "grades {} {} {} via {} and {}",
                                                                gname(a),
                                                                gname(b),
                                                                gname(c),
                                                                gname(xg),
                                                                gname(yg)
                                                            ));
                                                            break 'i9;
                                                        }
                                                    }
                                                }
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    report.push_outcome("1.ix", cex);

    // 1.x lax unit
    let mut cex: Option<String> = None;
    'i10: for &(a, b, c) in &triples {
        for x in 0..no {
            for y in 0..no {
                let nf = pres.hom_len(a, x, y);
                if nf == 0 {
                    continue;
                }
                if let Some(table) = pres.laxator.get(&(a, b, c, x, y, unit, unit)) {
                    for f in 0..nf {
                        if table[f][pres.eta[b]] != pres.regrade_ix(a, c, x, y, f) {
                            cex = Some(format!(
                                "f ⊗ η_{} at ({},{};{})",
                                gname(b),
                                gname(a),
                                gname(b),
                                gname(c)
                            ));
                            break 'i10;
                        }
                    }
                }
                let ng = pres.hom_len(b, x, y);
                if ng == 0 {
                    continue;
                }
                if let Some(table) = pres.laxator.get(&(a, b, c, unit, unit, x, y)) {
                    for g in 0..ng {
                        if table[pres.eta[a]][g] != pres.regrade_ix(b, c, x, y, g) {
                            cex = Some(format!(
                                "η_{} ⊗ f at ({},{};{})",
                                gname(a),
                                gname(a),
                                gname(b),
                                gname(c)
                            ));
                            break 'i10;
                        }
                    }
                }
            }
        }
    }
    report.push_outcome("1.x", cex);

    // 2.ii composition naturality
    let mut cex: Option<String> = None;
    'c2: for a in 0..n {
        for b in 0..n {
            if a == b || !pres.leq(a, b) {
                continue;
            }
            for x in 0..no {
                for y in 0..no {
                    for z in 0..no {
                        let nf = pres.hom_len(a, x, y);
                        let ng = pres.hom_len(a, y, z);
                        if nf == 0 || ng == 0 {
                            continue;
                        }
                        for f in 0..nf {
                            for g in 0..ng {
                                let composed = pres.comp[&(a, x, y, z)][f][g];
                                let lhs = pres.regrade_ix(a, b, x, z, composed);
                                let rf = pres.regrade_ix(a, b, x, y, f);
                                let rg = pres.regrade_ix(a, b, y, z, g);
                                let rhs = pres.comp[&(b, x, y, z)][rf][rg];
                                if lhs != rhs {
                                    cex = Some(format!("{} <= {}", gname(a), gname(b)));
                                    break 'c2;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    report.push_outcome("2.ii", cex);

    // 2.iii composition monoidality
    let mut cex: Option<String> = None;
    'c3: for &(a, b, c) in &triples {
        for x in 0..no {
            for y in 0..no {
                for z in 0..no {
                    let nf = pres.hom_len(a, x, y);
                    let ng = pres.hom_len(a, y, z);
                    if nf == 0 || ng == 0 {
                        continue;
                    }
                    for x2 in 0..no {
                        for y2 in 0..no {
                            for z2 in 0..no {
                                let nh = pres.hom_len(b, x2, y2);
                                let ni = pres.hom_len(b, y2, z2);
                                if nh == 0 || ni == 0 {
                                    continue;
                                }
                                for f in 0..nf {
                                    for g in 0..ng {
                                        for h in 0..nh {
                                            for i in 0..ni {
                                                let fg = pres.comp[&(a, x, y, z)][f][g];
                                                let hi = pres.comp[&(b, x2, y2, z2)][h][i];
                                                let lhs = pres.laxator
                                                    [&(a, b, c, x, z, x2, z2)][fg][hi];
                                                let fh = pres.laxator
                                                    [&(a, b, c, x, y, x2, y2)][f][h];
                                                let gi = pres.laxator
                                                    [&(a, b, c, y, z, y2, z2)][g][i];
                                                let rhs = pres.comp[&(
                                                    c,
                                                    pres.objects.mul(x, x2),
                                                    pres.objects.mul(y, y2),
                                                    pres.objects.mul(z, z2),
                                                )][fh][gi];
                                                if lhs != rhs {
                                                    cex = Some(format!(
                                                        "({},{};{})",
                                                        gname(a),
                                                        gname(b),
                                                        gname(c)
                                                    ));
                                                    break 'c3;
                                                }
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    report.push_outcome("2.iii", cex);

    // 3.ii identity naturality
    let mut cex: Option<String> = None;
    'i32: for a in 0..n {
        for b in 0..n {
            if !pres.leq(a, b) {
                continue;
            }
            for x in 0..no {
                let (Some(&ia), Some(&ib)) = (pres.ids.get(&(a, x)), pres.ids.get(&(b, x)))
                else {
                    continue;
                };
                if pres.regrade_ix(a, b, x, x, ia) != ib {
                    cex = Some(format!("{} <= {} at {}", gname(a), gname(b), pres.objects.name(x)));
                    break 'i32;
                }
            }
        }
    }
    report.push_outcome("3.ii", cex);

    // 3.iii identity monoidality
    let mut cex: Option<String> = None;
    'i33: for &(a, b, c) in &triples {
        for x in 0..no {
            for y in 0..no {
                let (Some(&ia), Some(&ib)) = (pres.ids.get(&(a, x)), pres.ids.get(&(b, y)))
                else {
                    continue;
                };
                let Some(table) = pres.laxator.get(&(a, b, c, x, x, y, y)) else { continue };
                let xy = pres.objects.mul(x, y);
                let Some(&ic) = pres.ids.get(&(c, xy)) else { continue };
                if table[ia][ib] != ic {
                    cex = Some(format!(
                        "({},{};{}) at {} {}",
                        gname(a),
                        gname(b),
                        gname(c),
                        pres.objects.name(x),
                        pres.objects.name(y)
                    ));
                    break 'i33;
                }
            }
        }
    }
    report.push_outcome("3.iii", cex);

    // 3.iv eta is the identity on I
    let mut cex: Option<String> = None;
    for c in 0..n {
        if pres.ids.get(&(c, unit)) != Some(&pres.eta[c]) {
            cex = Some(gname(c));
            break;
        }
    }
    report.push_outcome("3.iv", cex);

    // 4.i associativity of composition per grade
    let mut cex: Option<String> = None;
    'm41: for e in 0..n {
        for x in 0..no {
            for y in 0..no {
                for z in 0..no {
                    for w in 0..no {
                        let nf = pres.hom_len(e, x, y);
                        let ng = pres.hom_len(e, y, z);
                        let nh = pres.hom_len(e, z, w);
                        if nf == 0 || ng == 0 || nh == 0 {
                            continue;
                        }
                        for f in 0..nf {
                            for g in 0..ng {
                                for h in 0..nh {
                                    let lhs = pres.comp[&(e, x, z, w)]
                                        [pres.comp[&(e, x, y, z)][f][g]][h];
                                    let rhs = pres.comp[&(e, x, y, w)][f]
                                        [pres.comp[&(e, y, z, w)][g][h]];
                                    if lhs != rhs {
                                        cex = Some(gname(e));
                                        break 'm41;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    report.push_outcome("4.i", cex);

    // 4.ii unit laws per grade
    let mut cex: Option<String> = None;
    'm42: for e in 0..n {
        for x in 0..no {
            for y in 0..no {
                let nf = pres.hom_len(e, x, y);
                if nf == 0 {
                    continue;
                }
                let (Some(&ix), Some(&iy)) = (pres.ids.get(&(e, x)), pres.ids.get(&(e, y)))
                else {
                    cex = Some(format!("missing identity at {}", gname(e)));
                    break 'm42;
                };
                for f in 0..nf {
                    if pres.comp[&(e, x, x, y)][ix][f] != f
                        || pres.comp[&(e, x, y, y)][f][iy] != f
                    {
                        cex = Some(gname(e));
                        break 'm42;
                    }
                }
            }
        }
    }
    report.push_outcome("4.ii", cex);

    report
}

/// Direct table access used by mutation fixtures in tests.
impl LaxPresentation {
    pub fn perturb_laxator(
        &mut self,
        key: (usize, usize, usize, usize, usize, usize, usize),
        f: usize,
        g: usize,
        new_value: usize,
    ) -> Result<(), ConvError> {
        let table = self
            .laxator
            .get_mut(&key)
            .ok_or_else(|| ConvError::IllFormed("no laxator table at that key".into()))?;
        table[f][g] = new_value;
        Ok(())
    }

    pub fn laxator_keys(&self) -> Vec<LaxKey> {
        self.laxator.keys().copied().collect()
    }
}
