//! Exhaustive axiom verification over finite model tables.
//!
//! Counterexamples are the first failing tuple in a fixed scan order
//! (grades, then objects, then labels, all in declaration order), so
//! reports are byte-deterministic.

use crate::report::Report;

use super::{FiniteGradedModel, ModelError};

struct Cx<'a> {
    m: &'a FiniteGradedModel,
}

impl<'a> Cx<'a> {
    fn grade(&self, e: usize) -> String {
        self.m.support[e].to_string()
    }

    fn obj(&self, x: usize) -> &str {
        self.m.objects.name(x)
    }

    fn label(&self, e: usize, x: usize, y: usize, f: usize) -> &str {
        &self.m.hom_labels(e, x, y)[f]
    }
}

/// Check the five axiom families plus the per-grade category laws, all
/// exhaustively over well-typed in-support instances.
pub fn check_axioms(m: &FiniteGradedModel) -> Report {
    let mut report = Report::new();
    let cx = Cx { m };
    let ng = m.support.len();
    let no = m.objects.len();
    let zero = m.zero_ix();

    // CAT-ASSOC: (f ; g) ; h = f ; (g ; h) per grade
    let mut cex: Option<String> = None;
    'cat_assoc: for e in 0..ng {
        for x in 0..no {
            for y in 0..no {
                for z in 0..no {
                    for w in 0..no {
                        let (nf, ngg, nh) =
                            (m.hom_len(e, x, y), m.hom_len(e, y, z), m.hom_len(e, z, w));
                        for f in 0..nf {
                            for g in 0..ngg {
                                for h in 0..nh {
                                    let lhs =
                                        m.comp_ix(e, x, z, w, m.comp_ix(e, x, y, z, f, g), h);
                                    let rhs =
                                        m.comp_ix(e, x, y, w, f, m.comp_ix(e, y, z, w, g, h));
                                    if lhs != rhs {
                                        cex = Some(format!(
                                            "grade {}; {} {} {}",
                                            cx.grade(e),
                                            cx.label(e, x, y, f),
                                            cx.label(e, y, z, g),
                                            cx.label(e, z, w, h)
                                        ));
                                        break 'cat_assoc;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    report.push_outcome("CAT-ASSOC", cex);

    // CAT-UNIT: identities at each grade are units for composition
    let mut cex: Option<String> = None;
    'cat_unit: for e in 0..ng {
        for x in 0..no {
            if m.hom_len(zero, x, x) == 0 {
                continue;
            }
            for y in 0..no {
                let nf = m.hom_len(e, x, y);
                if nf == 0 {
                    continue;
                }
                if m.hom_len(zero, y, y) == 0 {
                    continue;
                }
                let idx = m.id_at(e, x);
                let idy = m.id_at(e, y);
                for f in 0..nf {
                    if m.comp_ix(e, x, x, y, idx, f) != f || m.comp_ix(e, x, y, y, f, idy) != f {
                        cex = Some(format!(
                            "grade {}; {}",
                            cx.grade(e),
                            cx.label(e, x, y, f)
                        ));
                        break 'cat_unit;
                    }
                }
            }
        }
    }
    report.push_outcome("CAT-UNIT", cex);

    // REG-ACT: identity regrading and composition of regradings
    let mut cex: Option<String> = None;
    'reg_act: for e in 0..ng {
        for x in 0..no {
            for y in 0..no {
                let nf = m.hom_len(e, x, y);
                for f in 0..nf {
                    if m.regrade_ix(e, e, x, y, f) != f {
                        cex = Some(format!(
                            "grade {}; {} is moved by the identity regrading",
                            cx.grade(e),
                            cx.label(e, x, y, f)
                        ));
                        break 'reg_act;
                    }
                }
                for e2 in 0..ng {
                    if !m.leq_ix(e, e2) {
                        continue;
                    }
                    for e3 in 0..ng {
                        if !m.leq_ix(e2, e3) {
                            continue;
                        }
                        for f in 0..nf {
                            let via = m.regrade_ix(e2, e3, x, y, m.regrade_ix(e, e2, x, y, f));
                            let direct = m.regrade_ix(e, e3, x, y, f);
                            if via != direct {
                                cex = Some(format!(
                                    "grades {} <= {} <= {}; {}",
                                    cx.grade(e),
                                    cx.grade(e2),
                                    cx.grade(e3),
                                    cx.label(e, x, y, f)
                                ));
                                break 'reg_act;
                            }
                        }
                    }
                }
            }
        }
    }
    report.push_outcome("REG-ACT", cex);

    // REG-TENSOR: (f ⊗ g) regraded = (f regraded) ⊗ (g regraded)
    let mut cex: Option<String> = None;
    'reg_tensor: for a in 0..ng {
        for b in 0..ng {
            let Some(ab) = m.add_ix(a, b) else { continue };
            for c in 0..ng {
                if !m.leq_ix(a, c) {
                    continue;
                }
                for d in 0..ng {
                    if !m.leq_ix(b, d) {
                        continue;
                    }
                    let Some(cd) = m.add_ix(c, d) else { continue };
                    for x in 0..no {
                        for y in 0..no {
                            let nf = m.hom_len(a, x, y);
                            for x2 in 0..no {
                                for y2 in 0..no {
                                    let ngg = m.hom_len(b, x2, y2);
                                    let xo = m.objects.mul(x, x2);
                                    let yo = m.objects.mul(y, y2);
                                    for f in 0..nf {
                                        for g in 0..ngg {
                                            let lhs = m.regrade_ix(
                                                ab,
                                                cd,
                                                xo,
                                                yo,
                                                m.tensor_ix(a, b, x, y, x2, y2, f, g),
                                            );
                                            let rf = m.regrade_ix(a, c, x, y, f);
                                            let rg = m.regrade_ix(b, d, x2, y2, g);
                                            let rhs =
                                                m.tensor_ix(c, d, x, y, x2, y2, rf, rg);
                                            if lhs != rhs {
                                                cex = Some(format!(
                                                    "grades {} {} -> {} {}; {} ⊗ {}",
                                                    cx.grade(a),
                                                    cx.grade(b),
                                                    cx.grade(c),
                                                    cx.grade(d),
                                                    cx.label(a, x, y, f),
                                                    cx.label(b, x2, y2, g)
                                                ));
                                                break 'reg_tensor;
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
    report.push_outcome("REG-TENSOR", cex);

    // TENSOR-UNIT-ASSOC: unit laws with id_I and associativity of ⊗
    let mut cex: Option<String> = None;
    let unit_obj = m.objects.unit();
    'tua: for a in 0..ng {
        // unit laws need a ⊕ 0 = a, which always holds
        for x in 0..no {
            for y in 0..no {
                let nf = m.hom_len(a, x, y);
                if nf == 0 {
                    continue;
                }
                if m.hom_len(zero, unit_obj, unit_obj) > 0 {
                    let idi = m.id[unit_obj];
                    for f in 0..nf {
                        let right = m.tensor_ix(a, zero, x, y, unit_obj, unit_obj, f, idi);
                        let left = m.tensor_ix(zero, a, unit_obj, unit_obj, x, y, idi, f);
                        if right != f || left != f {
                            cex = Some(format!(
                                "grade {}; {} ⊗ id_I",
                                cx.grade(a),
                                cx.label(a, x, y, f)
                            ));
                            break 'tua;
                        }
                    }
                }
            }
        }
        // associativity over orthogonal triples
        for b in 0..ng {
            let Some(ab) = m.add_ix(a, b) else { continue };
            for c in 0..ng {
                let Some(abc) = m.add_ix(ab, c) else { continue };
                let Some(bc) = m.add_ix(b, c) else { continue };
                if m.add_ix(a, bc) != Some(abc) {
                    continue;
                }
                for x in 0..no {
                    for y in 0..no {
                        let nf = m.hom_len(a, x, y);
                        for x2 in 0..no {
                            for y2 in 0..no {
                                let ngg = m.hom_len(b, x2, y2);
                                for x3 in 0..no {
                                    for y3 in 0..no {
                                        let nh = m.hom_len(c, x3, y3);
                                        for f in 0..nf {
                                            for g in 0..ngg {
                                                for h in 0..nh {
                                                    let fg =
                                                        m.tensor_ix(a, b, x, y, x2, y2, f, g);
                                                    let lhs = m.tensor_ix(
                                                        ab,
                                                        c,
                                                        m.objects.mul(x, x2),
                                                        m.objects.mul(y, y2),
                                                        x3,
                                                        y3,
                                                        fg,
                                                        h,
                                                    );
                                                    let gh = m
                                                        .tensor_ix(b, c, x2, y2, x3, y3, g, h);
                                                    let rhs = m.tensor_ix(
                                                        a,
                                                        bc,
                                                        x,
                                                        y,
                                                        m.objects.mul(x2, x3),
                                                        m.objects.mul(y2, y3),
                                                        f,
                                                        gh,
                                                    );
                                                    if lhs != rhs {
                                                        cex = Some(format!(
                                                            "grades {} {} {}; {} ⊗ {} ⊗ {}",
                                                            cx.grade(a),
                                                            cx.grade(b),
                                                            cx.grade(c),
                                                            cx.label(a, x, y, f),
                                                            cx.label(b, x2, y2, g),
                                                            cx.label(c, x3, y3, h)
                                                        ));
                                                        break 'tua;
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
    report.push_outcome("TENSOR-UNIT-ASSOC", cex);

    // TENSOR-ID: id_X ⊗ id_Y = id_{X⊗Y} at grade 0
    let mut cex: Option<String> = None;
    if m.add_ix(zero, zero).is_some() {
        'tid: for x in 0..no {
            for y in 0..no {
                if m.hom_len(zero, x, x) == 0 || m.hom_len(zero, y, y) == 0 {
                    continue;
                }
                let lhs = m.tensor_ix(zero, zero, x, x, y, y, m.id[x], m.id[y]);
                if lhs != m.id[m.objects.mul(x, y)] {
                    cex = Some(format!("{} {}", cx.obj(x), cx.obj(y)));
                    break 'tid;
                }
            }
        }
    }
    report.push_outcome("TENSOR-ID", cex);

    // INTER: (f ⊗ g) ; (h ⊗ k) = (f ; h) ⊗ (g ; k)
    let mut cex: Option<String> = None;
    'inter: for a in 0..ng {
        for b in 0..ng {
            let Some(ab) = m.add_ix(a, b) else { continue };
            for x in 0..no {
                for y in 0..no {
                    for z in 0..no {
                        let nf = m.hom_len(a, x, y);
                        let nh = m.hom_len(a, y, z);
                        if nf == 0 || nh == 0 {
                            continue;
                        }
                        for x2 in 0..no {
                            for y2 in 0..no {
                                for z2 in 0..no {
                                    let ngg = m.hom_len(b, x2, y2);
                                    let nk = m.hom_len(b, y2, z2);
                                    if ngg == 0 || nk == 0 {
                                        continue;
                                    }
                                    for f in 0..nf {
                                        for h in 0..nh {
                                            for g in 0..ngg {
                                                for k in 0..nk {
                                                    let fg =
                                                        m.tensor_ix(a, b, x, y, x2, y2, f, g);
                                                    let hk =
                                                        m.tensor_ix(a, b, y, z, y2, z2, h, k);
                                                    let lhs = m.comp_ix(
                                                        ab,
                                                        m.objects.mul(x, x2),
                                                        m.objects.mul(y, y2),
                                                        m.objects.mul(z, z2),
                                                        fg,
                                                        hk,
                                                    );
                                                    let fh = m.comp_ix(a, x, y, z, f, h);
                                                    let gk = m.comp_ix(b, x2, y2, z2, g, k);
                                                    let rhs = m
                                                        .tensor_ix(a, b, x, z, x2, z2, fh, gk);
                                                    if lhs != rhs {
                                                        cex = Some(format!(
                                                            "grades {} {}; ({} ⊗ {}) ; ({} ⊗ {})",
                                                            cx.grade(a),
                                                            cx.grade(b),
                                                            cx.label(a, x, y, f),
                                                            cx.label(b, x2, y2, g),
                                                            cx.label(a, y, z, h),
                                                            cx.label(b, y2, z2, k)
                                                        ));
                                                        break 'inter;
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
    report.push_outcome("INTER", cex);

    report
}

/// Verify the grade-0 symmetric braiding laws, naturality, and the graded
/// symmetry equation over all orthogonal grade pairs.
pub fn check_symmetric(m: &FiniteGradedModel) -> Result<Report, ModelError> {
    let braiding = m.braiding.as_ref().ok_or(ModelError::NoBraiding)?;
    let mut report = Report::new();
    let cx = Cx { m };
    let ng = m.support.len();
    let no = m.objects.len();
    let zero = m.zero_ix();
    let braid = |x: usize, y: usize| braiding[&(x, y)];

    // BRAID-INVOL: σ_{X,Y} ; σ_{Y,X} = id
    let mut cex: Option<String> = None;
    for x in 0..no {
        for y in 0..no {
            let xy = m.objects.mul(x, y);
            let yx = m.objects.mul(y, x);
            let lhs = m.comp_ix(zero, xy, yx, xy, braid(x, y), braid(y, x));
            if lhs != m.id[xy] {
                cex = Some(format!("{} {}", cx.obj(x), cx.obj(y)));
                break;
            }
        }
    }
    report.push_outcome("BRAID-INVOL", cex);

    // BRAID-UNIT: σ_{X,I} = id_X and σ_{I,X} = id_X
    let mut cex: Option<String> = None;
    let unit = m.objects.unit();
    for x in 0..no {
        if braid(x, unit) != m.id[x] || braid(unit, x) != m.id[x] {
            cex = Some(cx.obj(x).to_string());
            break;
        }
    }
    report.push_outcome("BRAID-UNIT", cex);

    // BRAID-HEXAGON: (σ_{X,Y} ⊗ id_Z) ; (id_Y ⊗ σ_{X,Z}) = σ_{X,Y⊗Z}
    let mut cex: Option<String> = None;
    if m.add_ix(zero, zero).is_some() {
        'hex: for x in 0..no {
            for y in 0..no {
                for z in 0..no {
                    if m.hom_len(zero, z, z) == 0 || m.hom_len(zero, y, y) == 0 {
                        continue;
                    }
                    let xy = m.objects.mul(x, y);
                    let yx = m.objects.mul(y, x);
                    let lhs1 = m.tensor_ix(zero, zero, xy, yx, z, z, braid(x, y), m.id[z]);
                    let xz = m.objects.mul(x, z);
                    let zx = m.objects.mul(z, x);
                    let lhs2 = m.tensor_ix(zero, zero, y, y, xz, zx, m.id[y], braid(x, z));
                    let xyz = m.objects.mul(xy, z);
                    let yxz = m.objects.mul(yx, z);
                    let yzx = m.objects.mul(y, zx);
                    let lhs = m.comp_ix(zero, xyz, yxz, yzx, lhs1, lhs2);
                    if lhs != braid(x, m.objects.mul(y, z)) {
                        cex = Some(format!("{} {} {}", cx.obj(x), cx.obj(y), cx.obj(z)));
                        break 'hex;
                    }
                }
            }
        }
    }
    report.push_outcome("BRAID-HEXAGON", cex);

    // BRAID-NATURAL: (f ⊗ g) ; σ = σ ; (g ⊗ f) at grade 0
    let mut cex: Option<String> = None;
    if m.add_ix(zero, zero).is_some() {
        'nat: for x in 0..no {
            for y in 0..no {
                let nf = m.hom_len(zero, x, y);
                for x2 in 0..no {
                    for y2 in 0..no {
                        let ngg = m.hom_len(zero, x2, y2);
                        for f in 0..nf {
                            for g in 0..ngg {
                                let fg = m.tensor_ix(zero, zero, x, y, x2, y2, f, g);
                                let gf = m.tensor_ix(zero, zero, x2, y2, x, y, g, f);
                                let xx2 = m.objects.mul(x, x2);
                                let yy2 = m.objects.mul(y, y2);
                                let y2y = m.objects.mul(y2, y);
                                let x2x = m.objects.mul(x2, x);
                                let lhs = m.comp_ix(zero, xx2, yy2, y2y, fg, braid(y, y2));
                                let rhs = m.comp_ix(zero, xx2, x2x, y2y, braid(x, x2), gf);
                                if lhs != rhs {
                                    cex = Some(format!(
                                        "{} ⊗ {}",
                                        cx.label(zero, x, y, f),
                                        cx.label(zero, x2, y2, g)
                                    ));
                                    break 'nat;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    report.push_outcome("BRAID-NATURAL", cex);

    // SYM-GRADED: (f ⊗ g) ; σ↑ = σ↑ ; (g ⊗ f) over all a ⊥ b
    let mut cex: Option<String> = None;
    'sym: for a in 0..ng {
        for b in 0..ng {
            let Some(ab) = m.add_ix(a, b) else { continue };
            for x in 0..no {
                for y in 0..no {
                    let nf = m.hom_len(a, x, y);
                    for x2 in 0..no {
                        for y2 in 0..no {
                            let ngg = m.hom_len(b, x2, y2);
                            for f in 0..nf {
                                for g in 0..ngg {
                                    let fg = m.tensor_ix(a, b, x, y, x2, y2, f, g);
                                    let gf = m.tensor_ix(b, a, x2, y2, x, y, g, f);
                                    let xx2 = m.objects.mul(x, x2);
                                    let yy2 = m.objects.mul(y, y2);
                                    let y2y = m.objects.mul(y2, y);
                                    let x2x = m.objects.mul(x2, x);
                                    let sig_cod =
                                        m.regrade_ix(zero, ab, yy2, y2y, braid(y, y2));
                                    let sig_dom =
                                        m.regrade_ix(zero, ab, xx2, x2x, braid(x, x2));
                                    let lhs = m.comp_ix(ab, xx2, yy2, y2y, fg, sig_cod);
                                    let rhs = m.comp_ix(ab, xx2, x2x, y2y, sig_dom, gf);
                                    if lhs != rhs {
                                        cex = Some(format!(
                                            "grades {} {}; {} ⊗ {}",
                                            cx.grade(a),
                                            cx.grade(b),
                                            cx.label(a, x, y, f),
                                            cx.label(b, x2, y2, g)
                                        ));
                                        break 'sym;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    report.push_outcome("SYM-GRADED", cex);

    Ok(report)
}

/// The interchange lemma: every grade-0 morphism interchanges with every
/// morphism, in three equivalent forms. Exhaustive over the model.
pub fn check_interchange_lemma(m: &FiniteGradedModel) -> Report {
    let mut report = Report::new();
    let cx = Cx { m };
    let ng = m.support.len();
    let no = m.objects.len();
    let zero = m.zero_ix();

    let mut cex: Option<String> = None;
    'outer: for a in 0..ng {
        // f at 0, g at a; both 0 ⊕ a and a ⊕ 0 land at a
        if m.add_ix(zero, a) != Some(a) {
            continue;
        }
        for x in 0..no {
            for y in 0..no {
                let nf = m.hom_len(zero, x, y);
                if nf == 0 || m.hom_len(zero, x, x) == 0 || m.hom_len(zero, y, y) == 0 {
                    continue;
                }
                for x2 in 0..no {
                    for y2 in 0..no {
                        let ngg = m.hom_len(a, x2, y2);
                        if ngg == 0 || m.hom_len(zero, x2, x2) == 0 || m.hom_len(zero, y2, y2) == 0
                        {
                            continue;
                        }
                        for f in 0..nf {
                            for g in 0..ngg {
                                let f_up = m.regrade_ix(zero, a, x, y, f);
                                // (f↑ ⊗ id) ; (id ⊗ g)
                                let first = m.tensor_ix(a, zero, x, y, x2, x2, f_up, m.id[x2]);
                                let second = m.tensor_ix(zero, a, y, y, x2, y2, m.id[y], g);
                                let lhs1 = m.comp_ix(
                                    a,
                                    m.objects.mul(x, x2),
                                    m.objects.mul(y, x2),
                                    m.objects.mul(y, y2),
                                    first,
                                    second,
                                );
                                // (id ⊗ g) ; (f↑ ⊗ id)
                                let third = m.tensor_ix(zero, a, x, x, x2, y2, m.id[x], g);
                                let fourth = m.tensor_ix(a, zero, x, y, y2, y2, f_up, m.id[y2]);
                                let lhs2 = m.comp_ix(
                                    a,
                                    m.objects.mul(x, x2),
                                    m.objects.mul(x, y2),
                                    m.objects.mul(y, y2),
                                    third,
                                    fourth,
                                );
                                // f ⊗ g directly
                                let direct = m.tensor_ix(zero, a, x, y, x2, y2, f, g);
                                if lhs1 != direct || lhs2 != direct {
                                    cex = Some(format!(
                                        "grade {}; {} vs {}",
                                        cx.grade(a),
                                        cx.label(zero, x, y, f),
                                        cx.label(a, x2, y2, g)
                                    ));
                                    break 'outer;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    report.push_outcome("INTERCHANGE-LEMMA", cex);
    report
}

/// The regrading-as-tensor identity: `f↑b = f ⊗ (id_I)↑c` for every
/// witness `c` of `grade(f) ⩽ b`. Exhaustive over finite supports.
pub fn check_regrade_as_unit_tensor(m: &FiniteGradedModel) -> Report {
    let mut report = Report::new();
    let cx = Cx { m };
    let ng = m.support.len();
    let no = m.objects.len();
    let zero = m.zero_ix();
    let unit = m.objects.unit();

    let mut cex: Option<String> = None;
    if m.hom_len(zero, unit, unit) > 0 {
        'outer: for a in 0..ng {
            for c in 0..ng {
                let Some(b) = m.add_ix(a, c) else { continue };
                for x in 0..no {
                    for y in 0..no {
                        let nf = m.hom_len(a, x, y);
                        for f in 0..nf {
                            let lhs = m.regrade_ix(a, b, x, y, f);
                            let id_c = m.id_at(c, unit);
                            let rhs = m.tensor_ix(a, c, x, y, unit, unit, f, id_c);
                            if lhs != rhs {
                                cex = Some(format!(
                                    "grades {} + {} = {}; {}",
                                    cx.grade(a),
                                    cx.grade(c),
                                    cx.grade(b),
                                    cx.label(a, x, y, f)
                                ));
                                break 'outer;
                            }
                        }
                    }
                }
            }
        }
    }
    report.push_outcome("REGRADE-AS-UNIT-TENSOR", cex);
    report
}

/// Monoidal tables extracted at an idempotent grade.
#[derive(Debug, Clone)]
pub struct MonoidalView {
    pub grade: usize,
    pub model: FiniteGradedModel,
}

/// Premonoidal tables extracted at an arbitrary grade: whiskering by an
/// object is tensoring with its grade-0 identity.
#[derive(Debug, Clone)]
pub struct PremonoidalView {
    pub grade: usize,
    pub model: FiniteGradedModel,
}

/// Extract the monoidal category sitting at an idempotent grade `e`.
pub fn monoidal_view(m: &FiniteGradedModel, e: &crate::pcm::Grade) -> Result<MonoidalView, ModelError> {
    let ix = m
        .grade_ix(e)
        .ok_or_else(|| ModelError::Unknown { what: "grade".into(), name: e.to_string() })?;
    if m.add_ix(ix, ix) != Some(ix) {
        return Err(ModelError::NotIdempotent(e.to_string()));
    }
    Ok(MonoidalView { grade: ix, model: m.clone() })
}

/// Extract the premonoidal category sitting at grade `a`.
pub fn premonoidal_view(m: &FiniteGradedModel, a: &crate::pcm::Grade) -> Result<PremonoidalView, ModelError> {
    let ix = m
        .grade_ix(a)
        .ok_or_else(|| ModelError::Unknown { what: "grade".into(), name: a.to_string() })?;
    Ok(PremonoidalView { grade: ix, model: m.clone() })
}

/// Strict-monoidal-category axioms for a [`MonoidalView`].
pub fn check_monoidal(v: &MonoidalView) -> Report {
    let m = &v.model;
    let e = v.grade;
    let mut report = Report::new();
    let no = m.objects.len();

    // category laws at e
    let mut cex: Option<String> = None;
    'assoc: for x in 0..no {
        for y in 0..no {
            for z in 0..no {
                for w in 0..no {
                    let (nf, ngg, nh) = (m.hom_len(e, x, y), m.hom_len(e, y, z), m.hom_len(e, z, w));
                    for f in 0..nf {
                        for g in 0..ngg {
                            for h in 0..nh {
                                if m.comp_ix(e, x, z, w, m.comp_ix(e, x, y, z, f, g), h)
                                    != m.comp_ix(e, x, y, w, f, m.comp_ix(e, y, z, w, g, h))
                                {
                                    cex = Some("composition associativity".into());
                                    break 'assoc;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    report.push_outcome("SEQ-ASSOC", cex);

    // interchange of ⊗_{e,e} with composition
    let mut cex: Option<String> = None;
    'inter: for x in 0..no {
        for y in 0..no {
            for z in 0..no {
                let nf = m.hom_len(e, x, y);
                let nh = m.hom_len(e, y, z);
                for x2 in 0..no {
                    for y2 in 0..no {
                        for z2 in 0..no {
                            let ngg = m.hom_len(e, x2, y2);
                            let nk = m.hom_len(e, y2, z2);
                            for f in 0..nf {
                                for h in 0..nh {
                                    for g in 0..ngg {
                                        for k in 0..nk {
                                            let fg = m.tensor_ix(e, e, x, y, x2, y2, f, g);
                                            let hk = m.tensor_ix(e, e, y, z, y2, z2, h, k);
                                            let lhs = m.comp_ix(
                                                e,
                                                m.objects.mul(x, x2),
                                                m.objects.mul(y, y2),
                                                m.objects.mul(z, z2),
                                                fg,
                                                hk,
                                            );
                                            let rhs = m.tensor_ix(
                                                e,
                                                e,
                                                x,
                                                z,
                                                x2,
                                                z2,
                                                m.comp_ix(e, x, y, z, f, h),
                                                m.comp_ix(e, x2, y2, z2, g, k),
                                            );
                                            if lhs != rhs {
                                                cex = Some("tensor/composition interchange".into());
                                                break 'inter;
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
    report.push_outcome("PAR-INTERCHANGE", cex);

    // identities tensor to identities
    let mut cex: Option<String> = None;
    for x in 0..no {
        for y in 0..no {
            if m.hom_len(m.zero_ix(), x, x) == 0 || m.hom_len(m.zero_ix(), y, y) == 0 {
                continue;
            }
            let lhs = m.tensor_ix(e, e, x, x, y, y, m.id_at(e, x), m.id_at(e, y));
            if lhs != m.id_at(e, m.objects.mul(x, y)) {
                cex = Some(format!("{} {}", m.objects.name(x), m.objects.name(y)));
            }
        }
    }
    report.push_outcome("PAR-ID", cex);

    report
}

/// Strict-premonoidal-category axioms for a [`PremonoidalView`]: whiskering
/// functoriality and the premonoidal coherence equations.
pub fn check_premonoidal(v: &PremonoidalView) -> Report {
    let m = &v.model;
    let a = v.grade;
    let zero = m.zero_ix();
    let mut report = Report::new();
    let no = m.objects.len();

    let lwhisker = |obj: usize, x: usize, y: usize, f: usize| -> usize {
        m.tensor_ix(zero, a, obj, obj, x, y, m.id[obj], f)
    };
    let rwhisker = |f: usize, x: usize, y: usize, obj: usize| -> usize {
        m.tensor_ix(a, zero, x, y, obj, obj, f, m.id[obj])
    };

    // whiskering functors preserve composition and identities
    let mut cex: Option<String> = None;
    'func: for obj in 0..no {
        if m.hom_len(zero, obj, obj) == 0 {
            continue;
        }
        for x in 0..no {
            for y in 0..no {
                for z in 0..no {
                    let nf = m.hom_len(a, x, y);
                    let ngg = m.hom_len(a, y, z);
                    for f in 0..nf {
                        for g in 0..ngg {
                            let comp = m.comp_ix(a, x, y, z, f, g);
                            let lhs = lwhisker(obj, x, z, comp);
                            let rhs = m.comp_ix(
                                a,
                                m.objects.mul(obj, x),
                                m.objects.mul(obj, y),
                                m.objects.mul(obj, z),
                                lwhisker(obj, x, y, f),
                                lwhisker(obj, y, z, g),
                            );
                            if lhs != rhs {
                                cex = Some(format!("left whiskering by {}", m.objects.name(obj)));
                                break 'func;
                            }
                            let lhs = rwhisker(comp, x, z, obj);
                            let rhs = m.comp_ix(
                                a,
                                m.objects.mul(x, obj),
                                m.objects.mul(y, obj),
                                m.objects.mul(z, obj),
                                rwhisker(f, x, y, obj),
                                rwhisker(g, y, z, obj),
                            );
                            if lhs != rhs {
                                cex = Some(format!("right whiskering by {}", m.objects.name(obj)));
                                break 'func;
                            }
                        }
                    }
                }
            }
        }
    }
    report.push_outcome("WHISKER-FUNCTORIAL", cex);

    // (A ⋉ f) ⋊ B = A ⋉ (f ⋊ B); unit and product object laws
    let mut cex: Option<String> = None;
    'coh: for oa in 0..no {
        for ob in 0..no {
            if m.hom_len(zero, oa, oa) == 0 || m.hom_len(zero, ob, ob) == 0 {
                continue;
            }
            for x in 0..no {
                for y in 0..no {
                    let nf = m.hom_len(a, x, y);
                    for f in 0..nf {
                        let left_then_right = rwhisker(
                            lwhisker(oa, x, y, f),
                            m.objects.mul(oa, x),
                            m.objects.mul(oa, y),
                            ob,
                        );
                        let right_then_left = lwhisker(
                            oa,
                            m.objects.mul(x, ob),
                            m.objects.mul(y, ob),
                            rwhisker(f, x, y, ob),
                        );
                        if left_then_right != right_then_left {
                            cex = Some(format!(
                                "{} ⋉ - ⋊ {}",
                                m.objects.name(oa),
                                m.objects.name(ob)
                            ));
                            break 'coh;
                        }
                        // (A⊗B) ⋉ f = A ⋉ (B ⋉ f)
                        let oab = m.objects.mul(oa, ob);
                        if m.hom_len(zero, oab, oab) > 0 {
                            let direct = lwhisker(oab, x, y, f);
                            let nested = lwhisker(
                                oa,
                                m.objects.mul(ob, x),
                                m.objects.mul(ob, y),
                                lwhisker(ob, x, y, f),
                            );
                            if direct != nested {
                                cex = Some(format!(
                                    "({} ⊗ {}) ⋉ -",
                                    m.objects.name(oa),
                                    m.objects.name(ob)
                                ));
                                break 'coh;
                            }
                        }
                    }
                }
            }
        }
    }
    report.push_outcome("WHISKER-COHERENT", cex);

    // I ⋉ f = f = f ⋊ I
    let mut cex: Option<String> = None;
    let unit = m.objects.unit();
    if m.hom_len(zero, unit, unit) > 0 {
        'unit: for x in 0..no {
            for y in 0..no {
                let nf = m.hom_len(a, x, y);
                for f in 0..nf {
                    if lwhisker(unit, x, y, f) != f || rwhisker(f, x, y, unit) != f {
                        cex = Some(format!("unit whiskering at grade index {a}"));
                        break 'unit;
                    }
                }
            }
        }
    }
    report.push_outcome("WHISKER-UNIT", cex);

    report
}
