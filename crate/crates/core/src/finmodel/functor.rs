//! Morphisms of graded models: an object monoid homomorphism, a PCM
//! homomorphism, and per-grade label maps, checked against preservation of
//! composition, identities, monoidal products, and regradings. Pulling a
//! model back along a PCM homomorphism reindexes its hom-sets.

use std::collections::BTreeMap;

use crate::pcm::{check_hom, PcmHom};
use crate::report::Report;

use super::{ill, FiniteGradedModel, HomKey, ModelError, RegradeKey, TensorKey};

/// The data of a graded-model morphism. `label_maps` is keyed by source
/// grade index and object pair, mapping source label indices to target
/// label indices in `hom(phi(e), M(x), M(y))`.
#[derive(Debug, Clone, PartialEq)]
pub struct GradedFunctorData {
    pub source: FiniteGradedModel,
    pub target: FiniteGradedModel,
    pub phi: PcmHom,
    pub obj_map: Vec<usize>,
    pub label_maps: BTreeMap<HomKey, Vec<usize>>,
}

impl GradedFunctorData {
    /// The identity morphism on a model.
    pub fn identity(model: &FiniteGradedModel) -> Result<GradedFunctorData, ModelError> {
        let phi = PcmHom::identity(model.pcm.clone())
            .map_err(|e| ModelError::InvalidHom(e.to_string()))?;
        let mut label_maps = BTreeMap::new();
        for (&(e, x, y), labels) in &model.hom {
            label_maps.insert((e, x, y), (0..labels.len()).collect());
        }
        Ok(GradedFunctorData {
            source: model.clone(),
            target: model.clone(),
            phi,
            obj_map: (0..model.objects.len()).collect(),
            label_maps,
        })
    }

    /// Image grade index (in the target support) of a source grade index.
    pub(crate) fn phi_ix(&self, e: usize) -> Result<usize, ModelError> {
        let img = self
            .phi
            .apply(&self.source.support[e])
            .map_err(|err| ModelError::InvalidHom(err.to_string()))?;
        self.target
            .grade_ix(&img)
            .ok_or_else(|| ill("phi", format!("image grade {img} outside the target support")))
    }

    pub(crate) fn map_label(&self, e: usize, x: usize, y: usize, f: usize) -> Option<usize> {
        self.label_maps.get(&(e, x, y)).and_then(|m| m.get(f)).copied()
    }
}

/// Verify that the data is a morphism of graded models.
pub fn check_graded_functor(data: &GradedFunctorData) -> Report {
    let mut report = Report::new();
    let src = &data.source;
    let tgt = &data.target;
    let no = src.objects.len();

    // object map is a monoid homomorphism
    let mut cex: Option<String> = None;
    if data.obj_map.len() != no || data.obj_map.iter().any(|&v| v >= tgt.objects.len()) {
        cex = Some("object map has wrong shape".into());
    } else if data.obj_map[src.objects.unit()] != tgt.objects.unit() {
        cex = Some("unit object not preserved".into());
    } else {
        'obj: for x in 0..no {
            for y in 0..no {
                if data.obj_map[src.objects.mul(x, y)]
                    != tgt.objects.mul(data.obj_map[x], data.obj_map[y])
                {
                    cex = Some(format!("{} {}", src.objects.name(x), src.objects.name(y)));
                    break 'obj;
                }
            }
        }
    }
    let obj_ok = cex.is_none();
    report.push_outcome("OBJ-MONOID", cex);

    // phi is a PCM homomorphism
    let phi_report = check_hom(&data.phi);
    let phi_ok = phi_report.passed();
    report.push_outcome(
        "PCM-HOM",
        if phi_ok { None } else { Some("phi fails the homomorphism check".into()) },
    );

    if !obj_ok || !phi_ok {
        // the remaining checks would index out of bounds
        report.push_outcome("SHAPE", Some("skipped: object map or phi invalid".into()));
        return report;
    }

    // label maps exist, are total, and land in the right hom-sets
    let mut cex: Option<String> = None;
    'shape: for (&(e, x, y), labels) in &src.hom {
        if labels.is_empty() {
            continue;
        }
        let fe = match data.phi_ix(e) {
            Ok(v) => v,
            Err(err) => {
                cex = Some(err.to_string());
                break 'shape;
            }
        };
        let (mx, my) = (data.obj_map[x], data.obj_map[y]);
        let Some(map) = data.label_maps.get(&(e, x, y)) else {
            cex = Some(format!("missing label map at hom {e} {x} {y}"));
            break 'shape;
        };
        if map.len() != labels.len() {
            cex = Some(format!("label map at hom {e} {x} {y} has wrong length"));
            break 'shape;
        }
        let nt = tgt.hom_len(fe, mx, my);
        for &v in map {
            if v >= nt {
                cex = Some(format!("label map at hom {e} {x} {y} exits its hom-set"));
                break 'shape;
            }
        }
    }
    let shape_ok = cex.is_none();
    report.push_outcome("SHAPE", cex);
    if !shape_ok {
        return report;
    }

    let ns = src.support.len();

    // identities are preserved
    let mut cex: Option<String> = None;
    let zero = src.zero_ix();
    for x in 0..no {
        let img = data.map_label(zero, x, x, src.id[x]);
        if img != Some(tgt.id[data.obj_map[x]]) {
            cex = Some(src.objects.name(x).to_string());
            break;
        }
    }
    report.push_outcome("IDENTITIES", cex);

    // functoriality per grade
    let mut cex: Option<String> = None;
    'func: for e in 0..ns {
        let fe = data.phi_ix(e).expect("shape checked");
        for x in 0..no {
            for y in 0..no {
                let nf = src.hom_len(e, x, y);
                for z in 0..no {
                    let ng = src.hom_len(e, y, z);
                    if nf == 0 || ng == 0 {
                        continue;
                    }
                    for f in 0..nf {
                        for g in 0..ng {
                            let composed = src.comp_ix(e, x, y, z, f, g);
                            let lhs = data.map_label(e, x, z, composed);
                            let mf = data.map_label(e, x, y, f).expect("shape checked");
                            let mg = data.map_label(e, y, z, g).expect("shape checked");
                            let rhs = Some(tgt.comp_ix(
                                fe,
                                data.obj_map[x],
                                data.obj_map[y],
                                data.obj_map[z],
                                mf,
                                mg,
                            ));
                            if lhs != rhs {
                                cex = Some(format!(
                                    "grade {}; {} ; {}",
                                    src.support[e],
                                    src.hom_labels(e, x, y)[f],
                                    src.hom_labels(e, y, z)[g]
                                ));
                                break 'func;
                            }
                        }
                    }
                }
            }
        }
    }
    report.push_outcome("FUNCTORIALITY", cex);

    // tensor preservation over orthogonal grades
    let mut cex: Option<String> = None;
    'tensor: for a in 0..ns {
        for b in 0..ns {
            let Some(ab) = src.add_ix(a, b) else { continue };
            let fa = data.phi_ix(a).expect("shape checked");
            let fb = data.phi_ix(b).expect("shape checked");
            let Some(fab) = tgt.add_ix(fa, fb) else {
                cex = Some(format!(
                    "image grades {} {} not orthogonal in the target support",
                    tgt.support[fa], tgt.support[fb]
                ));
                break 'tensor;
            };
            if data.phi_ix(ab).expect("shape checked") != fab {
                cex = Some("phi does not commute with ⊕".into());
                break 'tensor;
            }
            for x in 0..no {
                for y in 0..no {
                    let nf = src.hom_len(a, x, y);
                    for x2 in 0..no {
                        for y2 in 0..no {
                            let ng = src.hom_len(b, x2, y2);
                            if nf == 0 || ng == 0 {
                                continue;
                            }
                            for f in 0..nf {
                                for g in 0..ng {
                                    let t = src.tensor_ix(a, b, x, y, x2, y2, f, g);
                                    let lhs = data.map_label(
                                        ab,
                                        src.objects.mul(x, x2),
                                        src.objects.mul(y, y2),
                                        t,
                                    );
                                    let mf = data.map_label(a, x, y, f).expect("shape checked");
                                    let mg =
                                        data.map_label(b, x2, y2, g).expect("shape checked");
                                    let rhs = Some(tgt.tensor_ix(
                                        fa,
                                        fb,
                                        data.obj_map[x],
                                        data.obj_map[y],
                                        data.obj_map[x2],
                                        data.obj_map[y2],
                                        mf,
                                        mg,
                                    ));
                                    if lhs != rhs {
                                        cex = Some(format!(
                                            "grades {} {}; {} ⊗ {}",
                                            src.support[a],
                                            src.support[b],
                                            src.hom_labels(a, x, y)[f],
                                            src.hom_labels(b, x2, y2)[g]
                                        ));
                                        break 'tensor;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    report.push_outcome("TENSOR-EQ", cex);

    // regrade preservation
    let mut cex: Option<String> = None;
    'regrade: for e in 0..ns {
        for e2 in 0..ns {
            if !src.leq_ix(e, e2) {
                continue;
            }
            let fe = data.phi_ix(e).expect("shape checked");
            let fe2 = data.phi_ix(e2).expect("shape checked");
            if !tgt.leq_ix(fe, fe2) {
                cex = Some("phi does not preserve the extension preorder".into());
                break 'regrade;
            }
            for x in 0..no {
                for y in 0..no {
                    let nf = src.hom_len(e, x, y);
                    for f in 0..nf {
                        let lhs =
                            data.map_label(e2, x, y, src.regrade_ix(e, e2, x, y, f));
                        let mf = data.map_label(e, x, y, f).expect("shape checked");
                        let rhs = Some(tgt.regrade_ix(
                            fe,
                            fe2,
                            data.obj_map[x],
                            data.obj_map[y],
                            mf,
                        ));
                        if lhs != rhs {
                            cex = Some(format!(
                                "grades {} <= {}; {}",
                                src.support[e],
                                src.support[e2],
                                src.hom_labels(e, x, y)[f]
                            ));
                            break 'regrade;
                        }
                    }
                }
            }
        }
    }
    report.push_outcome("REGRADE-EQ", cex);

    report
}

/// Pull a model over `F` back along `phi : E -> F`: the resulting model over
/// `E` has `hom_e := hom_{phi(e)}`, with all tables reindexed accordingly.
pub fn pullback(model: &FiniteGradedModel, phi: &PcmHom) -> Result<FiniteGradedModel, ModelError> {
    if phi.target() != &model.pcm {
        return Err(ModelError::InvalidHom("phi's target is not the model's PCM".into()));
    }
    let hom_report = check_hom(phi);
    if !hom_report.passed() {
        return Err(ModelError::InvalidHom(format!(
            "phi fails: {:?}",
            hom_report.failing()
        )));
    }
    let pcm = phi.source().clone();
    let support = pcm.carrier()?;
    let image_ix = |e: usize| -> Result<usize, ModelError> {
        let img = phi.apply(&support[e]).map_err(|err| ModelError::InvalidHom(err.to_string()))?;
        model
            .grade_ix(&img)
            .ok_or_else(|| ill("pullback", format!("image grade {img} outside the model support")))
    };

    let ns = support.len();
    let no = model.objects.len();
    let mut hom: BTreeMap<HomKey, Vec<String>> = BTreeMap::new();
    for e in 0..ns {
        let fe = image_ix(e)?;
        for x in 0..no {
            for y in 0..no {
                let labels = model.hom_labels(fe, x, y);
                if !labels.is_empty() {
                    hom.insert((e, x, y), labels.to_vec());
                }
            }
        }
    }

    let mut comp = BTreeMap::new();
    for e in 0..ns {
        let fe = image_ix(e)?;
        for x in 0..no {
            for y in 0..no {
                for z in 0..no {
                    if model.hom_len(fe, x, y) > 0 && model.hom_len(fe, y, z) > 0 {
                        comp.insert((e, x, y, z), model.comp[&(fe, x, y, z)].clone());
                    }
                }
            }
        }
    }

    let mut regrade: BTreeMap<RegradeKey, Vec<usize>> = BTreeMap::new();
    for e in 0..ns {
        for e2 in 0..ns {
            if e == e2 {
                continue;
            }
            if !pcm.leq(&support[e], &support[e2])? {
                continue;
            }
            let fe = image_ix(e)?;
            let fe2 = image_ix(e2)?;
            for x in 0..no {
                for y in 0..no {
                    let nf = model.hom_len(fe, x, y);
                    if nf == 0 {
                        continue;
                    }
                    let map = if fe == fe2 {
                        (0..nf).collect()
                    } else {
                        model.regrade[&(fe, fe2, x, y)].clone()
                    };
                    regrade.insert((e, e2, x, y), map);
                }
            }
        }
    }

    let mut tensor: BTreeMap<TensorKey, Vec<Vec<usize>>> = BTreeMap::new();
    for a in 0..ns {
        for b in 0..ns {
            if pcm.add(&support[a], &support[b])?.is_none() {
                continue;
            }
            let fa = image_ix(a)?;
            let fb = image_ix(b)?;
            for x in 0..no {
                for y in 0..no {
                    for x2 in 0..no {
                        for y2 in 0..no {
                            if model.hom_len(fa, x, y) > 0 && model.hom_len(fb, x2, y2) > 0 {
                                tensor.insert(
                                    (a, b, x, y, x2, y2),
                                    model.tensor[&(fa, fb, x, y, x2, y2)].clone(),
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    let out = FiniteGradedModel {
        pcm,
        support,
        objects: model.objects.clone(),
        hom,
        id: model.id.clone(),
        comp,
        regrade,
        tensor,
        braiding: model.braiding.clone(),
    };
    out.validate()?;
    Ok(out)
}
