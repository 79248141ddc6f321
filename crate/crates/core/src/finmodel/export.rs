//! Export a free graded category on scalar generators as a finite model.
//!
//! Generators must all have empty domain and codomain, so the object monoid
//! is trivial and a morphism is just a sequence of generators. Hom-sets at
//! each grade are the canonical forms of admissible sequences of length at
//! most `max_slices`, plus one absorbing overflow label standing for every
//! longer composite. Because all table operations are length-additive, the
//! overflow element preserves the axioms.

use std::collections::BTreeMap;

use crate::freecat::{FreeMorphism, Signature, Word};
use crate::pcm::Grade;

use super::{ill, CompKey, FiniteGradedModel, HomKey, ModelError, ObjectMonoid, RegradeKey, TensorKey};

const OVERFLOW: &str = "_over_";

fn canon_seq(sig: &Signature, grade: &Grade, seq: &[usize]) -> Result<Vec<usize>, ModelError> {
    let mut m = FreeMorphism::identity(sig, Word::empty(), grade.clone())
        .map_err(|e| ill("export", e.to_string()))?;
    for &gix in seq {
        let decl = &sig.gens()[gix];
        let g = FreeMorphism::generator(sig, &decl.name)
            .and_then(|g| g.regrade(grade))
            .map_err(|e| ill("export", e.to_string()))?;
        m = m.compose(&g).map_err(|e| ill("export", e.to_string()))?;
    }
    Ok(m.canonical_form().slices().iter().map(|s| s.gen).collect())
}

fn label_of(sig: &Signature, seq: &[usize]) -> String {
    if seq.is_empty() {
        "1".to_string()
    } else {
        seq.iter()
            .map(|&g| sig.gens()[g].name.as_str())
            .collect::<Vec<_>>()
            .join(".")
    }
}

/// Truncate the free category on a scalar signature at `max_slices` slices
/// per hom-set. `support` is required when the grading PCM is infinite.
pub fn scalar_truncation(
    sig: &Signature,
    max_slices: usize,
    support: Option<Vec<Grade>>,
) -> Result<FiniteGradedModel, ModelError> {
    for decl in sig.gens() {
        if !decl.dom.is_empty() || !decl.cod.is_empty() {
            return Err(ill("export", format!("generator {} is not a scalar", decl.name)));
        }
        if decl.name == OVERFLOW {
            return Err(ill("export", format!("generator name {OVERFLOW} is reserved")));
        }
    }
    let pcm = sig.pcm().clone();
    let support = match support {
        Some(s) => s,
        None => pcm.carrier()?,
    };

    // canonical classes per grade, in first-seen (length, lexicographic) order
    let mut classes: Vec<Vec<Vec<usize>>> = Vec::with_capacity(support.len());
    for e in &support {
        let mut admissible = Vec::new();
        for (gix, decl) in sig.gens().iter().enumerate() {
            if pcm.leq(&decl.grade, e)? {
                admissible.push(gix);
            }
        }
        let mut reps: Vec<Vec<usize>> = Vec::new();
        let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
        for len in 0..=max_slices {
            if len > 0 {
                let mut next = Vec::new();
                for seq in &layer {
                    for &g in &admissible {
                        let mut s = seq.clone();
                        s.push(g);
                        next.push(s);
                    }
                }
                layer = next;
            }
            for seq in &layer {
                let canon = canon_seq(sig, e, seq)?;
                if !reps.contains(&canon) {
                    reps.push(canon);
                }
            }
        }
        classes.push(reps);
    }

    let find_label =
        |e: usize, seq: &[usize]| -> Result<usize, ModelError> {
            if seq.len() > max_slices {
                return Ok(classes[e].len()); // overflow index
            }
            let canon = canon_seq(sig, &support[e], seq)?;
            classes[e]
                .iter()
                .position(|c| *c == canon)
                .ok_or_else(|| ill("export", "canonical class not enumerated"))
        };

    let mut hom: BTreeMap<HomKey, Vec<String>> = BTreeMap::new();
    for (e, reps) in classes.iter().enumerate() {
        let mut labels: Vec<String> = reps.iter().map(|r| label_of(sig, r)).collect();
        labels.push(OVERFLOW.to_string());
        hom.insert((e, 0, 0), labels);
    }

    let zero_ix = support
        .iter()
        .position(|g| *g == pcm.zero())
        .ok_or_else(|| ill("export", "support must contain the zero grade"))?;
    let id = vec![classes[zero_ix]
        .iter()
        .position(|c| c.is_empty())
        .ok_or_else(|| ill("export", "empty sequence missing at grade zero"))?];

    let mut comp: BTreeMap<CompKey, Vec<Vec<usize>>> = BTreeMap::new();
    for (e, reps) in classes.iter().enumerate() {
        let n = reps.len() + 1;
        let over = reps.len();
        let mut table = vec![vec![over; n]; n];
        for (f, fs) in reps.iter().enumerate() {
            for (g, gs) in reps.iter().enumerate() {
                let mut seq = fs.clone();
                seq.extend_from_slice(gs);
                table[f][g] = find_label(e, &seq)?;
            }
        }
        comp.insert((e, 0, 0, 0), table);
    }

    let mut regrade: BTreeMap<RegradeKey, Vec<usize>> = BTreeMap::new();
    for e in 0..support.len() {
        for e2 in 0..support.len() {
            if e == e2 || !pcm.leq(&support[e], &support[e2])? {
                continue;
            }
            let mut map = Vec::with_capacity(classes[e].len() + 1);
            for seq in &classes[e] {
                map.push(find_label(e2, seq)?);
            }
            map.push(classes[e2].len()); // overflow follows overflow
            regrade.insert((e, e2, 0, 0), map);
        }
    }

    let mut tensor: BTreeMap<TensorKey, Vec<Vec<usize>>> = BTreeMap::new();
    for a in 0..support.len() {
        for b in 0..support.len() {
            let sum = match pcm.add(&support[a], &support[b])? {
                Some(s) => s,
                None => continue,
            };
            let Some(c) = support.iter().position(|g| *g == sum) else { continue };
            let nf = classes[a].len() + 1;
            let ng = classes[b].len() + 1;
            let over = classes[c].len();
            let mut table = vec![vec![over; ng]; nf];
            for (f, fs) in classes[a].iter().enumerate() {
                for (g, gs) in classes[b].iter().enumerate() {
                    let mut seq = fs.clone();
                    seq.extend_from_slice(gs);
                    table[f][g] = find_label(c, &seq)?;
                }
            }
            tensor.insert((a, b, 0, 0, 0, 0), table);
        }
    }

    let mut braiding = BTreeMap::new();
    braiding.insert((0, 0), id[0]);

    let model = FiniteGradedModel {
        pcm,
        support,
        objects: ObjectMonoid::trivial(),
        hom,
        id,
        comp,
        regrade,
        tensor,
        braiding: Some(braiding),
    };
    model.validate()?;
    Ok(model)
}
