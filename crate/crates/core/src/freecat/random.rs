//! Seeded random generation of well-typed terms, used by the law suites.

use crate::pcm::Grade;
use crate::rng::Rng;

use super::{FreeMorphism, Signature, TermError, Word};

/// A random word of length at most `max_len` (possibly empty).
pub fn random_word(sig: &Signature, rng: &mut Rng, max_len: usize) -> Word {
    let len = rng.below(max_len + 1);
    let mut w = Word::empty();
    if sig.objects().is_empty() {
        return w;
    }
    for _ in 0..len {
        let ix = rng.below(sig.objects().len());
        let name = sig.objects()[ix].clone();
        w = w.concat(&sig.word(&[name.as_str()]).expect("declared object"));
    }
    w
}

/// All (generator, position) pairs whose domain occurs in `w` at that
/// position, restricted to generators admissible at `ambient`.
fn fitting_slices(
    sig: &Signature,
    w: &Word,
    ambient: &Grade,
) -> Result<Vec<(usize, usize)>, TermError> {
    let pcm = sig.pcm();
    let mut out = Vec::new();
    for (gix, decl) in sig.gens().iter().enumerate() {
        if !pcm.leq(&decl.grade, ambient)? {
            continue;
        }
        let need = decl.dom.len();
        if need > w.len() {
            continue;
        }
        for pos in 0..=w.len() - need {
            if w.slice(pos..pos + need) == decl.dom {
                out.push((gix, pos));
            }
        }
    }
    Ok(out)
}

/// Build a random morphism from `dom` at the given ambient grade by
/// repeatedly appending a fitting slice. Stops early when nothing fits.
pub fn random_morphism_at(
    sig: &Signature,
    rng: &mut Rng,
    dom: Word,
    ambient: Grade,
    max_slices: usize,
) -> Result<FreeMorphism, TermError> {
    let mut m = FreeMorphism::identity(sig, dom, ambient.clone())?;
    for _ in 0..max_slices {
        let fits = fitting_slices(sig, m.cod(), &ambient)?;
        if fits.is_empty() {
            break;
        }
        let &(gix, pos) = rng.pick(&fits);
        let decl = &sig.gens()[gix];
        let cod = m.cod().clone();
        let left_word = cod.slice(0..pos);
        let right_word = cod.slice(pos + decl.dom.len()..cod.len());
        let gen = FreeMorphism::generator(sig, &decl.name)?;
        let lid = FreeMorphism::identity(sig, left_word, sig.pcm().zero())?;
        let rid = FreeMorphism::identity(sig, right_word, sig.pcm().zero())?;
        let whiskered = lid.tensor(&gen)?.tensor(&rid)?.regrade(&ambient)?;
        m = m.compose(&whiskered)?;
    }
    Ok(m)
}

/// A random morphism whose ambient grade is drawn from `palette` (filtered
/// by admissible generators at that grade).
pub fn random_morphism(
    sig: &Signature,
    rng: &mut Rng,
    palette: &[Grade],
    max_word: usize,
    max_slices: usize,
) -> Result<FreeMorphism, TermError> {
    let ambient = rng.pick(palette).clone();
    let dom = random_word(sig, rng, max_word);
    random_morphism_at(sig, rng, dom, ambient, max_slices)
}

/// Apply up to `moves` random legal exchange moves; the result is always in
/// the same equivalence class as the input.
pub fn random_shuffle(m: &FreeMorphism, rng: &mut Rng, moves: usize) -> FreeMorphism {
    let mut slices = m.slices().to_vec();
    for _ in 0..moves {
        if slices.len() < 2 {
            break;
        }
        let i = rng.below(slices.len() - 1);
        if let Ok(Some(next)) = super::normal::swap_adjacent(m, &slices, i) {
            slices = next;
        }
    }
    m.with_slices(slices).expect("moves preserve well-formedness")
}
