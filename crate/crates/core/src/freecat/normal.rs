//! Exchange moves, greedy canonical forms, and the breadth-first oracle.
//!
//! An exchange move swaps adjacent slices when (i) the earlier generator's
//! codomain interval and the later generator's domain interval are disjoint
//! in the intermediate word, and (ii) the sum of the two generator grades is
//! defined and extends to the ambient grade. Every such swap is an axiom
//! consequence at any grade dominating the sum, so exchange-reachable lists
//! denote equal morphisms.
//!
//! The canonical form repeatedly moves to the front the bubblable slice with
//! the least key `(wire start position, generator name)`. Its agreement with
//! the reachability oracle is asserted by the randomized suites rather than
//! assumed.

use std::collections::{HashSet, VecDeque};

use crate::pcm::Grade;

use super::{FreeMorphism, Slice, TermError};

/// Try to swap slices `i` and `i+1`. Returns the rewritten list when the
/// move is allowed, `None` otherwise.
pub(super) fn swap_adjacent(
    m: &FreeMorphism,
    slices: &[Slice],
    i: usize,
) -> Result<Option<Vec<Slice>>, TermError> {
    let sig = m.signature();
    let pcm = sig.pcm();
    let s1 = &slices[i];
    let s2 = &slices[i + 1];
    let g1 = &sig.gens()[s1.gen];
    let g2 = &sig.gens()[s2.gen];

    let sum = match pcm.add(&g1.grade, &g2.grade)? {
        Some(g) => g,
        None => return Ok(None),
    };
    if !pcm.leq(&sum, m.ambient_grade())? {
        return Ok(None);
    }

    let p1 = s1.left.len();
    let c1 = g1.cod.len();
    let d1 = g1.dom.len();
    let p2 = s2.left.len();
    let d2 = g2.dom.len();
    let c2 = g2.cod.len();

    // Positions of the new slices in the swapped order, in the coordinates
    // of s1's domain word (for s2) and of the new intermediate word (for s1).
    let (new_p2, new_p1) = if p2 >= p1 + c1 {
        // the later generator sits right of the earlier one's output wires
        (p2 - c1 + d1, p1)
    } else if p2 + d2 <= p1 {
        // the later generator sits left of the earlier one's interval
        (p2, p1 - d2 + c2)
    } else {
        return Ok(None);
    };

    let outer_dom = s1.left.concat(&g1.dom).concat(&s1.right);
    let first = Slice {
        left: outer_dom.slice(0..new_p2),
        gen: s2.gen,
        right: outer_dom.slice(new_p2 + d2..outer_dom.len()),
    };
    let mid = first.left.concat(&g2.cod).concat(&first.right);
    let second = Slice {
        left: mid.slice(0..new_p1),
        gen: s1.gen,
        right: mid.slice(new_p1 + d1..mid.len()),
    };

    debug_assert_eq!(
        FreeMorphism::slice_dom(sig, &first),
        FreeMorphism::slice_dom(sig, s1),
        "swap must preserve the outer domain"
    );
    debug_assert_eq!(
        FreeMorphism::slice_cod(sig, &second),
        FreeMorphism::slice_cod(sig, s2),
        "swap must preserve the outer codomain"
    );

    let mut out = slices.to_vec();
    out[i] = first;
    out[i + 1] = second;
    Ok(Some(out))
}

fn slice_key(m: &FreeMorphism, s: &Slice) -> (usize, String) {
    (s.left.len(), m.signature().gens()[s.gen].name.clone())
}

/// Greedy lexicographic normal form under the exchange moves at the
/// morphism's own ambient grade.
pub(super) fn canonical_form(m: &FreeMorphism) -> FreeMorphism {
    let mut rest: Vec<Slice> = m.slices().to_vec();
    let mut out: Vec<Slice> = Vec::with_capacity(rest.len());

    while !rest.is_empty() {
        // For each slice, try to bubble it to the front; keep the candidate
        // with the least (position, name) key at the front. Ties go to the
        // earliest original index, which keeps the selection stable.
        let mut best: Option<((usize, String), Vec<Slice>)> = None;
        for i in 0..rest.len() {
            let mut work = rest.clone();
            let mut ok = true;
            for j in (0..i).rev() {
                match swap_adjacent(m, &work, j).expect("grades belong to the signature PCM") {
                    Some(next) => work = next,
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if !ok {
                continue;
            }
            let key = slice_key(m, &work[0]);
            if best.as_ref().map_or(true, |(bk, _)| key < *bk) {
                best = Some((key, work));
            }
        }
        let (_, chosen) = best.expect("index 0 always bubbles trivially");
        out.push(chosen[0].clone());
        rest = chosen[1..].to_vec();
    }

    let mut result = m.clone();
    result.slices = out;
    result
}

fn state_key(slices: &[Slice]) -> Vec<(usize, usize)> {
    slices.iter().map(|s| (s.left.len(), s.gen)).collect()
}

/// Breadth-first reachability over exchange-move sequences: the brute-force
/// reference for [`FreeMorphism::equal_at`]. `budget` bounds the number of
/// visited slice lists.
pub fn equal_oracle(
    m1: &FreeMorphism,
    m2: &FreeMorphism,
    c: &Grade,
    budget: usize,
) -> Result<bool, TermError> {
    if m1.signature() != m2.signature() {
        return Err(TermError::SignatureMismatch);
    }
    if m1.dom() != m2.dom() || m1.cod() != m2.cod() {
        return Err(TermError::TypeMismatch {
            expected: format!(
                "{} -> {}",
                m1.signature().word_to_string(m1.dom()),
                m1.signature().word_to_string(m1.cod())
            ),
            found: format!(
                "{} -> {}",
                m2.signature().word_to_string(m2.dom()),
                m2.signature().word_to_string(m2.cod())
            ),
        });
    }
    let start = m1.regrade(c)?;
    let target = m2.regrade(c)?;
    let target_key = state_key(target.slices());

    let mut seen: HashSet<Vec<(usize, usize)>> = HashSet::new();
    let mut queue: VecDeque<Vec<Slice>> = VecDeque::new();
    seen.insert(state_key(start.slices()));
    queue.push_back(start.slices().to_vec());

    while let Some(slices) = queue.pop_front() {
        if state_key(&slices) == target_key {
            return Ok(true);
        }
        if slices.len() >= 2 {
            for i in 0..slices.len() - 1 {
                if let Some(next) = swap_adjacent(&start, &slices, i)? {
                    let key = state_key(&next);
                    if seen.insert(key) {
                        if seen.len() > budget {
                            return Err(TermError::BudgetExceeded(seen.len()));
                        }
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    Ok(false)
}
