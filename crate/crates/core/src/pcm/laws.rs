//! Law checking for PCM instances.
//!
//! Finite kinds are scanned exhaustively over all pairs and triples. The
//! infinite built-ins are checked on a sampled pool: intervals over reduced
//! rationals `p/q` with `q <= 12` in `[0, r]`, naturals over `[0, 64]`,
//! products componentwise. Sampling is seed-controlled.

use crate::rational::Rational;
use crate::report::Report;
use crate::rng::Rng;

use super::{Payload, Pcm, PcmError, PcmKind};

const NAT_POOL_MAX: u64 = 64;
const INTERVAL_POOL_MAX_DEN: i64 = 12;

/// The deterministic pool of elements a sampled law check draws from.
/// Finite kinds return their carrier.
pub fn sample_pool(pcm: &Pcm) -> Vec<super::Grade> {
    match pcm.kind() {
        PcmKind::Interval { bound } => {
            let mut payloads = Vec::new();
            for den in 1..=INTERVAL_POOL_MAX_DEN {
                let mut num = 0;
                loop {
                    let r = Rational::new(num, den).expect("den > 0");
                    if r > *bound {
                        break;
                    }
                    payloads.push(Payload::Ratio(r));
                    num += 1;
                }
            }
            payloads.sort();
            payloads.dedup();
            payloads.into_iter().map(|p| pcm.grade_from_payload(p)).collect()
        }
        PcmKind::NatPlus | PcmKind::NatMax => (0..=NAT_POOL_MAX)
            .map(|n| pcm.grade_from_payload(Payload::Nat(n)))
            .collect(),
        PcmKind::Product { components } => {
            let pools: Vec<Vec<super::Grade>> = components.iter().map(sample_pool).collect();
            let mut tuples = vec![Vec::new()];
            for pool in &pools {
                let mut next = Vec::with_capacity(tuples.len() * pool.len());
                for prefix in &tuples {
                    for g in pool {
                        let mut t: Vec<Payload> = prefix.clone();
                        t.push(g.payload().clone());
                        next.push(t);
                    }
                }
                tuples = next;
            }
            tuples
                .into_iter()
                .map(|t| pcm.grade_from_payload(Payload::Tuple(t)))
                .collect()
        }
        _ => pcm.carrier().expect("finite carrier"),
    }
}

fn triples(pcm: &Pcm, budget: usize, seed: u64) -> Vec<[super::Grade; 3]> {
    let pool = sample_pool(pcm);
    if pcm.is_finite() {
        let mut out = Vec::with_capacity(pool.len().pow(3));
        for a in &pool {
            for b in &pool {
                for c in &pool {
                    out.push([a.clone(), b.clone(), c.clone()]);
                }
            }
        }
        out
    } else {
        let budget = if budget == 0 { 10_000 } else { budget };
        let mut rng = Rng::new(seed);
        (0..budget)
            .map(|_| {
                [
                    rng.pick(&pool).clone(),
                    rng.pick(&pool).clone(),
                    rng.pick(&pool).clone(),
                ]
            })
            .collect()
    }
}

/// Check commutativity, unit, and associativity (the latter two-stage:
/// Kleene definedness agreement, then value equality). Exhaustive for
/// finite kinds, over `budget` sampled triples otherwise.
pub fn check_pcm_laws(pcm: &Pcm, budget: usize, seed: u64) -> Report {
    let mut report = Report::new();
    let triples = triples(pcm, budget, seed);
    let zero = pcm.zero();

    let mut comm: Option<String> = None;
    let mut unit_left: Option<String> = None;
    let mut unit_right: Option<String> = None;
    let mut assoc_def: Option<String> = None;
    let mut assoc_eq: Option<String> = None;

    for [a, b, c] in &triples {
        if comm.is_none() {
            let ab = pcm.add(a, b).expect("owned");
            let ba = pcm.add(b, a).expect("owned");
            if ab != ba {
                comm = Some(format!("{a} {b}"));
            }
        }
        if unit_left.is_none() {
            match pcm.add(&zero, a).expect("owned") {
                Some(v) if v.payload() == a.payload() => {}
                _ => unit_left = Some(format!("{a}")),
            }
        }
        if unit_right.is_none() {
            match pcm.add(a, &zero).expect("owned") {
                Some(v) if v.payload() == a.payload() => {}
                _ => unit_right = Some(format!("{a}")),
            }
        }
        if assoc_def.is_none() || assoc_eq.is_none() {
            let left = match pcm.add(a, b).expect("owned") {
                Some(ab) => pcm.add(&ab, c).expect("owned"),
                None => None,
            };
            let right = match pcm.add(b, c).expect("owned") {
                Some(bc) => pcm.add(a, &bc).expect("owned"),
                None => None,
            };
            match (left, right) {
                (Some(l), Some(r)) => {
                    if l.payload() != r.payload() && assoc_eq.is_none() {
                        assoc_eq = Some(format!("{a} {b} {c}"));
                    }
                }
                (None, None) => {}
                _ => {
                    if assoc_def.is_none() {
                        assoc_def = Some(format!("{a} {b} {c}"));
                    }
                }
            }
        }
    }

    report.push_outcome("COMMUTATIVITY", comm);
    report.push_outcome("UNIT-LEFT", unit_left);
    report.push_outcome("UNIT-RIGHT", unit_right);
    report.push_outcome("ASSOC-DEFINED", assoc_def);
    report.push_outcome("ASSOC-EQUAL", assoc_eq);
    report
}

/// Cancellativity: `a ⊕ c = b ⊕ c` implies `a = b`.
pub fn check_separation(pcm: &Pcm, budget: usize, seed: u64) -> Report {
    let mut report = Report::new();
    let mut cex: Option<String> = None;
    for [a, b, c] in triples(pcm, budget, seed) {
        let ac = pcm.add(&a, &c).expect("owned");
        let bc = pcm.add(&b, &c).expect("owned");
        if let (Some(x), Some(y)) = (ac, bc) {
            if x.payload() == y.payload() && a.payload() != b.payload() {
                cex = Some(format!("{a} {b} {c}"));
                break;
            }
        }
    }
    report.push_outcome("CANCELLATIVITY", cex);
    report
}

/// Existence and uniqueness of complements toward the top element.
/// Fails with [`PcmError::NoTop`] when the instance has no top.
pub fn check_effect_algebra(pcm: &Pcm, budget: usize, seed: u64) -> Result<Report, PcmError> {
    let top = pcm.top()?;
    let mut report = Report::new();
    let pool = sample_pool(pcm);

    let mut exists: Option<String> = None;
    for a in &pool {
        if pcm.complement(a).is_err() {
            exists = Some(format!("{a}"));
            break;
        }
    }
    report.push_outcome("COMPLEMENT-EXISTS", exists);

    let mut unique: Option<String> = None;
    if pcm.is_finite() {
        'outer: for a in &pool {
            let mut found: Option<&super::Grade> = None;
            for b in &pool {
                if let Some(sum) = pcm.add(a, b).expect("owned") {
                    if sum.payload() == top.payload() {
                        if let Some(prev) = found {
                            unique = Some(format!("{a}: {prev} and {b}"));
                            break 'outer;
                        }
                        found = Some(b);
                    }
                }
            }
        }
    } else {
        let budget = if budget == 0 { 10_000 } else { budget };
        let mut rng = Rng::new(seed);
        for _ in 0..budget {
            let a = rng.pick(&pool).clone();
            let b = rng.pick(&pool).clone();
            if let Some(sum) = pcm.add(&a, &b).expect("owned") {
                if sum.payload() == top.payload() {
                    let c = pcm.complement(&a)?;
                    if c.payload() != b.payload() {
                        unique = Some(format!("{a}: {b} and {c}"));
                        break;
                    }
                }
            }
        }
    }
    report.push_outcome("COMPLEMENT-UNIQUE", unique);
    Ok(report)
}
