//! Homomorphisms of partial commutative monoids.

use crate::report::Report;

use super::{Grade, Pcm, PcmError};

/// A PCM homomorphism with a finite source, given by an explicit table over
/// the source carrier (in canonical carrier order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PcmHom {
    source: Pcm,
    target: Pcm,
    map: Vec<Grade>,
}

impl PcmHom {
    /// Build from a table of images indexed like `source.carrier()`.
    pub fn from_table(source: Pcm, target: Pcm, map: Vec<Grade>) -> Result<PcmHom, PcmError> {
        let carrier = source.carrier()?;
        if map.len() != carrier.len() {
            return Err(PcmError::InvalidHom(format!(
                "table has {} entries for a carrier of {}",
                map.len(),
                carrier.len()
            )));
        }
        for g in &map {
            if g.pcm() != &target {
                return Err(PcmError::OwnerMismatch);
            }
        }
        Ok(PcmHom { source, target, map })
    }

    pub fn identity(pcm: Pcm) -> Result<PcmHom, PcmError> {
        let map = pcm.carrier()?;
        Ok(PcmHom { source: pcm.clone(), target: pcm, map })
    }

    /// The canonical top-preserving map from `two`: `0 ↦ 0`, `1 ↦ ⊤`.
    pub fn two_to_top(target: Pcm) -> Result<PcmHom, PcmError> {
        let top = target.top()?;
        Ok(PcmHom {
            source: Pcm::two(),
            target: target.clone(),
            map: vec![target.zero(), top],
        })
    }

    pub fn source(&self) -> &Pcm {
        &self.source
    }

    pub fn target(&self) -> &Pcm {
        &self.target
    }

    pub fn apply(&self, g: &Grade) -> Result<Grade, PcmError> {
        let ix = self.source.index_in_carrier(g)?;
        Ok(self.map[ix].clone())
    }
}

/// Verify unit preservation and `f(a ⊕ b) ≽ f(a) ⊕ f(b)` in the directed
/// Kleene sense: whenever the left side is defined, so is the right, and
/// they are equal. Sources are finite tables, so the scan is exhaustive.
pub fn check_hom(hom: &PcmHom) -> Report {
    let mut report = Report::new();
    let carrier = hom.source().carrier().expect("finite source");

    let unit_ok = hom
        .apply(&hom.source().zero())
        .map(|img| img.payload() == hom.target().zero().payload())
        .unwrap_or(false);
    report.push_outcome(
        "HOM-UNIT",
        if unit_ok { None } else { Some(format!("{}", hom.source().zero())) },
    );

    let mut cex: Option<String> = None;
    'outer: for a in &carrier {
        for b in &carrier {
            if let Some(sum) = hom.source().add(a, b).expect("owned") {
                let fa = hom.apply(a).expect("carrier");
                let fb = hom.apply(b).expect("carrier");
                let fsum = hom.apply(&sum).expect("carrier");
                match hom.target().add(&fa, &fb).expect("owned") {
                    Some(rhs) if rhs.payload() == fsum.payload() => {}
                    _ => {
                        cex = Some(format!("{a} {b}"));
                        break 'outer;
                    }
                }
            }
        }
    }
    report.push_outcome("HOM-ADD", cex);
    report
}
