//! The two-level pure/effectful view of a free graded category whose PCM has
//! a top element: pure morphisms live at grade 0, effectful ones at grade ⊤,
//! and the inclusion is the regrading.

use crate::pcm::Grade;

use super::{FreeMorphism, Signature, TermError, Word};

#[derive(Debug, Clone)]
pub struct EffectfulView {
    sig: Signature,
    top: Grade,
}

impl EffectfulView {
    /// Fails with the underlying `NoTop` error when the PCM has no top.
    pub fn new(sig: &Signature) -> Result<EffectfulView, TermError> {
        let top = sig.pcm().top()?;
        Ok(EffectfulView { sig: sig.clone(), top })
    }

    pub fn top_grade(&self) -> &Grade {
        &self.top
    }

    pub fn pure_identity(&self, w: Word) -> Result<FreeMorphism, TermError> {
        FreeMorphism::identity(&self.sig, w, self.sig.pcm().zero())
    }

    pub fn is_pure(&self, m: &FreeMorphism) -> bool {
        m.ambient_grade().is_zero()
    }

    pub fn is_effectful(&self, m: &FreeMorphism) -> bool {
        m.ambient_grade() == &self.top
    }

    /// The inclusion of pure morphisms among the effectful ones.
    pub fn include(&self, m: &FreeMorphism) -> Result<FreeMorphism, TermError> {
        m.regrade(&self.top)
    }

    /// Tensor on the effectful level; rejected exactly when ⊤ ⊕ ⊤ is
    /// undefined in the grading PCM.
    pub fn tensor_effectful(
        &self,
        m1: &FreeMorphism,
        m2: &FreeMorphism,
    ) -> Result<FreeMorphism, TermError> {
        m1.tensor(m2)
    }
}
