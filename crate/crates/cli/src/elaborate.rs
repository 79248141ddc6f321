//! Eager elaboration of term syntax into free-category morphisms. Errors
//! point at the smallest failing subterm and carry the values involved.

use gmc_core::freecat::{FreeMorphism, TermError, Word};

use crate::source::{Diagnostic, SourceDocument, Span, TermExpr};

fn diag_of(err: TermError, span: Span) -> Diagnostic {
    let code = match &err {
        TermError::NonOrthogonalGrades { .. } => "E-ORTHO",
        TermError::GradeMismatch { .. } | TermError::NotLeq { .. } => "E-GRADE",
        TermError::TypeMismatch { .. } => "E-TYPE",
        TermError::UnknownGenerator(_) | TermError::UnknownObject(_) => "E-NAME",
        _ => "E-ELAB",
    };
    Diagnostic::error(span, code, err.to_string())
}

pub fn elaborate(doc: &SourceDocument, expr: &TermExpr) -> Result<FreeMorphism, Diagnostic> {
    let sig = &doc.signature;
    match expr {
        TermExpr::Id { span, word } => {
            let names: Vec<&str> = word.iter().map(String::as_str).collect();
            let w: Word = sig.word(&names).map_err(|e| diag_of(e, *span))?;
            FreeMorphism::identity(sig, w, doc.pcm.zero()).map_err(|e| diag_of(e, *span))
        }
        TermExpr::Gen { span, name } => {
            FreeMorphism::generator(sig, name).map_err(|e| diag_of(e, *span))
        }
        TermExpr::Compose { span, lhs, rhs } => {
            let l = elaborate(doc, lhs)?;
            let r = elaborate(doc, rhs)?;
            l.compose(&r).map_err(|e| diag_of(e, *span))
        }
        TermExpr::Tensor { span, lhs, rhs } => {
            let l = elaborate(doc, lhs)?;
            let r = elaborate(doc, rhs)?;
            l.tensor(&r).map_err(|e| diag_of(e, *span))
        }
        TermExpr::Regrade { span, inner, grade, grade_span } => {
            let m = elaborate(doc, inner)?;
            let g = doc.pcm.parse_grade(grade).map_err(|e| {
                Diagnostic::error(*grade_span, "E-PARSE", format!("bad grade literal: {e}"))
            })?;
            m.regrade(&g).map_err(|e| diag_of(e, *span))
        }
    }
}

/// Elaborate a named term.
pub fn elaborate_term(doc: &SourceDocument, name: &str) -> Result<FreeMorphism, Diagnostic> {
    let expr = doc.term(name).ok_or_else(|| {
        Diagnostic::error(
            Span { line: 0, col: 0 },
            "E-NAME",
            format!("unknown term {name}"),
        )
    })?;
    elaborate(doc, expr)
}
