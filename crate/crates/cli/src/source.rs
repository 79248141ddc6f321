//! The `.gmc` source format: a PCM declaration, object and generator
//! declarations, and named terms over the expression grammar
//!
//! ```text
//! t ::= id <word> | <gen> | t ; t | t * t | t @ <grade>
//! ```
//!
//! with `I` the empty word. `@` binds tightest, then `*`, then `;`, all
//! left-associative; parentheses group. Declarations are line-oriented and
//! `#` starts a comment.

use std::fmt;

use gmc_core::freecat::{Signature, SignatureBuilder};
use gmc_core::pcm::{syntax, Pcm};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Severity {
    Error,
}

/// A deterministic, span-carrying diagnostic.
#[derive(Debug, Clone)]
pub struct Diagnostic {
    pub severity: Severity,
    pub span: Span,
    pub code: &'static str,
    pub message: String,
}

impl Diagnostic {
    pub fn error(span: Span, code: &'static str, message: String) -> Diagnostic {
        Diagnostic { severity: Severity::Error, span, code, message }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sev = match self.severity {
            Severity::Error => "error",
        };
        write!(f, "{sev}[{}] {}: {}", self.code, self.span, self.message)
    }
}

#[derive(Debug, Clone)]
pub enum TermExpr {
    /// `id <word>`; the word is `I` or a list of object names.
    Id { span: Span, word: Vec<String> },
    Gen { span: Span, name: String },
    Compose { span: Span, lhs: Box<TermExpr>, rhs: Box<TermExpr> },
    Tensor { span: Span, lhs: Box<TermExpr>, rhs: Box<TermExpr> },
    Regrade { span: Span, inner: Box<TermExpr>, grade: String, grade_span: Span },
}

/// A parsed `.gmc` document: the signature plus named term syntax trees.
#[derive(Debug, Clone)]
pub struct SourceDocument {
    pub pcm: Pcm,
    pub signature: Signature,
    pub terms: Vec<(String, TermExpr)>,
}

impl SourceDocument {
    pub fn term(&self, name: &str) -> Option<&TermExpr> {
        self.terms.iter().find(|(n, _)| n == name).map(|(_, t)| t)
    }

    /// Canonical printing; parsing the output reproduces the document.
    /// Exercised by the round-trip tests.
    #[allow(dead_code)]
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("pcm {}\n", self.pcm));
        for o in self.signature.objects() {
            out.push_str(&format!("object {o}\n"));
        }
        for g in self.signature.gens() {
            out.push_str(&format!(
                "gen {} : {} -> {} @ {}\n",
                g.name,
                self.signature.word_to_string(&g.dom),
                self.signature.word_to_string(&g.cod),
                g.grade
            ));
        }
        for (name, expr) in &self.terms {
            out.push_str(&format!("term {name} = {}\n", render_expr(expr, 0)));
        }
        out
    }
}

/// Precedence-aware expression printing: `;` is 0, `*` is 1, `@` is 2.
#[allow(dead_code)]
fn render_expr(e: &TermExpr, min_prec: u8) -> String {
    let (text, prec) = match e {
        TermExpr::Id { word, .. } => {
            let w = if word.is_empty() { "I".to_string() } else { word.join(" ") };
            (format!("id {w}"), 3)
        }
        TermExpr::Gen { name, .. } => (name.clone(), 3),
        TermExpr::Compose { lhs, rhs, .. } => {
            (format!("{} ; {}", render_expr(lhs, 0), render_expr(rhs, 1)), 0)
        }
        TermExpr::Tensor { lhs, rhs, .. } => {
            (format!("{} * {}", render_expr(lhs, 1), render_expr(rhs, 2)), 1)
        }
        TermExpr::Regrade { inner, grade, .. } => {
            (format!("{} @ {grade}", render_expr(inner, 2)), 2)
        }
    };
    if prec < min_prec {
        format!("({text})")
    } else {
        text
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    LParen,
    RParen,
    Semi,
    Star,
    /// `@` followed by its grade literal text
    Grade(String, Span),
}

struct LineLexer<'a> {
    line: usize,
    chars: Vec<(usize, char)>,
    pos: usize,
    text: &'a str,
}

impl<'a> LineLexer<'a> {
    fn new(line: usize, text: &'a str) -> LineLexer<'a> {
        LineLexer { line, chars: text.char_indices().collect(), pos: 0, text }
    }

    fn span(&self) -> Span {
        let col = self
            .chars
            .get(self.pos)
            .map(|(i, _)| *i)
            .unwrap_or(self.text.len());
        Span { line: self.line, col: col + 1 }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|(_, c)| *c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_alphanumeric() || c == '_' || c == '\'') {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().map(|(_, c)| c).collect()
    }

    /// A grade literal: balanced braces/parens, or a bare token.
    fn grade_literal(&mut self) -> Result<String, Diagnostic> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(open @ ('{' | '(')) => {
                let close = if open == '{' { '}' } else { ')' };
                let mut depth = 0;
                loop {
                    match self.peek() {
                        Some(c) if c == open => {
                            depth += 1;
                            self.pos += 1;
                        }
                        Some(c) if c == close => {
                            depth -= 1;
                            self.pos += 1;
                            if depth == 0 {
                                break;
                            }
                        }
                        Some(_) => self.pos += 1,
                        None => {
                            return Err(Diagnostic::error(
                                self.span(),
                                "E-PARSE",
                                format!("unbalanced {open} in grade literal"),
                            ))
                        }
                    }
                }
            }
            Some(_) => {
                while matches!(self.peek(), Some(c) if c.is_alphanumeric() || c == '_' || c == '/' || c == '\'')
                {
                    self.pos += 1;
                }
            }
            None => {
                return Err(Diagnostic::error(
                    self.span(),
                    "E-PARSE",
                    "expected a grade literal after @".to_string(),
                ))
            }
        }
        if self.pos == start {
            return Err(Diagnostic::error(
                self.span(),
                "E-PARSE",
                "expected a grade literal after @".to_string(),
            ));
        }
        Ok(self.chars[start..self.pos].iter().map(|(_, c)| c).collect())
    }

    fn tokens(&mut self) -> Result<Vec<(Tok, Span)>, Diagnostic> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            let span = self.span();
            match self.peek() {
                None => return Ok(out),
                Some('#') => return Ok(out),
                Some('(') => {
                    self.pos += 1;
                    out.push((Tok::LParen, span));
                }
                Some(')') => {
                    self.pos += 1;
                    out.push((Tok::RParen, span));
                }
                Some(';') => {
                    self.pos += 1;
                    out.push((Tok::Semi, span));
                }
                Some('*') => {
                    self.pos += 1;
                    out.push((Tok::Star, span));
                }
                Some('@') => {
                    self.pos += 1;
                    self.skip_ws();
                    let gspan = self.span();
                    let lit = self.grade_literal()?;
                    out.push((Tok::Grade(lit, gspan), span));
                }
                Some(c) if c.is_alphanumeric() || c == '_' || c == '\'' => {
                    let id = self.ident();
                    out.push((Tok::Ident(id), span));
                }
                Some(c) => {
                    return Err(Diagnostic::error(
                        span,
                        "E-PARSE",
                        format!("unexpected character {c:?}"),
                    ))
                }
            }
        }
    }
}

struct TermParser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
    end: Span,
}

impl TermParser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn span(&self) -> Span {
        self.toks.get(self.pos).map(|(_, s)| *s).unwrap_or(self.end)
    }

    fn parse_expr(&mut self) -> Result<TermExpr, Diagnostic> {
        let mut lhs = self.parse_tensor()?;
        while self.peek() == Some(&Tok::Semi) {
            let span = self.span();
            self.pos += 1;
            let rhs = self.parse_tensor()?;
            lhs = TermExpr::Compose { span, lhs: Box::new(lhs), rhs: Box::new(rhs) };
        }
        Ok(lhs)
    }

    fn parse_tensor(&mut self) -> Result<TermExpr, Diagnostic> {
        let mut lhs = self.parse_postfix()?;
        while self.peek() == Some(&Tok::Star) {
            let span = self.span();
            self.pos += 1;
            let rhs = self.parse_postfix()?;
            lhs = TermExpr::Tensor { span, lhs: Box::new(lhs), rhs: Box::new(rhs) };
        }
        Ok(lhs)
    }

    fn parse_postfix(&mut self) -> Result<TermExpr, Diagnostic> {
        let mut inner = self.parse_primary()?;
        while let Some(Tok::Grade(lit, gspan)) = self.peek() {
            let (lit, gspan) = (lit.clone(), *gspan);
            let span = self.span();
            self.pos += 1;
            inner = TermExpr::Regrade {
                span,
                inner: Box::new(inner),
                grade: lit,
                grade_span: gspan,
            };
        }
        Ok(inner)
    }

    fn parse_primary(&mut self) -> Result<TermExpr, Diagnostic> {
        let span = self.span();
        match self.peek().cloned() {
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.parse_expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(Diagnostic::error(
                        self.span(),
                        "E-PARSE",
                        "expected ')'".to_string(),
                    ));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(Tok::Ident(name)) if name == "id" => {
                self.pos += 1;
                let mut word = Vec::new();
                while let Some(Tok::Ident(obj)) = self.peek() {
                    word.push(obj.clone());
                    self.pos += 1;
                }
                if word.is_empty() {
                    return Err(Diagnostic::error(
                        self.span(),
                        "E-PARSE",
                        "expected a word (object names or I) after id".to_string(),
                    ));
                }
                if word == ["I"] {
                    word.clear();
                } else if word.contains(&"I".to_string()) {
                    return Err(Diagnostic::error(
                        span,
                        "E-PARSE",
                        "I stands alone for the empty word".to_string(),
                    ));
                }
                Ok(TermExpr::Id { span, word })
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Ok(TermExpr::Gen { span, name })
            }
            _ => Err(Diagnostic::error(
                span,
                "E-PARSE",
                "expected a term (generator, id <word>, or parenthesised expression)".to_string(),
            )),
        }
    }

    fn finish(&self) -> Result<(), Diagnostic> {
        if self.pos < self.toks.len() {
            return Err(Diagnostic::error(
                self.span(),
                "E-PARSE",
                "trailing input after term".to_string(),
            ));
        }
        Ok(())
    }
}

/// Parse a document, producing the signature and term syntax trees or the
/// first error diagnostic.
pub fn parse(text: &str) -> Result<SourceDocument, Diagnostic> {
    let mut pcm: Option<Pcm> = None;
    let mut objects: Vec<String> = Vec::new();
    let mut gens: Vec<(String, Vec<String>, Vec<String>, String, Span)> = Vec::new();
    let mut terms: Vec<(String, TermExpr)> = Vec::new();

    for (ix, raw) in text.lines().enumerate() {
        let line_no = ix + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (head, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        let head_span = Span { line: line_no, col: raw.find(head).unwrap_or(0) + 1 };
        let rest_col = raw.find(rest).unwrap_or(raw.len().saturating_sub(1)) + 1;
        let rest_span = Span { line: line_no, col: rest_col };
        match head {
            "pcm" => {
                if pcm.is_some() {
                    return Err(Diagnostic::error(
                        head_span,
                        "E-DECL",
                        "duplicate pcm declaration".to_string(),
                    ));
                }
                let p = syntax::parse_pcm(rest).map_err(|e| {
                    Diagnostic::error(
                        Span { line: line_no, col: rest_col + e.column - 1 },
                        "E-PARSE",
                        e.message,
                    )
                })?;
                pcm = Some(p);
            }
            "object" => {
                if rest.is_empty() || rest.split_whitespace().count() != 1 {
                    return Err(Diagnostic::error(
                        rest_span,
                        "E-DECL",
                        "expected exactly one object name".to_string(),
                    ));
                }
                if rest == "I" || rest == "id" {
                    return Err(Diagnostic::error(
                        rest_span,
                        "E-DECL",
                        format!("{rest} is a reserved name"),
                    ));
                }
                objects.push(rest.to_string());
            }
            "gen" => {
                // gen <name> : <word> -> <word> @ <grade>
                let (name, sig_part) = rest.split_once(':').ok_or_else(|| {
                    Diagnostic::error(
                        rest_span,
                        "E-DECL",
                        "expected: gen <name> : <word> -> <word> @ <grade>".to_string(),
                    )
                })?;
                let name = name.trim();
                let (words, grade) = sig_part.rsplit_once('@').ok_or_else(|| {
                    Diagnostic::error(
                        rest_span,
                        "E-DECL",
                        "generator declaration needs a grade after @".to_string(),
                    )
                })?;
                let (dom, cod) = words.split_once("->").ok_or_else(|| {
                    Diagnostic::error(
                        rest_span,
                        "E-DECL",
                        "generator declaration needs '->' between words".to_string(),
                    )
                })?;
                let parse_word = |w: &str| -> Result<Vec<String>, Diagnostic> {
                    let names: Vec<String> =
                        w.split_whitespace().map(|s| s.to_string()).collect();
                    if names == ["I"] {
                        Ok(Vec::new())
                    } else if names.contains(&"I".to_string()) {
                        Err(Diagnostic::error(
                            rest_span,
                            "E-DECL",
                            "I stands alone for the empty word".to_string(),
                        ))
                    } else {
                        Ok(names)
                    }
                };
                gens.push((
                    name.to_string(),
                    parse_word(dom)?,
                    parse_word(cod)?,
                    grade.trim().to_string(),
                    rest_span,
                ));
            }
            "term" => {
                let (name, body) = rest.split_once('=').ok_or_else(|| {
                    Diagnostic::error(
                        rest_span,
                        "E-DECL",
                        "expected: term <name> = <expr>".to_string(),
                    )
                })?;
                let name = name.trim().to_string();
                if terms.iter().any(|(n, _)| *n == name) {
                    return Err(Diagnostic::error(
                        rest_span,
                        "E-DECL",
                        format!("duplicate term {name}"),
                    ));
                }
                let body_col = raw.find('=').map(|i| i + 2).unwrap_or(1);
                let mut lexer = LineLexer::new(line_no, body);
                // shift spans by the position of the body within the line
                let toks = lexer
                    .tokens()?
                    .into_iter()
                    .map(|(t, s)| {
                        let t = match t {
                            Tok::Grade(lit, gs) => Tok::Grade(
                                lit,
                                Span { line: gs.line, col: gs.col + body_col - 1 },
                            ),
                            other => other,
                        };
                        (t, Span { line: s.line, col: s.col + body_col - 1 })
                    })
                    .collect::<Vec<_>>();
                let mut parser =
                    TermParser { toks, pos: 0, end: Span { line: line_no, col: raw.len() + 1 } };
                let expr = parser.parse_expr()?;
                parser.finish()?;
                terms.push((name, expr));
            }
            other => {
                return Err(Diagnostic::error(
                    head_span,
                    "E-PARSE",
                    format!("unknown declaration {other}"),
                ))
            }
        }
    }

    let pcm = pcm.ok_or_else(|| {
        Diagnostic::error(
            Span { line: 1, col: 1 },
            "E-DECL",
            "document needs a pcm declaration".to_string(),
        )
    })?;

    let mut builder = SignatureBuilder::new(pcm.clone());
    for o in &objects {
        builder = builder.object(o);
    }
    for (name, dom, cod, grade_lit, span) in &gens {
        let grade = pcm.parse_grade(grade_lit).map_err(|e| {
            Diagnostic::error(*span, "E-PARSE", format!("bad grade literal: {e}"))
        })?;
        let dom: Vec<&str> = dom.iter().map(String::as_str).collect();
        let cod: Vec<&str> = cod.iter().map(String::as_str).collect();
        builder = builder.gen(name, &dom, &cod, grade);
    }
    let signature = builder.build().map_err(|e| {
        Diagnostic::error(Span { line: 1, col: 1 }, "E-DECL", e.to_string())
    })?;

    Ok(SourceDocument { pcm, signature, terms })
}
