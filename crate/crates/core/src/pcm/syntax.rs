//! Concrete syntax for PCM descriptors and grade literals.
//!
//! This syntax is shared by the `.gmc` source format, the finite-model file
//! format, and the copresheaf file format. Grade literals never contain
//! whitespace, so they can be used as space-separated fields in line
//! oriented files:
//!
//! - naturals and the two/three elements: `0`, `1`, `2`, ...
//! - powerset: `{}`, `{a,b}` (printed in carrier order)
//! - rw: `({x},{y})` as `(reads,writes)`
//! - interval: `p/q` in lowest terms (also accepted: bare integers)
//! - product: `(g1,g2,...)` componentwise
//! - semilattice/table elements: their names
//! - singleton: `*`
//!
//! Descriptors are single-line:
//!
//! - `singleton` | `two` | `three` | `nat_plus` | `nat_max`
//! - `powerset a b ...` | `rw x y ...`
//! - `interval 3/2`
//! - `product (two) (powerset a b)`
//! - `semilattice lo hi : lo lo = lo ; lo hi = hi ; hi lo = hi ; hi hi = hi`
//! - `table 0 1 zero 0 : 0 0 = 0 ; 0 1 = 1 ; 1 0 = 1` (absent pairs are
//!   undefined; `table ... validate ...` is implied, the law scan always runs)

use std::fmt;

use thiserror::Error;

use crate::rational::Rational;

use super::{Grade, Payload, Pcm, PcmError, PcmKind};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{message} at column {column}")]
pub struct SyntaxError {
    pub message: String,
    pub column: usize,
}

fn err<T>(message: impl Into<String>, column: usize) -> Result<T, SyntaxError> {
    Err(SyntaxError { message: message.into(), column })
}

pub(super) fn format_grade(g: &Grade, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    format_payload(g.pcm(), g.payload(), f)
}

fn format_payload(pcm: &Pcm, payload: &Payload, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match (pcm.kind(), payload) {
        (PcmKind::Singleton, Payload::Unit) => write!(f, "*"),
        (PcmKind::Two, Payload::Small(x)) | (PcmKind::Three, Payload::Small(x)) => {
            write!(f, "{x}")
        }
        (PcmKind::Powerset { devices }, Payload::Mask(m)) => format_mask(devices, *m, f),
        (PcmKind::ReadWrite { locations }, Payload::RwMask { reads, writes }) => {
            write!(f, "(")?;
            format_mask(locations, *reads, f)?;
            write!(f, ",")?;
            format_mask(locations, *writes, f)?;
            write!(f, ")")
        }
        (PcmKind::Interval { .. }, Payload::Ratio(r)) => write!(f, "{r}"),
        (PcmKind::Product { components }, Payload::Tuple(xs)) => {
            write!(f, "(")?;
            for (i, (c, x)) in components.iter().zip(xs).enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                format_payload(c, x, f)?;
            }
            write!(f, ")")
        }
        (PcmKind::NatPlus, Payload::Nat(n)) | (PcmKind::NatMax, Payload::Nat(n)) => {
            write!(f, "{n}")
        }
        (PcmKind::Semilattice { elems, .. }, Payload::Index(i))
        | (PcmKind::Table { elems, .. }, Payload::Index(i)) => write!(f, "{}", elems[*i]),
        _ => write!(f, "<invalid>"),
    }
}

fn format_mask(names: &[String], mask: u32, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "{{")?;
    let mut first = true;
    for (i, name) in names.iter().enumerate() {
        if mask & (1 << i) != 0 {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{name}")?;
            first = false;
        }
    }
    write!(f, "}}")
}

pub(super) fn format_pcm(pcm: &Pcm, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match pcm.kind() {
        PcmKind::Singleton => write!(f, "singleton"),
        PcmKind::Two => write!(f, "two"),
        PcmKind::Three => write!(f, "three"),
        PcmKind::NatPlus => write!(f, "nat_plus"),
        PcmKind::NatMax => write!(f, "nat_max"),
        PcmKind::Powerset { devices } => {
            write!(f, "powerset")?;
            for d in devices {
                write!(f, " {d}")?;
            }
            Ok(())
        }
        PcmKind::ReadWrite { locations } => {
            write!(f, "rw")?;
            for l in locations {
                write!(f, " {l}")?;
            }
            Ok(())
        }
        PcmKind::Interval { bound } => write!(f, "interval {bound}"),
        PcmKind::Product { components } => {
            write!(f, "product")?;
            for c in components {
                write!(f, " ({c})")?;
            }
            Ok(())
        }
        PcmKind::Semilattice { elems, join, .. } => {
            write!(f, "semilattice")?;
            for e in elems {
                write!(f, " {e}")?;
            }
            write!(f, " :")?;
            let mut first = true;
            for (a, row) in join.iter().enumerate() {
                for (b, v) in row.iter().enumerate() {
                    if !first {
                        write!(f, " ;")?;
                    }
                    write!(f, " {} {} = {}", elems[a], elems[b], elems[*v])?;
                    first = false;
                }
            }
            Ok(())
        }
        PcmKind::Table { elems, add, zero } => {
            write!(f, "table")?;
            for e in elems {
                write!(f, " {e}")?;
            }
            write!(f, " zero {} :", elems[*zero])?;
            let mut first = true;
            for (a, row) in add.iter().enumerate() {
                for (b, v) in row.iter().enumerate() {
                    if let Some(v) = v {
                        if !first {
                            write!(f, " ;")?;
                        }
                        write!(f, " {} {} = {}", elems[a], elems[b], elems[*v])?;
                        first = false;
                    }
                }
            }
            Ok(())
        }
    }
}

struct Cursor<'a> {
    text: &'a str,
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Cursor<'a> {
        Cursor { text, chars: text.char_indices().collect(), pos: 0 }
    }

    fn column(&self) -> usize {
        self.chars.get(self.pos).map(|(i, _)| *i).unwrap_or(self.text.len()) + 1
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|(_, c)| *c)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: char) -> Result<(), SyntaxError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            err(format!("expected {c:?}"), self.column())
        }
    }

    fn word(&mut self) -> Result<String, SyntaxError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_alphanumeric() || c == '_' || c == '-' || c == '\'')
        {
            self.pos += 1;
        }
        if self.pos == start {
            return err("expected a name", self.column());
        }
        Ok(self.chars[start..self.pos].iter().map(|(_, c)| c).collect())
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.chars.len()
    }
}

/// Parse a grade literal against a specific PCM.
pub fn parse_grade(pcm: &Pcm, text: &str) -> Result<Grade, SyntaxError> {
    let mut cur = Cursor::new(text);
    cur.skip_ws();
    let payload = parse_payload(pcm, &mut cur)?;
    if !cur.at_end() {
        return err("trailing input after grade", cur.column());
    }
    Ok(pcm.grade_from_payload(payload))
}

fn parse_payload(pcm: &Pcm, cur: &mut Cursor) -> Result<Payload, SyntaxError> {
    cur.skip_ws();
    let col = cur.column();
    match pcm.kind() {
        PcmKind::Singleton => {
            cur.expect('*')?;
            Ok(Payload::Unit)
        }
        PcmKind::Two | PcmKind::Three => {
            let w = cur.word()?;
            let max = if matches!(pcm.kind(), PcmKind::Two) { 1 } else { 2 };
            match w.parse::<u8>() {
                Ok(n) if n <= max => Ok(Payload::Small(n)),
                _ => err(format!("expected 0..={max}, got {w}"), col),
            }
        }
        PcmKind::Powerset { devices } => Ok(Payload::Mask(parse_mask(devices, cur)?)),
        PcmKind::ReadWrite { locations } => {
            cur.expect('(')?;
            let reads = parse_mask(locations, cur)?;
            cur.skip_ws();
            cur.expect(',')?;
            let writes = parse_mask(locations, cur)?;
            cur.skip_ws();
            cur.expect(')')?;
            Ok(Payload::RwMask { reads, writes })
        }
        PcmKind::Interval { bound } => {
            let start = cur.pos;
            while matches!(cur.peek(), Some(c) if c.is_ascii_digit() || c == '/' || c == '-') {
                cur.pos += 1;
            }
            let lit: String = cur.chars[start..cur.pos].iter().map(|(_, c)| c).collect();
            let r: Rational = lit
                .parse()
                .map_err(|e| SyntaxError { message: format!("{e}"), column: col })?;
            if r.is_negative() || r > *bound {
                return err(format!("{r} is outside [0, {bound}]"), col);
            }
            Ok(Payload::Ratio(r))
        }
        PcmKind::Product { components } => {
            cur.expect('(')?;
            let mut out = Vec::with_capacity(components.len());
            for (i, c) in components.iter().enumerate() {
                if i > 0 {
                    cur.skip_ws();
                    cur.expect(',')?;
                }
                out.push(parse_payload(c, cur)?);
            }
            cur.skip_ws();
            cur.expect(')')?;
            Ok(Payload::Tuple(out))
        }
        PcmKind::NatPlus | PcmKind::NatMax => {
            let w = cur.word()?;
            match w.parse::<u64>() {
                Ok(n) => Ok(Payload::Nat(n)),
                Err(_) => err(format!("expected a natural number, got {w}"), col),
            }
        }
        PcmKind::Semilattice { elems, .. } | PcmKind::Table { elems, .. } => {
            let w = cur.word()?;
            match elems.iter().position(|e| *e == w) {
                Some(i) => Ok(Payload::Index(i)),
                None => err(format!("unknown element {w}"), col),
            }
        }
    }
}

fn parse_mask(names: &[String], cur: &mut Cursor) -> Result<u32, SyntaxError> {
    cur.skip_ws();
    cur.expect('{')?;
    let mut mask = 0u32;
    loop {
        cur.skip_ws();
        if cur.peek() == Some('}') {
            cur.bump();
            return Ok(mask);
        }
        let col = cur.column();
        let w = cur.word()?;
        match names.iter().position(|n| *n == w) {
            Some(i) => {
                if mask & (1 << i) != 0 {
                    return err(format!("duplicate element {w}"), col);
                }
                mask |= 1 << i;
            }
            None => return err(format!("unknown element {w}"), col),
        }
        cur.skip_ws();
        if cur.peek() == Some(',') {
            cur.bump();
        }
    }
}

/// Parse a PCM descriptor line.
pub fn parse_pcm(text: &str) -> Result<Pcm, SyntaxError> {
    let mut cur = Cursor::new(text);
    cur.skip_ws();
    let col = cur.column();
    let head = cur.word()?;
    let lift = |r: Result<Pcm, PcmError>, col: usize| {
        r.map_err(|e| SyntaxError { message: format!("{e}"), column: col })
    };
    let pcm = match head.as_str() {
        "singleton" => Pcm::singleton(),
        "two" => Pcm::two(),
        "three" => Pcm::three(),
        "nat_plus" => Pcm::nat_plus(),
        "nat_max" => Pcm::nat_max(),
        "powerset" => lift(Pcm::powerset(parse_names(&mut cur)?), col)?,
        "rw" => lift(Pcm::read_write(parse_names(&mut cur)?), col)?,
        "interval" => {
            cur.skip_ws();
            let start = cur.pos;
            while matches!(cur.peek(), Some(c) if c.is_ascii_digit() || c == '/' || c == '-') {
                cur.pos += 1;
            }
            let lit: String = cur.chars[start..cur.pos].iter().map(|(_, c)| c).collect();
            let bound: Rational = lit
                .parse()
                .map_err(|e| SyntaxError { message: format!("{e}"), column: col })?;
            lift(Pcm::interval(bound), col)?
        }
        "product" => {
            let mut components = Vec::new();
            loop {
                cur.skip_ws();
                if cur.peek() != Some('(') {
                    break;
                }
                cur.bump();
                let depth_start = cur.pos;
                let mut depth = 1;
                while depth > 0 {
                    match cur.bump() {
                        Some('(') => depth += 1,
                        Some(')') => depth -= 1,
                        Some(_) => {}
                        None => return err("unbalanced parenthesis", cur.column()),
                    }
                }
                let inner: String =
                    cur.chars[depth_start..cur.pos - 1].iter().map(|(_, c)| c).collect();
                components.push(parse_pcm(&inner)?);
            }
            lift(Pcm::product(components), col)?
        }
        "semilattice" => {
            let names = parse_names_until_colon(&mut cur)?;
            cur.expect(':')?;
            let entries = parse_entries(&mut cur, &names)?;
            let n = names.len();
            let mut join = vec![vec![usize::MAX; n]; n];
            for (a, b, v) in entries {
                join[a][b] = v;
            }
            if join.iter().any(|row| row.iter().any(|&v| v == usize::MAX)) {
                return err("semilattice join table is incomplete", col);
            }
            lift(Pcm::semilattice(names, join), col)?
        }
        "table" => {
            let mut names = Vec::new();
            loop {
                cur.skip_ws();
                let w = cur.word()?;
                if w == "zero" {
                    break;
                }
                names.push(w);
            }
            cur.skip_ws();
            let zcol = cur.column();
            let zname = cur.word()?;
            let zero = names
                .iter()
                .position(|n| *n == zname)
                .ok_or(SyntaxError { message: format!("unknown element {zname}"), column: zcol })?;
            cur.skip_ws();
            cur.expect(':')?;
            let entries = parse_entries(&mut cur, &names)?;
            let n = names.len();
            let mut add = vec![vec![None; n]; n];
            for (a, b, v) in entries {
                add[a][b] = Some(v);
            }
            lift(Pcm::table(names, add, zero, true), col)?
        }
        other => return err(format!("unknown PCM kind {other}"), col),
    };
    if !cur.at_end() {
        return err("trailing input after PCM descriptor", cur.column());
    }
    Ok(pcm)
}

fn parse_names(cur: &mut Cursor) -> Result<Vec<String>, SyntaxError> {
    let mut names = Vec::new();
    loop {
        cur.skip_ws();
        if cur.peek().is_none() {
            return Ok(names);
        }
        names.push(cur.word()?);
    }
}

fn parse_names_until_colon(cur: &mut Cursor) -> Result<Vec<String>, SyntaxError> {
    let mut names = Vec::new();
    loop {
        cur.skip_ws();
        match cur.peek() {
            Some(':') => return Ok(names),
            None => return err("expected ':'", cur.column()),
            _ => names.push(cur.word()?),
        }
    }
}

fn parse_entries(
    cur: &mut Cursor,
    names: &[String],
) -> Result<Vec<(usize, usize, usize)>, SyntaxError> {
    let index = |cur: &mut Cursor| -> Result<usize, SyntaxError> {
        cur.skip_ws();
        let col = cur.column();
        let w = cur.word()?;
        names
            .iter()
            .position(|n| *n == w)
            .ok_or(SyntaxError { message: format!("unknown element {w}"), column: col })
    };
    let mut out = Vec::new();
    loop {
        let a = index(cur)?;
        let b = index(cur)?;
        cur.skip_ws();
        cur.expect('=')?;
        let v = index(cur)?;
        out.push((a, b, v));
        cur.skip_ws();
        if cur.peek() == Some(';') {
            cur.bump();
            continue;
        }
        return Ok(out);
    }
}
