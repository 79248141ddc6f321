//! The `copresheaf/1` file format.
//!
//! ```text
//! copresheaf/1
//! pcm two
//! set 0 = x
//! set 1 = x1
//! map 0 1 : x = x1
//! ```
//!
//! Maps need only be given for a generating family of comparable pairs;
//! the closure is derived by composition and the functor laws are checked
//! on load. Grades with no `set` line get the empty set.

use std::collections::BTreeMap;

use crate::pcm::syntax;

use super::{ConvError, Copresheaf};

pub const FORMAT_HEADER: &str = "copresheaf/1";

fn perr(line: usize, message: impl Into<String>) -> ConvError {
    ConvError::ParseError { line, message: message.into() }
}

pub fn load_copresheaf(text: &str) -> Result<Copresheaf, ConvError> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let mut iter = lines.iter();
    let &(hline, header) = iter.next().ok_or_else(|| perr(0, "empty document"))?;
    if header != FORMAT_HEADER {
        return Err(perr(hline, format!("expected header {FORMAT_HEADER}")));
    }

    let mut pcm = None;
    let mut set_lines: Vec<(usize, &str)> = Vec::new();
    let mut map_lines: Vec<(usize, &str)> = Vec::new();
    for &(ln, l) in iter {
        let (head, rest) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
        match head {
            "pcm" => {
                pcm = Some(syntax::parse_pcm(rest.trim()).map_err(|e| perr(ln, e.to_string()))?)
            }
            "set" => set_lines.push((ln, rest.trim())),
            "map" => map_lines.push((ln, rest.trim())),
            other => return Err(perr(ln, format!("unknown directive {other}"))),
        }
    }
    let pcm = pcm.ok_or_else(|| perr(0, "missing pcm line"))?;
    let carrier = pcm.carrier()?;
    let grade_ix = |ln: usize, tok: &str| -> Result<usize, ConvError> {
        let g = pcm.parse_grade(tok).map_err(|e| perr(ln, e.to_string()))?;
        carrier
            .iter()
            .position(|c| *c == g)
            .ok_or_else(|| perr(ln, format!("grade {g} not in the carrier")))
    };

    let mut sets: Vec<Vec<String>> = vec![Vec::new(); carrier.len()];
    for (ln, rest) in &set_lines {
        let (lhs, rhs) = rest
            .split_once('=')
            .ok_or_else(|| perr(*ln, "expected: set <grade> = elements"))?;
        let e = grade_ix(*ln, lhs.trim())?;
        sets[e] = rhs.split_whitespace().map(|s| s.to_string()).collect();
    }

    let mut maps: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (ln, rest) in &map_lines {
        let (lhs, rhs) = rest
            .split_once(':')
            .ok_or_else(|| perr(*ln, "expected: map <g> <g'> : x = y ; ..."))?;
        let toks: Vec<&str> = lhs.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(perr(*ln, "expected: map <g> <g'> : x = y ; ..."));
        }
        let e = grade_ix(*ln, toks[0])?;
        let e2 = grade_ix(*ln, toks[1])?;
        let map = maps
            .entry((e, e2))
            .or_insert_with(|| vec![usize::MAX; sets[e].len()]);
        for entry in rhs.split(';') {
            let (x, y) = entry
                .split_once('=')
                .ok_or_else(|| perr(*ln, "expected: x = y"))?;
            let (x, y) = (x.trim(), y.trim());
            let xi = sets[e]
                .iter()
                .position(|s| s == x)
                .ok_or_else(|| perr(*ln, format!("unknown element {x}")))?;
            let yi = sets[e2]
                .iter()
                .position(|s| s == y)
                .ok_or_else(|| perr(*ln, format!("unknown element {y}")))?;
            map[xi] = yi;
        }
    }
    for ((e, e2), map) in &maps {
        if map.iter().any(|&v| v == usize::MAX) {
            return Err(perr(
                0,
                format!("incomplete map {} -> {}", carrier[*e], carrier[*e2]),
            ));
        }
    }

    Copresheaf::new(pcm, sets, maps)
}

pub fn save_copresheaf(c: &Copresheaf) -> String {
    let mut out = String::new();
    out.push_str(FORMAT_HEADER);
    out.push('\n');
    out.push_str(&format!("pcm {}\n", c.pcm()));
    for (e, g) in c.carrier().iter().enumerate() {
        if !c.set(e).is_empty() {
            out.push_str(&format!("set {} = {}\n", g, c.set(e).join(" ")));
        }
    }
    for (&(e, e2), map) in c.maps() {
        if c.set(e).is_empty() {
            continue;
        }
        let entries: Vec<String> = map
            .iter()
            .enumerate()
            .map(|(x, &y)| format!("{} = {}", c.set(e)[x], c.set(e2)[y]))
            .collect();
        out.push_str(&format!(
            "map {} {} : {}\n",
            c.carrier()[e],
            c.carrier()[e2],
            entries.join(" ; ")
        ));
    }
    out
}
