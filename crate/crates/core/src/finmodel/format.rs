//! The `gmcmodel/1` file format: a line-oriented dump of the model tables.
//!
//! ```text
//! gmcmodel/1
//! pcm two
//! objects I A
//! unit I
//! mul A A = I
//! hom 0 I I = i
//! hom 1 I I = i1 s t
//! id I = i
//! comp 1 I I I : s t = t
//! regrade 0 1 I I : i = i1
//! tensor 0 1 I I A A : i sA = sA
//! braid A A = i
//! ```
//!
//! Grades use the shared literal syntax and never contain spaces. Lines
//! starting with `#` and blank lines are ignored. A `support` line is
//! required exactly when the PCM is infinite. The `mul` section may omit
//! pairs involving the unit. Identity regrades (`e e`) are implicit.

use std::collections::BTreeMap;

use crate::pcm::{syntax, Grade, Pcm};

use super::{
    CompKey, FiniteGradedModel, HomKey, ModelError, ObjectMonoid, RegradeKey, TensorKey,
};

pub const FORMAT_HEADER: &str = "gmcmodel/1";

fn perr(line: usize, message: impl Into<String>) -> ModelError {
    ModelError::ParseError { line, message: message.into() }
}

struct Lines<'a> {
    items: Vec<(usize, &'a str)>,
}

fn content_lines(text: &str) -> Lines<'_> {
    Lines {
        items: text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .collect(),
    }
}

pub fn load_model(text: &str) -> Result<FiniteGradedModel, ModelError> {
    let lines = content_lines(text);
    let mut iter = lines.items.iter();
    let &(line, header) = iter.next().ok_or_else(|| perr(0, "empty document"))?;
    if header != FORMAT_HEADER {
        return Err(perr(line, format!("expected header {FORMAT_HEADER}")));
    }

    let mut pcm: Option<(usize, Pcm)> = None;
    let mut support_line: Option<(usize, &str)> = None;
    let mut object_names: Option<(usize, Vec<String>)> = None;
    let mut unit_name: Option<(usize, String)> = None;
    let mut mul_lines: Vec<(usize, &str)> = Vec::new();
    let mut hom_lines: Vec<(usize, &str)> = Vec::new();
    let mut id_lines: Vec<(usize, &str)> = Vec::new();
    let mut comp_lines: Vec<(usize, &str)> = Vec::new();
    let mut regrade_lines: Vec<(usize, &str)> = Vec::new();
    let mut tensor_lines: Vec<(usize, &str)> = Vec::new();
    let mut braid_lines: Vec<(usize, &str)> = Vec::new();

    for &(ln, l) in iter {
        let (head, rest) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
        let rest = rest.trim();
        match head {
            "pcm" => {
                let p = syntax::parse_pcm(rest).map_err(|e| perr(ln, e.to_string()))?;
                pcm = Some((ln, p));
            }
            "support" => support_line = Some((ln, rest)),
            "objects" => {
                object_names =
                    Some((ln, rest.split_whitespace().map(|s| s.to_string()).collect()))
            }
            "unit" => unit_name = Some((ln, rest.to_string())),
            "mul" => mul_lines.push((ln, rest)),
            "hom" => hom_lines.push((ln, rest)),
            "id" => id_lines.push((ln, rest)),
            "comp" => comp_lines.push((ln, rest)),
            "regrade" => regrade_lines.push((ln, rest)),
            "tensor" => tensor_lines.push((ln, rest)),
            "braid" => braid_lines.push((ln, rest)),
            other => return Err(perr(ln, format!("unknown directive {other}"))),
        }
    }

    let (_, pcm) = pcm.ok_or_else(|| perr(0, "missing pcm line"))?;
    let support: Vec<Grade> = match (&support_line, pcm.is_finite()) {
        (None, true) => pcm.carrier()?,
        (Some((ln, text)), false) => {
            let mut out = Vec::new();
            for tok in text.split_whitespace() {
                out.push(pcm.parse_grade(tok).map_err(|e| perr(*ln, e.to_string()))?);
            }
            out
        }
        (Some((ln, _)), true) => {
            return Err(perr(*ln, "support lines are only for infinite PCMs"))
        }
        (None, false) => return Err(perr(0, "an infinite PCM needs a support line")),
    };

    let (oln, names) = object_names.ok_or_else(|| perr(0, "missing objects line"))?;
    let (uln, uname) = unit_name.ok_or_else(|| perr(0, "missing unit line"))?;
    let unit = names
        .iter()
        .position(|n| *n == uname)
        .ok_or_else(|| perr(uln, format!("unknown unit object {uname}")))?;
    let n_obj = names.len();
    let obj_ix = |ln: usize, name: &str| -> Result<usize, ModelError> {
        names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| perr(ln, format!("unknown object {name}")))
    };

    let mut mul = vec![vec![usize::MAX; n_obj]; n_obj];
    for x in 0..n_obj {
        mul[unit][x] = x;
        mul[x][unit] = x;
    }
    for (ln, rest) in &mul_lines {
        let toks: Vec<&str> = rest.split_whitespace().collect();
        if toks.len() != 4 || toks[2] != "=" {
            return Err(perr(*ln, "expected: mul X Y = Z"));
        }
        let (x, y, z) = (obj_ix(*ln, toks[0])?, obj_ix(*ln, toks[1])?, obj_ix(*ln, toks[3])?);
        mul[x][y] = z;
    }
    if mul.iter().any(|r| r.iter().any(|&v| v == usize::MAX)) {
        return Err(perr(oln, "incomplete object multiplication table"));
    }
    let objects = ObjectMonoid::new(names.clone(), unit, mul)?;

    let grade_ix = |ln: usize, tok: &str| -> Result<usize, ModelError> {
        let g = pcm.parse_grade(tok).map_err(|e| perr(ln, e.to_string()))?;
        support
            .iter()
            .position(|s| *s == g)
            .ok_or_else(|| perr(ln, format!("grade {g} outside the support")))
    };

    let mut hom: BTreeMap<HomKey, Vec<String>> = BTreeMap::new();
    for (ln, rest) in &hom_lines {
        let (lhs, rhs) = rest
            .split_once('=')
            .ok_or_else(|| perr(*ln, "expected: hom <grade> X Y = labels"))?;
        let toks: Vec<&str> = lhs.split_whitespace().collect();
        if toks.len() != 3 {
            return Err(perr(*ln, "expected: hom <grade> X Y = labels"));
        }
        let key = (grade_ix(*ln, toks[0])?, obj_ix(*ln, toks[1])?, obj_ix(*ln, toks[2])?);
        let labels: Vec<String> = rhs.split_whitespace().map(|s| s.to_string()).collect();
        if hom.insert(key, labels).is_some() {
            return Err(perr(*ln, "duplicate hom line"));
        }
    }
    let hom_label = |ln: usize, key: HomKey, name: &str| -> Result<usize, ModelError> {
        hom.get(&key)
            .and_then(|ls| ls.iter().position(|l| l == name))
            .ok_or_else(|| perr(ln, format!("unknown label {name}")))
    };

    let zero_ix = support
        .iter()
        .position(|g| *g == pcm.zero())
        .ok_or_else(|| perr(0, "support must contain the zero grade"))?;
    let mut id = vec![usize::MAX; n_obj];
    for (ln, rest) in &id_lines {
        let toks: Vec<&str> = rest.split_whitespace().collect();
        if toks.len() != 3 || toks[1] != "=" {
            return Err(perr(*ln, "expected: id X = label"));
        }
        let x = obj_ix(*ln, toks[0])?;
        id[x] = hom_label(*ln, (zero_ix, x, x), toks[2])?;
    }
    if id.iter().any(|&v| v == usize::MAX) {
        return Err(perr(0, "missing id line for some object"));
    }

    let mut comp: BTreeMap<CompKey, Vec<Vec<usize>>> = BTreeMap::new();
    for (ln, rest) in &comp_lines {
        let (lhs, args) = rest
            .split_once(':')
            .ok_or_else(|| perr(*ln, "expected: comp <grade> X Y Z : f g = h"))?;
        let toks: Vec<&str> = lhs.split_whitespace().collect();
        if toks.len() != 4 {
            return Err(perr(*ln, "expected: comp <grade> X Y Z : f g = h"));
        }
        let e = grade_ix(*ln, toks[0])?;
        let (x, y, z) = (obj_ix(*ln, toks[1])?, obj_ix(*ln, toks[2])?, obj_ix(*ln, toks[3])?);
        let (fg, h) = args
            .split_once('=')
            .ok_or_else(|| perr(*ln, "expected: comp ... : f g = h"))?;
        let fg: Vec<&str> = fg.split_whitespace().collect();
        if fg.len() != 2 {
            return Err(perr(*ln, "expected two labels before ="));
        }
        let fi = hom_label(*ln, (e, x, y), fg[0])?;
        let gi = hom_label(*ln, (e, y, z), fg[1])?;
        let hi = hom_label(*ln, (e, x, z), h.trim())?;
        let nf = hom.get(&(e, x, y)).map(Vec::len).unwrap_or(0);
        let ng = hom.get(&(e, y, z)).map(Vec::len).unwrap_or(0);
        let table = comp
            .entry((e, x, y, z))
            .or_insert_with(|| vec![vec![usize::MAX; ng]; nf]);
        table[fi][gi] = hi;
    }
    for (key, table) in &comp {
        if table.iter().any(|r| r.iter().any(|&v| v == usize::MAX)) {
            return Err(perr(0, format!("incomplete comp table at {key:?}")));
        }
    }

    let mut regrade: BTreeMap<RegradeKey, Vec<usize>> = BTreeMap::new();
    for (ln, rest) in &regrade_lines {
        let (lhs, args) = rest
            .split_once(':')
            .ok_or_else(|| perr(*ln, "expected: regrade <g> <g'> X Y : f = f'"))?;
        let toks: Vec<&str> = lhs.split_whitespace().collect();
        if toks.len() != 4 {
            return Err(perr(*ln, "expected: regrade <g> <g'> X Y : f = f'"));
        }
        let e = grade_ix(*ln, toks[0])?;
        let e2 = grade_ix(*ln, toks[1])?;
        let (x, y) = (obj_ix(*ln, toks[2])?, obj_ix(*ln, toks[3])?);
        let (f, f2) = args
            .split_once('=')
            .ok_or_else(|| perr(*ln, "expected: regrade ... : f = f'"))?;
        let fi = hom_label(*ln, (e, x, y), f.trim())?;
        let fi2 = hom_label(*ln, (e2, x, y), f2.trim())?;
        let nf = hom.get(&(e, x, y)).map(Vec::len).unwrap_or(0);
        let map = regrade.entry((e, e2, x, y)).or_insert_with(|| vec![usize::MAX; nf]);
        map[fi] = fi2;
    }
    for (key, map) in &regrade {
        if map.iter().any(|&v| v == usize::MAX) {
            return Err(perr(0, format!("incomplete regrade map at {key:?}")));
        }
    }

    let mut tensor: BTreeMap<TensorKey, Vec<Vec<usize>>> = BTreeMap::new();
    for (ln, rest) in &tensor_lines {
        let (lhs, args) = rest
            .split_once(':')
            .ok_or_else(|| perr(*ln, "expected: tensor <a> <b> X Y X' Y' : f g = h"))?;
        let toks: Vec<&str> = lhs.split_whitespace().collect();
        if toks.len() != 6 {
            return Err(perr(*ln, "expected: tensor <a> <b> X Y X' Y' : f g = h"));
        }
        let a = grade_ix(*ln, toks[0])?;
        let b = grade_ix(*ln, toks[1])?;
        let (x, y, x2, y2) = (
            obj_ix(*ln, toks[2])?,
            obj_ix(*ln, toks[3])?,
            obj_ix(*ln, toks[4])?,
            obj_ix(*ln, toks[5])?,
        );
        let (fg, h) = args
            .split_once('=')
            .ok_or_else(|| perr(*ln, "expected: tensor ... : f g = h"))?;
        let fg: Vec<&str> = fg.split_whitespace().collect();
        if fg.len() != 2 {
            return Err(perr(*ln, "expected two labels before ="));
        }
        let fi = hom_label(*ln, (a, x, y), fg[0])?;
        let gi = hom_label(*ln, (b, x2, y2), fg[1])?;
        let sum = pcm
            .add(&support[a], &support[b])?
            .and_then(|s| support.iter().position(|g| *g == s))
            .ok_or_else(|| perr(*ln, "tensor grades are not orthogonal within the support"))?;
        let hi = hom_label(
            *ln,
            (sum, objects.mul(x, x2), objects.mul(y, y2)),
            h.trim(),
        )?;
        let nf = hom.get(&(a, x, y)).map(Vec::len).unwrap_or(0);
        let ng = hom.get(&(b, x2, y2)).map(Vec::len).unwrap_or(0);
        let table = tensor
            .entry((a, b, x, y, x2, y2))
            .or_insert_with(|| vec![vec![usize::MAX; ng]; nf]);
        table[fi][gi] = hi;
    }
    for (key, table) in &tensor {
        if table.iter().any(|r| r.iter().any(|&v| v == usize::MAX)) {
            return Err(perr(0, format!("incomplete tensor table at {key:?}")));
        }
    }

    let braiding = if braid_lines.is_empty() {
        None
    } else {
        let mut out = BTreeMap::new();
        for (ln, rest) in &braid_lines {
            let toks: Vec<&str> = rest.split_whitespace().collect();
            if toks.len() != 4 || toks[2] != "=" {
                return Err(perr(*ln, "expected: braid X Y = label"));
            }
            let (x, y) = (obj_ix(*ln, toks[0])?, obj_ix(*ln, toks[1])?);
            let xy = objects.mul(x, y);
            let yx = objects.mul(y, x);
            out.insert((x, y), hom_label(*ln, (zero_ix, xy, yx), toks[3])?);
        }
        Some(out)
    };

    let model = FiniteGradedModel {
        pcm,
        support,
        objects,
        hom,
        id,
        comp,
        regrade,
        tensor,
        braiding,
    };
    model.validate()?;
    Ok(model)
}

/// Serialize a model deterministically (sections in a fixed order, entries
/// sorted by their index keys).
pub fn save_model(model: &FiniteGradedModel) -> String {
    let mut out = String::new();
    let grade = |e: usize| model.support[e].to_string();
    let obj = |x: usize| model.objects.name(x);
    out.push_str(FORMAT_HEADER);
    out.push('\n');
    out.push_str(&format!("pcm {}\n", model.pcm));
    if !model.pcm.is_finite() {
        let grades: Vec<String> = model.support.iter().map(|g| g.to_string()).collect();
        out.push_str(&format!("support {}\n", grades.join(" ")));
    }
    out.push_str(&format!("objects {}\n", model.objects.names().join(" ")));
    out.push_str(&format!("unit {}\n", obj(model.objects.unit())));
    for x in 0..model.objects.len() {
        for y in 0..model.objects.len() {
            if x == model.objects.unit() || y == model.objects.unit() {
                continue;
            }
            out.push_str(&format!(
                "mul {} {} = {}\n",
                obj(x),
                obj(y),
                obj(model.objects.mul(x, y))
            ));
        }
    }
    for (&(e, x, y), labels) in &model.hom {
        if labels.is_empty() {
            continue;
        }
        out.push_str(&format!(
            "hom {} {} {} = {}\n",
            grade(e),
            obj(x),
            obj(y),
            labels.join(" ")
        ));
    }
    let zero = model.zero_ix();
    for x in 0..model.objects.len() {
        out.push_str(&format!(
            "id {} = {}\n",
            obj(x),
            model.hom_labels(zero, x, x)[model.id[x]]
        ));
    }
    for (&(e, x, y, z), table) in &model.comp {
        for (f, row) in table.iter().enumerate() {
            for (g, &h) in row.iter().enumerate() {
                out.push_str(&format!(
                    "comp {} {} {} {} : {} {} = {}\n",
                    grade(e),
                    obj(x),
                    obj(y),
                    obj(z),
                    model.hom_labels(e, x, y)[f],
                    model.hom_labels(e, y, z)[g],
                    model.hom_labels(e, x, z)[h]
                ));
            }
        }
    }
    for (&(e, e2, x, y), map) in &model.regrade {
        for (f, &f2) in map.iter().enumerate() {
            out.push_str(&format!(
                "regrade {} {} {} {} : {} = {}\n",
                grade(e),
                grade(e2),
                obj(x),
                obj(y),
                model.hom_labels(e, x, y)[f],
                model.hom_labels(e2, x, y)[f2]
            ));
        }
    }
    for (&(a, b, x, y, x2, y2), table) in &model.tensor {
        let c = model.add_ix(a, b).expect("tensor table keys are orthogonal");
        let xo = model.objects.mul(x, x2);
        let yo = model.objects.mul(y, y2);
        for (f, row) in table.iter().enumerate() {
            for (g, &h) in row.iter().enumerate() {
                out.push_str(&format!(
                    "tensor {} {} {} {} {} {} : {} {} = {}\n",
                    grade(a),
                    grade(b),
                    obj(x),
                    obj(y),
                    obj(x2),
                    obj(y2),
                    model.hom_labels(a, x, y)[f],
                    model.hom_labels(b, x2, y2)[g],
                    model.hom_labels(c, xo, yo)[h]
                ));
            }
        }
    }
    if let Some(braiding) = &model.braiding {
        for (&(x, y), &label) in braiding {
            let xy = model.objects.mul(x, y);
            let yx = model.objects.mul(y, x);
            out.push_str(&format!(
                "braid {} {} = {}\n",
                obj(x),
                obj(y),
                model.hom_labels(zero, xy, yx)[label]
            ));
        }
    }
    out
}
