//! The `.qrep` representation format and the `.poset` fixture format.
//!
//! ```text
//! # leading comment lines are kept
//! name example
//! field 2                  # or: field infinite
//! quiver
//!   vertices 3
//!   arrow alpha 2 1
//!   arrow beta 2 3
//! relations
//!   rel 1 alpha.beta - 1 gamma.delta
//! representation
//!   dim 2 1
//!   map alpha [[1]]
//! ```
//!
//! Paths are traversed left to right. Matrices are row-major with shape
//! `dim(target) × dim(source)`. Omitted dimensions are 0 and omitted maps are
//! zero.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exactmath::{FieldSpec, Mat, Scalar};
use crate::poset::FinitePoset;
use crate::quiver::{Arrow, Path, Quiver, Relation};
use crate::rep::Representation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QrepDocument {
    pub name: Option<String>,
    /// Comment lines at the top of the file, verbatim.
    pub header: Vec<String>,
    pub rep: Representation,
}

impl QrepDocument {
    pub fn new(rep: Representation) -> Self {
        QrepDocument {
            name: None,
            header: Vec::new(),
            rep,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.rep.field()
    }

    pub fn quiver(&self) -> &Quiver {
        self.rep.quiver()
    }

    pub fn relations(&self) -> &[Relation] {
        self.rep.relations()
    }
}

/// A whitespace-separated token with its 1-based column.
#[derive(Clone, Copy)]
struct Tok<'a> {
    text: &'a str,
    col: usize,
}

fn tokens(line: &str) -> Vec<Tok<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push(Tok {
                    text: &line[s..i],
                    col: line[..s].chars().count() + 1,
                });
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    out
}

fn syntax(line: usize, col: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        col,
        message: message.into(),
    }
}

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(a, _)| a)
}

/// Leading `#` lines, then the remaining lines with their 1-based numbers.
fn split_header(text: &str) -> (Vec<String>, Vec<(usize, &str)>) {
    let mut header = Vec::new();
    let mut body = Vec::new();
    let mut in_header = true;
    for (i, line) in text.lines().enumerate() {
        if in_header && line.starts_with('#') {
            header.push(line.to_string());
            continue;
        }
        in_header = false;
        body.push((i + 1, line));
    }
    (header, body)
}

fn parse_usize(t: Tok, line: usize, what: &str) -> Result<usize> {
    t.text
        .parse()
        .map_err(|_| syntax(line, t.col, format!("expected {what}, found `{}`", t.text)))
}

fn expect_len(toks: &[Tok], n: usize, line: usize, usage: &str) -> Result<()> {
    if toks.len() != n {
        let col = toks.get(n).map_or(toks[0].col, |t| t.col);
        return Err(syntax(line, col, format!("expected `{usage}`")));
    }
    Ok(())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Section {
    Top,
    Quiver,
    Relations,
    Representation,
}

/// Parses a matrix literal such as `[[1,0],[0,1/2]]`; `col0` is the column
/// of its first character.
fn parse_matrix(text: &str, col0: usize, line: usize, field: FieldSpec) -> Result<Vec<Vec<Scalar>>> {
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    let err = |i: usize, m: &str| syntax(line, col0 + i, m.to_string());
    let skip_ws = |i: &mut usize| {
        while *i < chars.len() && chars[*i].is_whitespace() {
            *i += 1;
        }
    };
    let expect = |i: &mut usize, c: char| -> Result<()> {
        skip_ws(i);
        if chars.get(*i) == Some(&c) {
            *i += 1;
            Ok(())
        } else {
            Err(err(*i, &format!("expected `{c}`")))
        }
    };
    let mut rows = Vec::new();
    expect(&mut i, '[')?;
    skip_ws(&mut i);
    if chars.get(i) == Some(&']') {
        i += 1;
    } else {
        loop {
            expect(&mut i, '[')?;
            let mut row = Vec::new();
            skip_ws(&mut i);
            if chars.get(i) == Some(&']') {
                i += 1;
            } else {
                loop {
                    skip_ws(&mut i);
                    let start = i;
                    while i < chars.len() && !matches!(chars[i], ',' | ']') && !chars[i].is_whitespace() {
                        i += 1;
                    }
                    let tok: String = chars[start..i].iter().collect();
                    if tok.is_empty() {
                        return Err(err(start, "expected a scalar"));
                    }
                    row.push(
                        field
                            .parse_scalar(&tok)
                            .map_err(|_| err(start, &format!("malformed scalar `{tok}`")))?,
                    );
                    skip_ws(&mut i);
                    match chars.get(i) {
                        Some(',') => i += 1,
                        Some(']') => {
                            i += 1;
                            break;
                        }
                        _ => return Err(err(i, "expected `,` or `]`")),
                    }
                }
            }
            rows.push(row);
            skip_ws(&mut i);
            match chars.get(i) {
                Some(',') => i += 1,
                Some(']') => {
                    i += 1;
                    break;
                }
                _ => return Err(err(i, "expected `,` or `]`")),
            }
        }
    }
    skip_ws(&mut i);
    if i != chars.len() {
        return Err(err(i, "trailing characters after matrix"));
    }
    Ok(rows)
}

fn parse_relation(toks: &[Tok], line: usize, field: FieldSpec, quiver: &Quiver) -> Result<Relation> {
    let mut terms = Vec::new();
    let mut i = 1;
    let mut negate = false;
    if toks.len() < 2 {
        return Err(syntax(line, toks[0].col, "empty relation"));
    }
    loop {
        let t = toks
            .get(i)
            .ok_or_else(|| syntax(line, toks[i - 1].col, "expected a term"))?;
        let (coef, path_tok) = match field.parse_scalar(t.text) {
            Ok(c) => {
                let p = toks
                    .get(i + 1)
                    .ok_or_else(|| syntax(line, t.col, "coefficient without a path"))?;
                i += 2;
                (c, *p)
            }
            Err(_) => {
                i += 1;
                (field.one(), *t)
            }
        };
        let coef = if negate { field.neg(&coef) } else { coef };
        let path = Path::parse(quiver, path_tok.text).map_err(|e| syntax(line, path_tok.col, e.to_string()))?;
        terms.push((coef, path));
        match toks.get(i) {
            None => break,
            Some(s) if s.text == "+" || s.text == "-" => {
                negate = s.text == "-";
                i += 1;
            }
            Some(s) => return Err(syntax(line, s.col, format!("expected `+` or `-`, found `{}`", s.text))),
        }
    }
    Relation::new(field, terms).map_err(|e| Error::Validation(vec![format!("line {line}: {e}")]))
}

/// Parses and fully validates a `.qrep` document.
pub fn parse(text: &str) -> Result<QrepDocument> {
    let (header, body) = split_header(text);
    let mut name = None;
    let mut field: Option<FieldSpec> = None;
    let mut section = Section::Top;
    let mut seen = Vec::new();
    let mut n_vertices: Option<usize> = None;
    let mut arrows: Vec<Arrow> = Vec::new();
    let mut quiver: Option<Quiver> = None;
    let mut relations = Vec::new();
    let mut dims: Vec<Option<usize>> = Vec::new();
    let mut maps: Vec<(usize, usize, usize, Vec<Vec<Scalar>>)> = Vec::new();
    let mut last_line = 0;

    let finish_quiver = |n: Option<usize>, arrows: &[Arrow], line: usize| -> Result<Quiver> {
        let n = n.ok_or_else(|| syntax(line, 1, "quiver section without `vertices`"))?;
        Quiver::new(n, arrows.to_vec()).map_err(|e| syntax(line, 1, e.to_string()))
    };

    for &(ln, raw) in &body {
        last_line = ln;
        let toks = tokens(strip_comment(raw));
        let Some(&head) = toks.first() else { continue };
        let new_section = match head.text {
            "quiver" => Some(Section::Quiver),
            "relations" => Some(Section::Relations),
            "representation" => Some(Section::Representation),
            _ => None,
        };
        if let Some(s) = new_section {
            expect_len(&toks, 1, ln, head.text)?;
            if seen.contains(&s) {
                return Err(syntax(ln, head.col, format!("duplicate `{}` section", head.text)));
            }
            if field.is_none() {
                return Err(syntax(ln, head.col, "`field` must come first"));
            }
            if section == Section::Quiver {
                quiver = Some(finish_quiver(n_vertices, &arrows, ln)?);
            }
            if s != Section::Quiver && quiver.is_none() {
                return Err(syntax(ln, head.col, "`quiver` section must come first"));
            }
            if s == Section::Relations && seen.contains(&Section::Representation) {
                return Err(syntax(ln, head.col, "`relations` must precede `representation`"));
            }
            if s == Section::Representation {
                dims = vec![None; quiver.as_ref().expect("checked").n_vertices()];
            }
            seen.push(s);
            section = s;
            continue;
        }
        match (section, head.text) {
            (Section::Top, "name") => {
                let rest = strip_comment(raw).trim_start();
                let value = rest["name".len()..].trim();
                if value.is_empty() {
                    return Err(syntax(ln, head.col, "expected `name <text>`"));
                }
                name = Some(value.to_string());
            }
            (Section::Top, "field") => {
                expect_len(&toks, 2, ln, "field <prime>|infinite")?;
                if field.is_some() {
                    return Err(syntax(ln, head.col, "duplicate `field`"));
                }
                let v = toks[1];
                field = Some(if v.text == "infinite" {
                    FieldSpec::rationals()
                } else {
                    let p: u64 = v
                        .text
                        .parse()
                        .map_err(|_| syntax(ln, v.col, format!("expected a prime or `infinite`, found `{}`", v.text)))?;
                    FieldSpec::prime(p)
                        .map_err(|_| Error::Validation(vec![format!("line {ln}, col {}: {p} is not a prime", v.col)]))?
                });
            }
            (Section::Quiver, "vertices") => {
                expect_len(&toks, 2, ln, "vertices <n>")?;
                if n_vertices.is_some() {
                    return Err(syntax(ln, head.col, "duplicate `vertices`"));
                }
                let n = parse_usize(toks[1], ln, "a vertex count")?;
                if n == 0 {
                    return Err(syntax(ln, toks[1].col, "a quiver needs at least one vertex"));
                }
                n_vertices = Some(n);
            }
            (Section::Quiver, "arrow") => {
                expect_len(&toks, 4, ln, "arrow <name> <source> <target>")?;
                let n = n_vertices.ok_or_else(|| syntax(ln, head.col, "`vertices` must precede arrows"))?;
                if arrows.iter().any(|a| a.name == toks[1].text) {
                    return Err(syntax(ln, toks[1].col, format!("duplicate arrow `{}`", toks[1].text)));
                }
                let mut ends = [0; 2];
                for (k, t) in toks[2..4].iter().enumerate() {
                    let v = parse_usize(*t, ln, "a vertex")?;
                    if v == 0 || v > n {
                        return Err(syntax(ln, t.col, format!("vertex {v} out of range 1..={n}")));
                    }
                    ends[k] = v;
                }
                let a = Arrow {
                    name: toks[1].text.to_string(),
                    source: ends[0],
                    target: ends[1],
                };
                Quiver::new(n, vec![a.clone()]).map_err(|e| syntax(ln, toks[1].col, e.to_string()))?;
                arrows.push(a);
            }
            (Section::Relations, "rel") => {
                let q = quiver.as_ref().expect("checked");
                relations.push(parse_relation(&toks, ln, field.expect("checked"), q)?);
            }
            (Section::Representation, "dim") => {
                expect_len(&toks, 3, ln, "dim <vertex> <dimension>")?;
                let v = parse_usize(toks[1], ln, "a vertex")?;
                if v == 0 || v > dims.len() {
                    return Err(syntax(ln, toks[1].col, format!("vertex {v} out of range 1..={}", dims.len())));
                }
                if dims[v - 1].is_some() {
                    return Err(syntax(ln, toks[1].col, format!("duplicate dimension for vertex {v}")));
                }
                dims[v - 1] = Some(parse_usize(toks[2], ln, "a dimension")?);
            }
            (Section::Representation, "map") => {
                if toks.len() < 3 {
                    return Err(syntax(ln, head.col, "expected `map <arrow> <matrix>`"));
                }
                let q = quiver.as_ref().expect("checked");
                let idx = q
                    .arrow_index(toks[1].text)
                    .ok_or_else(|| syntax(ln, toks[1].col, format!("unknown arrow `{}`", toks[1].text)))?;
                if maps.iter().any(|m| m.0 == idx) {
                    return Err(syntax(ln, toks[1].col, format!("duplicate map for `{}`", toks[1].text)));
                }
                let line = strip_comment(raw);
                let byte = line
                    .char_indices()
                    .nth(toks[2].col - 1)
                    .map_or(line.len(), |(b, _)| b);
                let rows = parse_matrix(line[byte..].trim_end(), toks[2].col, ln, field.expect("checked"))?;
                maps.push((idx, ln, toks[2].col, rows));
            }
            (s, other) => {
                return Err(syntax(ln, head.col, format!("unexpected `{other}` in {s:?} section")));
            }
        }
    }
    let field = field.ok_or_else(|| syntax(last_line.max(1), 1, "missing `field`"))?;
    if section == Section::Quiver {
        quiver = Some(finish_quiver(n_vertices, &arrows, last_line)?);
    }
    let quiver = quiver.ok_or_else(|| syntax(last_line.max(1), 1, "missing `quiver` section"))?;
    if dims.is_empty() {
        dims = vec![None; quiver.n_vertices()];
    }
    let dims: Vec<usize> = dims.into_iter().map(|d| d.unwrap_or(0)).collect();
    let mut mats: Vec<Mat> = quiver
        .arrows()
        .iter()
        .map(|a| Mat::zeros(field, dims[a.target - 1], dims[a.source - 1]))
        .collect();
    let mut problems = Vec::new();
    for (idx, ln, col, rows) in maps {
        let a = &quiver.arrows()[idx];
        let (r, c) = (dims[a.target - 1], dims[a.source - 1]);
        let shape_ok = rows.len() == r && rows.iter().all(|row| row.len() == c);
        if !shape_ok {
            let got_c = rows.first().map_or(0, Vec::len);
            problems.push(format!(
                "line {ln}, col {col}: map {} must be {r}x{c}, found {}x{got_c}",
                a.name,
                rows.len()
            ));
            continue;
        }
        mats[idx] = Mat::from_rows(field, c, rows)?;
    }
    if !problems.is_empty() {
        return Err(Error::Validation(problems));
    }
    let rep = Representation::new(field, quiver, dims, mats, relations)?;
    Ok(QrepDocument { name, header, rep })
}

fn write_relation(out: &mut String, field: FieldSpec, rel: &Relation) {
    out.push_str("  rel");
    for (i, (c, p)) in rel.terms().iter().enumerate() {
        let neg = c.is_negative();
        let mag = if neg { field.neg(c) } else { c.clone() };
        match (i, neg) {
            (0, false) => write!(out, " {mag} {p}"),
            (0, true) => write!(out, " -{mag} {p}"),
            (_, false) => write!(out, " + {mag} {p}"),
            (_, true) => write!(out, " - {mag} {p}"),
        }
        .expect("writing to a String");
    }
    out.push('\n');
}

/// Canonical text. `parse(&print(d))` returns `d`.
pub fn print(doc: &QrepDocument) -> String {
    let mut out = String::new();
    for h in &doc.header {
        out.push_str(h);
        out.push('\n');
    }
    if !doc.header.is_empty() {
        out.push('\n');
    }
    if let Some(n) = &doc.name {
        writeln!(out, "name {n}").unwrap();
    }
    let rep = &doc.rep;
    let field = rep.field();
    writeln!(out, "field {field}").unwrap();
    out.push_str("quiver\n");
    writeln!(out, "  vertices {}", rep.quiver().n_vertices()).unwrap();
    for a in rep.quiver().arrows() {
        writeln!(out, "  arrow {} {} {}", a.name, a.source, a.target).unwrap();
    }
    if !rep.relations().is_empty() {
        out.push_str("relations\n");
        for r in rep.relations() {
            write_relation(&mut out, field, r);
        }
    }
    out.push_str("representation\n");
    for v in rep.quiver().vertices() {
        writeln!(out, "  dim {v} {}", rep.dim(v)).unwrap();
    }
    for (a, m) in rep.quiver().arrows().iter().zip(rep.maps()) {
        if !m.is_zero() {
            writeln!(out, "  map {} {m}", a.name).unwrap();
        }
    }
    out
}

/// Parses the `.poset` fixture format: `element <label>` lines followed by
/// `less <x> <y>` lines; the order is the reflexive-transitive closure.
pub fn parse_poset(text: &str) -> Result<(FinitePoset, Vec<String>)> {
    let (header, body) = split_header(text);
    let mut labels: Vec<String> = Vec::new();
    let mut rels = Vec::new();
    for &(ln, raw) in &body {
        let toks = tokens(strip_comment(raw));
        let Some(&head) = toks.first() else { continue };
        match head.text {
            "element" => {
                expect_len(&toks, 2, ln, "element <label>")?;
                if labels.iter().any(|l| l == toks[1].text) {
                    return Err(syntax(ln, toks[1].col, format!("duplicate element `{}`", toks[1].text)));
                }
                labels.push(toks[1].text.to_string());
            }
            "less" => {
                expect_len(&toks, 3, ln, "less <x> <y>")?;
                let find = |t: Tok| {
                    labels
                        .iter()
                        .position(|l| l == t.text)
                        .ok_or_else(|| syntax(ln, t.col, format!("unknown element `{}`", t.text)))
                };
                rels.push((find(toks[1])?, find(toks[2])?));
            }
            other => return Err(syntax(ln, head.col, format!("unexpected `{other}`"))),
        }
    }
    let poset = FinitePoset::from_relations(labels, &rels)?;
    Ok((poset, header))
}

/// Canonical `.poset` text: elements, then the cover relation.
pub fn print_poset(poset: &FinitePoset, header: &[String]) -> String {
    let mut out = String::new();
    for h in header {
        out.push_str(h);
        out.push('\n');
    }
    if !header.is_empty() {
        out.push('\n');
    }
    for l in poset.labels() {
        writeln!(out, "element {l}").unwrap();
    }
    for (x, y) in poset.covers() {
        writeln!(out, "less {} {}", poset.label(x), poset.label(y)).unwrap();
    }
    out
}
