//! Plain-text formats.
//!
//! A poset file looks like
//!
//! ```text
//! # comment
//! poset fig1
//! elements: 0 a b c d 1
//! covers: 0<a 0<b a<c a<d b<c b<d c<1 d<1
//! ```
//!
//! with `order: x<=y ...` accepted in place of `covers:`. Labels are opaque
//! whitespace-free tokens that contain none of `#`, `<`, `[`, `]`, `,`.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use crate::boolean::{boolean_complementation, Complementation};
use crate::error::{Error, Result};
use crate::heyting::{star_table, StarTable};
use crate::poset::{Poset, RelationMode};
use crate::relation::EquivRelation;
use crate::set::ElementSet;

/// A parsed poset file. Star tables and complementations are derived on
/// demand, never read from the file.
#[derive(Debug, Clone)]
pub struct PosetDocument {
    pub name: String,
    pub poset: Poset,
    pub source: Option<PathBuf>,
}

impl PosetDocument {
    pub fn star(&self) -> Option<StarTable> {
        star_table(&self.poset)
    }

    pub fn complementation(&self) -> Option<Complementation> {
        boolean_complementation(&self.poset)
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

pub fn parse_poset(text: &str) -> Result<PosetDocument> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (ln, header) = lines.next().ok_or_else(|| parse_err(1, "empty file"))?;
    let name = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["poset", name] => name.to_string(),
        _ => return Err(parse_err(ln, "expected `poset <name>`")),
    };

    let (ln, elems) = lines.next().ok_or_else(|| parse_err(ln, "missing `elements:` line"))?;
    let labels: Vec<&str> = elems
        .strip_prefix("elements:")
        .ok_or_else(|| parse_err(ln, "expected `elements: <labels>`"))?
        .split_whitespace()
        .collect();
    if let Some(bad) = labels.iter().find(|l| l.contains(['<', '[', ']', ','])) {
        return Err(parse_err(ln, format!("label `{bad}` contains a reserved character")));
    }

    let (ln, rel) = lines.next().ok_or_else(|| parse_err(ln, "missing `covers:` or `order:` line"))?;
    let (mode, body, sep) = if let Some(body) = rel.strip_prefix("covers:") {
        (RelationMode::Covers, body, "<")
    } else if let Some(body) = rel.strip_prefix("order:") {
        (RelationMode::Full, body, "<=")
    } else {
        return Err(parse_err(ln, "expected `covers:` or `order:`"));
    };
    let pairs = body
        .split_whitespace()
        .map(|tok| {
            tok.split_once(sep)
                .filter(|(a, b)| !a.is_empty() && !b.is_empty() && !b.contains('<'))
                .ok_or_else(|| parse_err(ln, format!("malformed pair `{tok}`, expected `x{sep}y`")))
        })
        .collect::<Result<Vec<_>>>()?;

    if let Some((ln, _)) = lines.next() {
        return Err(parse_err(ln, "unexpected content after the relation line"));
    }

    let poset = Poset::build(&labels, &pairs, mode)?;
    Ok(PosetDocument { name, poset, source: None })
}

pub fn read_poset_file(path: &Path) -> Result<PosetDocument> {
    let text = std::fs::read_to_string(path).map_err(|e| parse_err(0, format!("{}: {e}", path.display())))?;
    let mut doc = parse_poset(&text)?;
    doc.source = Some(path.to_path_buf());
    Ok(doc)
}

/// Canonical covers-form text for a poset.
pub fn emit_poset(name: &str, p: &Poset) -> String {
    let covers: Vec<String> =
        p.hasse_edges().into_iter().map(|(a, b)| format!("{}<{}", p.label(a), p.label(b))).collect();
    format!("poset {name}\nelements: {}\ncovers: {}\n", p.labels().join(" "), covers.join(" "))
}

/// Classes as interval bounds, e.g. `[0,a][b,1]`. A class without least and
/// greatest element is written as a set `{x,y}`.
pub fn format_classes(p: &Poset, theta: &EquivRelation) -> String {
    let mut s = String::new();
    for &c in theta.classes() {
        match (p.least_of(c), p.greatest_of(c)) {
            (Some(lo), Some(hi)) if p.interval(lo, hi) == c => {
                let _ = write!(s, "[{},{}]", p.label(lo), p.label(hi));
            }
            _ => s.push_str(&p.fmt_set(c)),
        }
    }
    s
}

/// Parses `delta`, `nabla`, or a class list written as intervals `[x,y]`
/// and sets `{x,y,z}`.
pub fn parse_classes(p: &Poset, text: &str) -> Result<EquivRelation> {
    let text = text.trim();
    match text {
        "delta" => return Ok(EquivRelation::delta(p.len())),
        "nabla" => return Ok(EquivRelation::nabla(p.len())),
        _ => {}
    }
    let err = |m: &str| parse_err(1, format!("{m} in congruence `{text}`"));
    let lookup = |l: &str| p.index_of(l.trim()).ok_or_else(|| Error::UnknownLabel(l.trim().to_string()));
    let mut blocks = Vec::new();
    let mut rest = text;
    while !rest.is_empty() {
        let (open, close) = match rest.as_bytes()[0] {
            b'[' => ('[', ']'),
            b'{' => ('{', '}'),
            _ => return Err(err("expected `[` or `{`")),
        };
        let end = rest.find(close).ok_or_else(|| err("unclosed class"))?;
        let inner = &rest[1..end];
        let block = if open == '[' {
            let (a, b) = inner.split_once(',').ok_or_else(|| err("interval needs two bounds"))?;
            let iv = p.interval(lookup(a)?, lookup(b)?);
            if iv.is_empty() {
                return Err(err("empty interval"));
            }
            iv
        } else {
            inner.split(',').map(lookup).collect::<Result<ElementSet>>()?
        };
        blocks.push(block);
        rest = rest[end + 1..].trim_start();
    }
    EquivRelation::from_classes(p.len(), &blocks)
}

/// The `*` table, row = left operand, with a header row and column of
/// labels; cells are right-aligned to the widest label.
pub fn format_star_table(p: &Poset, star: &StarTable) -> String {
    let w = p.labels().iter().map(|l| l.len()).max().unwrap_or(1).max(1);
    let mut out = String::new();
    let _ = write!(out, "{:>w$} |", "*");
    for l in p.labels() {
        let _ = write!(out, " {l:>w$}");
    }
    out.push('\n');
    let _ = writeln!(out, "{}+{}", "-".repeat(w + 1), "-".repeat(p.len() * (w + 1)));
    for (x, row) in star.rows().enumerate() {
        let _ = write!(out, "{:>w$} |", p.label(x));
        for &v in row {
            let _ = write!(out, " {:>w$}", p.label(v));
        }
        out.push('\n');
    }
    out
}
