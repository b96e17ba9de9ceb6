//! Text and structured document formats.
//!
//! Table files are line based:
//!
//! ```text
//! scale 4
//! neutral 2
//! 0 0 0 0 0
//! 0 1 1 1 1
//! 0 1 2 3 4
//! 0 1 3 3 4
//! 0 1 4 4 4
//! ```
//!
//! `#` starts a comment; blank lines are ignored. The table must be given in
//! full and must be symmetric. Decomposition and pair documents are sequences
//! of `[section]` blocks, each holding a table in the same format.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::chain::ChainScale;
use crate::decomposition::{Choice, Decomposition};
use crate::distributivity::TheoremCase;
use crate::error::{Error, ParseError, Result};
use crate::table::OpTable;
use crate::uninorm::Uninorm;

/// Version stamped into every structured document.
pub const FORMAT_VERSION: u32 = 1;

pub fn write_table(table: &OpTable, neutral: usize) -> String {
    let mut out = format!("scale {}\nneutral {}\n", table.n(), neutral);
    for row in table.rows() {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

pub fn write_uninorm(u: &Uninorm) -> String {
    write_table(u.table(), u.neutral())
}

/// A parsed table file; the axioms are not checked here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableDoc {
    pub table: OpTable,
    pub neutral: usize,
}

impl TableDoc {
    pub fn into_uninorm(self) -> Result<Uninorm> {
        Uninorm::new(self.table, self.neutral)
    }
}

/// A significant line: 1-based number, text with comments removed.
#[derive(Debug, Clone, Copy)]
struct Line<'a> {
    no: usize,
    text: &'a str,
    raw: &'a str,
}

fn significant_lines(src: &str) -> Vec<Line<'_>> {
    src.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let text = raw.split('#').next().unwrap_or("");
            (!text.trim().is_empty()).then_some(Line { no: i + 1, text, raw })
        })
        .collect()
}

/// Whitespace-separated tokens with 1-based columns.
fn tokens(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in text.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &text[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &text[s..]));
    }
    out
}

fn perr(line: &Line<'_>, column: usize, msg: impl Into<String>) -> ParseError {
    ParseError::new(line.no, column, msg).with_source(line.raw)
}

fn parse_uint(line: &Line<'_>, col: usize, tok: &str) -> std::result::Result<usize, ParseError> {
    tok.parse::<usize>()
        .map_err(|_| perr(line, col, format!("expected a non-negative integer, found '{tok}'")))
}

/// `keyword <integer>` on its own line.
fn keyword_line(line: &Line<'_>, keyword: &str) -> std::result::Result<usize, ParseError> {
    let toks = tokens(line.text);
    match toks.as_slice() {
        [(_, k), (c, v)] if *k == keyword => parse_uint(line, *c, v),
        [(c, k), ..] if *k != keyword => Err(perr(line, *c, format!("expected '{keyword} <integer>'"))),
        [_, _, (c, _), ..] => Err(perr(line, *c, "unexpected trailing token")),
        _ => Err(perr(line, 1, format!("expected '{keyword} <integer>'"))),
    }
}

fn parse_table_lines(
    lines: &[Line<'_>],
    end_line: usize,
) -> std::result::Result<(TableDoc, usize), ParseError> {
    let eof = |msg: &str| ParseError::new(end_line, 1, msg);
    let first = lines.first().ok_or_else(|| eof("expected 'scale <n>'"))?;
    let n = keyword_line(first, "scale")?;
    let scale = ChainScale::new(n).map_err(|e| perr(first, 7.min(first.text.len()), e.to_string()))?;
    let second = lines.get(1).ok_or_else(|| eof("expected 'neutral <e>'"))?;
    let e = keyword_line(second, "neutral")?;
    if e > n {
        return Err(perr(second, 9, format!("neutral element {e} is outside the chain 0..={n}")));
    }
    let size = scale.size();
    let mut rows: Vec<Vec<usize>> = Vec::with_capacity(size);
    for r in 0..size {
        let line = lines
            .get(2 + r)
            .ok_or_else(|| eof(&format!("expected {size} table rows, found {r}")))?;
        let toks = tokens(line.text);
        if toks.len() != size {
            let col = toks.get(size).map_or(line.text.trim_end().len() + 1, |t| t.0);
            return Err(perr(line, col, format!("expected {size} entries, found {}", toks.len())));
        }
        let mut row = Vec::with_capacity(size);
        for &(c, t) in &toks {
            let v = parse_uint(line, c, t)?;
            if v > n {
                return Err(perr(line, c, format!("entry {v} is outside the chain 0..={n}")));
            }
            row.push(v);
        }
        for (y, &v) in row.iter().enumerate().take(r) {
            if rows[y][r] != v {
                return Err(perr(
                    line,
                    toks[y].0,
                    format!("table is not symmetric: ({r}, {y}) = {v} but ({y}, {r}) = {}", rows[y][r]),
                ));
            }
        }
        rows.push(row);
    }
    let table = OpTable::from_rows(scale, &rows).expect("rows checked above");
    Ok((TableDoc { table, neutral: e }, 2 + size))
}

pub fn parse_table(src: &str) -> std::result::Result<TableDoc, ParseError> {
    let lines = significant_lines(src);
    let end = src.lines().count().max(1);
    let (doc, used) = parse_table_lines(&lines, end)?;
    if let Some(extra) = lines.get(used) {
        return Err(perr(extra, 1, "unexpected content after the table"));
    }
    Ok(doc)
}

struct Section<'a> {
    name: String,
    header: Line<'a>,
    lines: Vec<Line<'a>>,
}

/// Splits into a preamble and `[name]` sections.
fn sections(src: &str) -> (Vec<Line<'_>>, Vec<Section<'_>>) {
    let mut pre = Vec::new();
    let mut secs: Vec<Section<'_>> = Vec::new();
    for line in significant_lines(src) {
        let t = line.text.trim();
        if t.starts_with('[') && t.ends_with(']') {
            secs.push(Section { name: t[1..t.len() - 1].trim().to_string(), header: line, lines: Vec::new() });
        } else if let Some(s) = secs.last_mut() {
            s.lines.push(line);
        } else {
            pre.push(line);
        }
    }
    (pre, secs)
}

fn section_table(sec: &Section<'_>) -> std::result::Result<TableDoc, ParseError> {
    let end = sec.lines.last().map_or(sec.header.no, |l| l.no);
    let (doc, used) = parse_table_lines(&sec.lines, end)?;
    if let Some(extra) = sec.lines.get(used) {
        return Err(perr(extra, 1, format!("unexpected content in section [{}]", sec.name)));
    }
    Ok(doc)
}

/// Two uninorms as `[u1]` and `[u2]` sections.
pub fn write_pair(u1: &Uninorm, u2: &Uninorm) -> String {
    format!("[u1]\n{}[u2]\n{}", write_uninorm(u1), write_uninorm(u2))
}

pub fn parse_pair(src: &str) -> Result<(Uninorm, Uninorm)> {
    let (pre, secs) = sections(src);
    if let Some(l) = pre.first() {
        return Err(perr(l, 1, "expected a [u1] section").into());
    }
    let find = |name: &str| {
        secs.iter()
            .find(|s| s.name == name)
            .ok_or_else(|| ParseError::new(1, 1, format!("missing [{name}] section")))
    };
    let u1 = section_table(find("u1")?)?.into_uninorm()?;
    let u2 = section_table(find("u2")?)?.into_uninorm()?;
    Ok((u1, u2))
}

/// Any number of tables, each under its own `[name]` header.
pub fn write_named_tables<'a>(items: impl IntoIterator<Item = (String, &'a Uninorm)>) -> String {
    let mut out = String::new();
    for (name, u) in items {
        out.push_str(&format!("[{name}]\n"));
        out.push_str(&write_uninorm(u));
    }
    out
}

pub fn parse_named_tables(src: &str) -> std::result::Result<Vec<(String, TableDoc)>, ParseError> {
    let (pre, secs) = sections(src);
    if let Some(l) = pre.first() {
        return Err(perr(l, 1, "expected a [name] section header"));
    }
    secs.iter().map(|s| Ok((s.name.clone(), section_table(s)?))).collect()
}

/// A decomposition together with the chain and neutral elements it belongs to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionDoc {
    pub scale: ChainScale,
    pub e1: usize,
    pub e2: usize,
    pub decomposition: Decomposition,
}

pub fn write_decomposition(doc: &DecompositionDoc) -> String {
    let d = &doc.decomposition;
    let mut out = format!(
        "case {}\nscale {}\ne1 {}\ne2 {}\n[inner]\n{}[boundary]\n{}",
        d.case,
        doc.scale.n(),
        doc.e1,
        doc.e2,
        write_uninorm(&d.inner),
        write_uninorm(&d.boundary_op)
    );
    if let Some(r) = &d.residual {
        out.push_str("[residual]\n");
        out.push_str(&write_uninorm(r));
    }
    out.push_str("[selection]\n");
    for (&(x, y), c) in &d.selection {
        out.push_str(&format!("{x} {y} {}\n", c.name()));
    }
    out
}

pub fn parse_decomposition(src: &str) -> Result<DecompositionDoc> {
    let (pre, secs) = sections(src);
    let mut header: BTreeMap<&str, (usize, Line<'_>)> = BTreeMap::new();
    let mut case = None;
    for line in &pre {
        let toks = tokens(line.text);
        match toks.as_slice() {
            [(_, "case"), (c, v)] => {
                case = Some(match *v {
                    "greater-neutral" => TheoremCase::GreaterNeutral,
                    "less-neutral" => TheoremCase::LessNeutral,
                    other => {
                        return Err(perr(line, *c, format!("unknown case '{other}'")).into())
                    }
                })
            }
            [(_, k @ ("scale" | "e1" | "e2")), (c, v)] => {
                header.insert(k, (parse_uint(line, *c, v)?, *line));
            }
            [(c, _), ..] => return Err(perr(line, *c, "expected case/scale/e1/e2 header").into()),
            [] => {}
        }
    }
    let missing = |what: &str| ParseError::new(1, 1, format!("missing '{what}' header"));
    let case = case.ok_or_else(|| missing("case"))?;
    let (n, nl) = header.get("scale").copied().ok_or_else(|| missing("scale"))?;
    let scale = ChainScale::new(n).map_err(|e| perr(&nl, 1, e.to_string()))?;
    let e1 = header.get("e1").ok_or_else(|| missing("e1"))?.0;
    let e2 = header.get("e2").ok_or_else(|| missing("e2"))?.0;

    let mut inner = None;
    let mut boundary = None;
    let mut residual = None;
    let mut selection = BTreeMap::new();
    for sec in &secs {
        match sec.name.as_str() {
            "inner" => inner = Some(section_table(sec)?.into_uninorm()?),
            "boundary" => boundary = Some(section_table(sec)?.into_uninorm()?),
            "residual" => residual = Some(section_table(sec)?.into_uninorm()?),
            "selection" => {
                for line in &sec.lines {
                    let toks = tokens(line.text);
                    let [(cx, x), (cy, y), (cc, c)] = toks.as_slice() else {
                        return Err(perr(line, 1, "expected '<x> <y> first|second'").into());
                    };
                    let key = (parse_uint(line, *cx, x)?, parse_uint(line, *cy, y)?);
                    let choice = match *c {
                        "first" => Choice::First,
                        "second" => Choice::Second,
                        other => {
                            return Err(perr(line, *cc, format!("unknown choice '{other}'")).into())
                        }
                    };
                    if selection.insert(key, choice).is_some() {
                        return Err(perr(line, *cx, "duplicate selection point").into());
                    }
                }
            }
            other => {
                return Err(perr(&sec.header, 1, format!("unknown section [{other}]")).into())
            }
        }
    }
    let decomposition = Decomposition {
        case,
        inner: inner.ok_or_else(|| ParseError::new(1, 1, "missing [inner] section"))?,
        boundary_op: boundary.ok_or_else(|| ParseError::new(1, 1, "missing [boundary] section"))?,
        residual,
        selection,
    };
    decomposition.check_shape(scale.n(), e1, e2)?;
    Ok(DecompositionDoc { scale, e1, e2, decomposition })
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    #[serde(rename = "format-version")]
    format_version: u32,
    kind: &'a str,
    #[serde(flatten)]
    body: &'a T,
}

/// Pretty JSON document `{"format-version": 1, "kind": ..., <body fields>}`.
pub fn structured<T: Serialize>(kind: &str, body: &T) -> String {
    let env = Envelope { format_version: FORMAT_VERSION, kind, body };
    let mut s = serde_json::to_string_pretty(&env).expect("report types serialize");
    s.push('\n');
    s
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Internal(e.to_string())
    }
}
