//! Line-oriented text formats for systems, generators and hypergraphs.
//!
//! Blank lines and lines starting with `#` are ignored everywhere. Scalars
//! are exact: integers, decimals (`2.5`), fractions (`5/2`) or `-inf`.
//!
//! ```text
//! tropical-hrep 1        tropical-vrep 1        hypergraph 1
//! d 3                    d 3                    nodes u v w
//! n 1                    count 2                u -> v w
//! A                      -inf 0 -inf            v w -> u
//! 0 -inf -inf            0 3 2
//! B
//! -inf 0 0
//! ```

use std::fmt::Write as _;

use thiserror::Error;
use tropical_cones::cone::{AffineSystem, IneqSystem};
use tropical_cones::hypergraph::{Hypergraph, LabeledHypergraph};
use tropical_cones::maxplus::{Matrix, Scalar, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

type Result<T> = std::result::Result<T, ParseError>;

/// A token with its 1-based position.
#[derive(Clone, Copy, Debug)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

impl Token<'_> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError { line: self.line, column: self.column, message: message.into() }
    }
}

struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
}

impl<'a> Line<'a> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError { line: self.number, column: 1, message: message.into() }
    }
}

fn tokenize(line: &str, number: usize) -> Vec<Token<'_>> {
    let mut tokens = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                tokens.push(Token { text: &line[s..i], line: number, column: line[..s].chars().count() + 1 });
                start = None;
            }
            _ => {}
        }
    }
    tokens
}

struct Lines<'a> {
    lines: Vec<Line<'a>>,
    pos: usize,
    last_line: usize,
}

impl<'a> Lines<'a> {
    fn new(input: &'a str) -> Self {
        let mut lines = Vec::new();
        let mut last_line = 0;
        for (i, raw) in input.lines().enumerate() {
            last_line = i + 1;
            let trimmed = raw.trim_start();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            lines.push(Line { number: i + 1, tokens: tokenize(raw, i + 1) });
        }
        Lines { lines, pos: 0, last_line }
    }

    fn next(&mut self, what: &str) -> Result<&Line<'a>> {
        let line = self.lines.get(self.pos).ok_or_else(|| ParseError {
            line: self.last_line + 1,
            column: 1,
            message: format!("unexpected end of input, expected {what}"),
        })?;
        self.pos += 1;
        Ok(line)
    }

    fn finish(&self) -> Result<()> {
        match self.lines.get(self.pos) {
            Some(line) => Err(line.tokens[0].error("unexpected trailing content")),
            None => Ok(()),
        }
    }

    /// A line `keyword value...`, returning the value tokens.
    fn keyword(&mut self, keyword: &str) -> Result<Vec<Token<'a>>> {
        let line = self.next(&format!("`{keyword}`"))?;
        if line.tokens[0].text != keyword {
            return Err(line.tokens[0].error(format!("expected `{keyword}`, found `{}`", line.tokens[0].text)));
        }
        Ok(line.tokens[1..].to_vec())
    }

    fn count(&mut self, keyword: &str) -> Result<usize> {
        let line_number = self.lines.get(self.pos).map_or(self.last_line + 1, |l| l.number);
        let values = self.keyword(keyword)?;
        match values.as_slice() {
            [v] => v.text.parse().map_err(|_| v.error(format!("`{keyword}` needs a nonnegative integer"))),
            _ => Err(ParseError {
                line: line_number,
                column: 1,
                message: format!("`{keyword}` takes exactly one value"),
            }),
        }
    }

    fn header(&mut self, magic: &str) -> Result<()> {
        let values = self.keyword(magic)?;
        match values.as_slice() {
            [v] if v.text == "1" => Ok(()),
            [v] => Err(v.error(format!("unsupported {magic} version `{}`", v.text))),
            _ => Err(ParseError { line: 1, column: 1, message: format!("expected `{magic} 1`") }),
        }
    }

    fn row(&mut self, width: usize, what: &str) -> Result<Vec<Scalar>> {
        let line = self.next(what)?;
        if line.tokens.len() != width {
            let at = line.tokens.get(width).copied().unwrap_or(*line.tokens.last().expect("nonempty"));
            return Err(at.error(format!("expected {width} entries, found {}", line.tokens.len())));
        }
        line.tokens.iter().map(scalar).collect()
    }

    fn rows(&mut self, count: usize, width: usize, what: &str) -> Result<Vec<Vec<Scalar>>> {
        (0..count).map(|_| self.row(width, what)).collect()
    }
}

fn scalar(token: &Token) -> Result<Scalar> {
    token.text.parse().map_err(|e| token.error(format!("{e}")))
}

/// Parses a vector literal: `(2, 5/2, -inf)`, `2 5/2 -inf` or `2,5/2,-inf`.
pub fn parse_vector(input: &str) -> Result<Vector> {
    let inner = input.trim();
    let inner = match inner.strip_prefix('(') {
        Some(rest) => rest
            .strip_suffix(')')
            .ok_or_else(|| ParseError { line: 1, column: input.len(), message: "missing `)`".into() })?,
        None => inner,
    };
    let offset = inner.as_ptr() as usize - input.as_ptr() as usize;
    let mut tokens = tokenize_vector(inner);
    for t in &mut tokens {
        t.column += input[..offset].chars().count();
    }
    if tokens.is_empty() {
        return Err(ParseError { line: 1, column: 1, message: "empty vector".into() });
    }
    tokens.iter().map(scalar).collect::<Result<Vec<_>>>().map(Vector::new)
}

fn tokenize_vector(s: &str) -> Vec<Token<'_>> {
    let mut tokens = Vec::new();
    let mut start = None;
    for (i, c) in s.char_indices().chain(std::iter::once((s.len(), ','))) {
        let sep = c.is_whitespace() || c == ',';
        match (sep, start) {
            (false, None) => start = Some(i),
            (true, Some(b)) => {
                tokens.push(Token { text: &s[b..i], line: 1, column: b + 1 });
                start = None;
            }
            _ => {}
        }
    }
    tokens
}

fn write_row(out: &mut String, row: &[Scalar]) {
    let entries: Vec<String> = row.iter().map(Scalar::to_string).collect();
    out.push_str(&entries.join(" "));
    out.push('\n');
}

/// Raw H-rep contents: `d`, then the rows of `A` and `B` at width `width`.
struct HRep {
    dim: usize,
    a: Vec<Vec<Scalar>>,
    b: Vec<Vec<Scalar>>,
}

fn parse_hrep_rows(input: &str, extra_columns: usize) -> Result<HRep> {
    let mut lines = Lines::new(input);
    lines.header("tropical-hrep")?;
    let dim = lines.count("d")?;
    if dim == 0 {
        return Err(ParseError { line: lines.lines[lines.pos - 1].number, column: 3, message: "d must be at least 1".into() });
    }
    let n = lines.count("n")?;
    let width = dim + extra_columns;
    lines.keyword("A")?;
    let a = lines.rows(n, width, "a row of A")?;
    lines.keyword("B")?;
    let b = lines.rows(n, width, "a row of B")?;
    lines.finish()?;
    Ok(HRep { dim, a, b })
}

pub fn parse_hrep(input: &str) -> Result<IneqSystem> {
    let h = parse_hrep_rows(input, 0)?;
    let rows = h.a.into_iter().zip(h.b).collect();
    Ok(IneqSystem::from_rows(h.dim, rows).expect("row widths checked"))
}

pub fn print_hrep(system: &IneqSystem) -> String {
    let mut out = String::new();
    writeln!(out, "tropical-hrep 1\nd {}\nn {}\nA", system.dim(), system.len()).unwrap();
    for k in 0..system.len() {
        write_row(&mut out, system.row(k).0);
    }
    out.push_str("B\n");
    for k in 0..system.len() {
        write_row(&mut out, system.row(k).1);
    }
    out
}

/// An affine system `A x ⊕ c ≤ B x ⊕ e` in the H-rep layout, each row
/// carrying its constant as an extra last entry.
pub fn parse_affine_hrep(input: &str) -> Result<AffineSystem> {
    let h = parse_hrep_rows(input, 1)?;
    let split = |rows: Vec<Vec<Scalar>>| {
        let mut consts = Vec::with_capacity(rows.len());
        let mut coeffs = Vec::with_capacity(rows.len());
        for mut row in rows {
            consts.push(row.pop().expect("width d + 1"));
            coeffs.push(row);
        }
        (Matrix::from_rows(h.dim, coeffs).expect("row widths checked"), Vector::new(consts))
    };
    let (a, c) = split(h.a);
    let (b, e) = split(h.b);
    Ok(AffineSystem::new(a, c, b, e).expect("shapes checked"))
}

pub fn print_affine_hrep(system: &AffineSystem) -> String {
    let mut out = String::new();
    let n = system.a.rows();
    writeln!(out, "tropical-hrep 1\nd {}\nn {}\nA", system.dim(), n).unwrap();
    let emit = |out: &mut String, m: &Matrix, consts: &Vector| {
        for k in 0..n {
            let mut row = m.row(k).to_vec();
            row.push(consts[k].clone());
            write_row(out, &row);
        }
    };
    emit(&mut out, &system.a, &system.c);
    out.push_str("B\n");
    emit(&mut out, &system.b, &system.e);
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VRep {
    /// Generators of a cone.
    Cone { dim: usize, rays: Vec<Vector> },
    /// Extreme points and rays of an affine polyhedron.
    Affine { dim: usize, points: Vec<Vector>, rays: Vec<Vector> },
}

pub fn parse_vrep(input: &str) -> Result<VRep> {
    let mut lines = Lines::new(input);
    lines.header("tropical-vrep")?;
    let dim = lines.count("d")?;
    let next_keyword = lines.lines.get(lines.pos).map(|l| l.tokens[0].text);
    let vrep = if next_keyword == Some("points") {
        let k = lines.count("points")?;
        let points = lines.rows(k, dim, "a point")?.into_iter().map(Vector::new).collect();
        let m = lines.count("rays")?;
        let rays = lines.rows(m, dim, "a ray")?.into_iter().map(Vector::new).collect();
        VRep::Affine { dim, points, rays }
    } else {
        let k = lines.count("count")?;
        let rays = lines.rows(k, dim, "a generator")?.into_iter().map(Vector::new).collect();
        VRep::Cone { dim, rays }
    };
    lines.finish()?;
    Ok(vrep)
}

pub fn print_vrep(vrep: &VRep) -> String {
    let mut out = String::from("tropical-vrep 1\n");
    match vrep {
        VRep::Cone { dim, rays } => {
            writeln!(out, "d {dim}\ncount {}", rays.len()).unwrap();
            for r in rays {
                write_row(&mut out, r.entries());
            }
        }
        VRep::Affine { dim, points, rays } => {
            writeln!(out, "d {dim}\npoints {}", points.len()).unwrap();
            for p in points {
                write_row(&mut out, p.entries());
            }
            writeln!(out, "rays {}", rays.len()).unwrap();
            for r in rays {
                write_row(&mut out, r.entries());
            }
        }
    }
    out
}

/// `nodes` takes either a node count (nodes are then named `1` … `N`) or
/// the list of node names; a lone number is always read as a count.
/// Symbolic names not declared there are added in order of first
/// appearance.
pub fn parse_hypergraph(input: &str) -> Result<LabeledHypergraph> {
    let mut lines = Lines::new(input);
    lines.header("hypergraph")?;
    let declared = lines.keyword("nodes")?;
    let numeric = match declared.as_slice() {
        [only] => only.text.parse::<usize>().ok(),
        _ => None,
    };
    let mut labels: Vec<String> = match numeric {
        Some(n) => (1..=n).map(|i| i.to_string()).collect(),
        None => {
            let mut labels: Vec<String> = Vec::new();
            for t in &declared {
                if t.text == "->" {
                    return Err(t.error("`->` is not a node name"));
                }
                if labels.iter().any(|l| l == t.text) {
                    return Err(t.error(format!("node `{}` declared twice", t.text)));
                }
                labels.push(t.text.to_string());
            }
            labels
        }
    };
    let mut edges: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    while lines.pos < lines.lines.len() {
        let line = lines.next("an edge")?;
        let Some(arrow) = line.tokens.iter().position(|t| t.text == "->") else {
            return Err(line.error("expected `<tail> -> <head>`"));
        };
        let (tail, head) = (&line.tokens[..arrow], &line.tokens[arrow + 1..]);
        if tail.is_empty() {
            return Err(line.tokens[arrow].error("empty tail"));
        }
        if head.is_empty() {
            return Err(line.tokens[arrow].error("empty head"));
        }
        let mut resolve = |tokens: &[Token]| -> Result<Vec<usize>> {
            tokens
                .iter()
                .map(|t| match labels.iter().position(|l| l == t.text) {
                    _ if t.text == "->" => Err(t.error("more than one `->`")),
                    Some(i) => Ok(i),
                    None if numeric.is_some() => Err(t.error(format!("unknown node `{}`", t.text))),
                    None => {
                        labels.push(t.text.to_string());
                        Ok(labels.len() - 1)
                    }
                })
                .collect()
        };
        let tail = resolve(tail)?;
        let head = resolve(head)?;
        edges.push((tail, head));
    }
    let graph = Hypergraph::from_edges(labels.len(), edges).expect("nodes resolved");
    Ok(LabeledHypergraph { graph, labels })
}

pub fn print_hypergraph(h: &LabeledHypergraph) -> String {
    let mut out = String::from("hypergraph 1\n");
    let numeric = h.labels.iter().enumerate().all(|(i, l)| *l == (i + 1).to_string());
    if numeric {
        writeln!(out, "nodes {}", h.labels.len()).unwrap();
    } else {
        writeln!(out, "nodes {}", h.labels.join(" ")).unwrap();
    }
    for e in h.graph.edges() {
        writeln!(out, "{} -> {}", h.names(e.tail()), h.names(e.head())).unwrap();
    }
    out
}
