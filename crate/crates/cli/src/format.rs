//! Text and JSON encodings of tableaux, matrices and plane functions.
//!
//! Text blocks are separated by blank lines:
//!
//! ```text
//! lambda: 3 2
//! mu: 1
//! . 1 2
//! 2 3
//!
//! matrix: 2
//! 1 0
//! 0 1
//! ```
//!
//! A `range: k` line may follow the shape lines when the range exceeds the largest entry.
//! Plane functions use `plane: λ₁ λ₂ …` followed by one line of values per row.

use std::fmt;

use serde::{Deserialize, Serialize};
use ytab::bijections::PlaneFunction;
use ytab::circuits::Value;
use ytab::{IntMatrix, Partition, SkewShape, Tableau};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// One line of input with its 1-based number.
#[derive(Clone, Copy)]
struct Line<'a> {
    no: usize,
    text: &'a str,
}

impl<'a> Line<'a> {
    fn err(&self, column: usize, message: impl Into<String>) -> ParseError {
        ParseError { line: self.no, column, message: message.into() }
    }

    /// Whitespace-separated tokens with their 1-based columns.
    fn tokens(&self) -> Vec<(usize, &'a str)> {
        let mut out = Vec::new();
        let mut start = None;
        for (i, c) in self.text.char_indices().chain(std::iter::once((self.text.len(), ' '))) {
            match (c.is_whitespace(), start) {
                (false, None) => start = Some(i),
                (true, Some(s)) => {
                    out.push((self.text[..s].chars().count() + 1, &self.text[s..i]));
                    start = None;
                }
                _ => {}
            }
        }
        out
    }

    /// The integers after `key:`, or `None` if the line has another key.
    fn header(&self, key: &str) -> Option<Result<Vec<i64>, ParseError>> {
        let rest = self.text.trim_start().strip_prefix(key)?.strip_prefix(':')?;
        let offset = self.text.len() - rest.len();
        let sub = Line { no: self.no, text: rest };
        Some(
            sub.tokens()
                .into_iter()
                .map(|(col, tok)| tok.parse::<i64>().map_err(|_| self.err(offset + col, format!("expected an integer, found `{tok}`"))))
                .collect(),
        )
    }

    fn integers(&self) -> Result<Vec<(usize, i64)>, ParseError> {
        self.tokens()
            .into_iter()
            .map(|(col, tok)| {
                tok.parse::<i64>().map(|v| (col, v)).map_err(|_| self.err(col, format!("expected an integer, found `{tok}`")))
            })
            .collect()
    }
}

fn partition(line: &Line, parts: Vec<i64>) -> Result<Partition, ParseError> {
    Partition::new(parts).map_err(|e| line.err(1, e.to_string()))
}

/// Parses every block of a text document.
pub fn parse_text(input: &str) -> Result<Vec<Value>, ParseError> {
    let lines: Vec<Line> = input
        .lines()
        .enumerate()
        .map(|(i, text)| Line { no: i + 1, text })
        .filter(|l| !l.text.trim_start().starts_with('#'))
        .collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < lines.len() {
        if lines[i].text.trim().is_empty() {
            i += 1;
            continue;
        }
        let end = (i..lines.len()).find(|&j| lines[j].text.trim().is_empty()).unwrap_or(lines.len());
        out.push(parse_block(&lines[i..end])?);
        i = end;
    }
    Ok(out)
}

/// Parses a document that must hold exactly one block.
pub fn parse_one_text(input: &str) -> Result<Value, ParseError> {
    let mut vs = parse_text(input)?;
    match vs.len() {
        1 => Ok(vs.remove(0)),
        n => Err(ParseError { line: 1, column: 1, message: format!("expected one block, found {n}") }),
    }
}

fn parse_block(lines: &[Line]) -> Result<Value, ParseError> {
    let head = lines[0];
    if let Some(parts) = head.header("matrix") {
        return parse_matrix(head, parts?, &lines[1..]).map(Value::Matrix);
    }
    if let Some(parts) = head.header("plane") {
        return parse_plane(head, parts?, &lines[1..]).map(Value::Plane);
    }
    if let Some(parts) = head.header("partition") {
        return partition(&head, parts?).map(Value::Partition);
    }
    if let Some(parts) = head.header("lambda") {
        return parse_tableau(head, parts?, &lines[1..]).map(Value::Tableau);
    }
    Err(head.err(1, "expected `lambda:`, `matrix:` or `plane:`"))
}

fn parse_matrix(head: Line, parts: Vec<i64>, rows: &[Line]) -> Result<IntMatrix, ParseError> {
    let k = match parts[..] {
        [k] if k >= 0 => k as usize,
        _ => return Err(head.err(1, "`matrix:` takes one nonnegative size")),
    };
    if rows.len() != k {
        let at = rows.get(k).copied().unwrap_or(head);
        return Err(at.err(1, format!("expected {k} matrix rows, found {}", rows.len())));
    }
    let mut data = Vec::with_capacity(k);
    for line in rows {
        let row = line.integers()?;
        if row.len() != k {
            return Err(line.err(row.get(k).map_or(line.text.len() + 1, |c| c.0), format!("expected {k} entries")));
        }
        if let Some(&(col, _)) = row.iter().find(|(_, v)| *v < 0) {
            return Err(line.err(col, "negative entry"));
        }
        data.push(row.into_iter().map(|(_, v)| v).collect());
    }
    IntMatrix::new(data).map_err(|e| head.err(1, e.to_string()))
}

fn parse_plane(head: Line, parts: Vec<i64>, rows: &[Line]) -> Result<PlaneFunction, ParseError> {
    let shape = partition(&head, parts)?;
    if rows.len() != shape.len() {
        return Err(head.err(1, format!("expected {} rows, found {}", shape.len(), rows.len())));
    }
    let mut values = Vec::with_capacity(rows.len());
    for (i, line) in rows.iter().enumerate() {
        let row = line.integers()?;
        if row.len() as i64 != shape.part(i) {
            return Err(line.err(1, format!("row {} needs {} values, found {}", i + 1, shape.part(i), row.len())));
        }
        values.push(row.into_iter().map(|(_, v)| v).collect());
    }
    PlaneFunction::new(shape, values).map_err(|e| head.err(1, e.to_string()))
}

fn parse_tableau(head: Line, parts: Vec<i64>, rest: &[Line]) -> Result<Tableau, ParseError> {
    let lambda = partition(&head, parts)?;
    let mut rest = rest;
    let mut mu = Partition::empty();
    let mut range = None;
    if let Some(line) = rest.first() {
        if let Some(parts) = line.header("mu") {
            mu = partition(line, parts?)?;
            rest = &rest[1..];
        }
    }
    if let Some(line) = rest.first() {
        if let Some(parts) = line.header("range") {
            range = match parts?[..] {
                [k] if k >= 0 => Some(k as usize),
                _ => return Err(line.err(1, "`range:` takes one nonnegative integer")),
            };
            rest = &rest[1..];
        }
    }
    let shape = SkewShape::new(lambda.clone(), mu.clone()).map_err(|e| head.err(1, e.to_string()))?;
    if rest.len() != lambda.len() {
        let at = rest.get(lambda.len()).copied().unwrap_or(head);
        return Err(at.err(1, format!("expected {} rows, found {}", lambda.len(), rest.len())));
    }
    let mut rows = Vec::with_capacity(rest.len());
    for (i, line) in rest.iter().enumerate() {
        let toks = line.tokens();
        if toks.len() as i64 != lambda.part(i) {
            return Err(line.err(1, format!("row {} needs {} cells, found {}", i + 1, lambda.part(i), toks.len())));
        }
        let skip = mu.part(i) as usize;
        let mut row = Vec::with_capacity(toks.len() - skip);
        for (c, (col, tok)) in toks.into_iter().enumerate() {
            match (c < skip, tok) {
                (true, ".") => {}
                (true, _) => return Err(line.err(col, format!("expected `.` for an inner cell, found `{tok}`"))),
                (false, ".") => return Err(line.err(col, "`.` outside the inner shape")),
                (false, _) => row.push(tok.parse::<i64>().map_err(|_| line.err(col, format!("expected an entry, found `{tok}`")))?),
            }
        }
        rows.push(row);
    }
    let top = rows.iter().flatten().copied().max().unwrap_or(0).max(0) as usize;
    Tableau::from_rows_with_range(shape, &rows, range.unwrap_or(top).max(top)).map_err(|e| {
        let at = match e {
            ytab::Error::RowOrderViolation { row, .. } | ytab::Error::ColumnOrderViolation { row, .. } => rest[row - 1],
            _ => head,
        };
        at.err(1, e.to_string())
    })
}

fn join(parts: &[i64]) -> String {
    parts.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
}

fn header(key: &str, parts: &[i64]) -> String {
    if parts.is_empty() {
        format!("{key}:")
    } else {
        format!("{key}: {}", join(parts))
    }
}

pub fn tableau_text(t: &Tableau) -> String {
    let mut lines = vec![header("lambda", t.outer().parts())];
    if !t.is_normal() {
        lines.push(header("mu", t.inner().parts()));
    }
    if t.range() as i64 > t.max_entry() {
        lines.push(format!("range: {}", t.range()));
    }
    for (i, row) in t.value_rows().iter().enumerate() {
        let dots = (0..t.inner().part(i)).map(|_| ".".to_string());
        lines.push(dots.chain(row.iter().map(i64::to_string)).collect::<Vec<_>>().join(" "));
    }
    lines.join("\n") + "\n"
}

pub fn matrix_text(m: &IntMatrix) -> String {
    let mut s = format!("matrix: {}\n", m.k());
    for row in m.rows() {
        s.push_str(&join(&row));
        s.push('\n');
    }
    s
}

pub fn plane_text(f: &PlaneFunction) -> String {
    let mut s = header("plane", f.shape.parts()) + "\n";
    for row in &f.values {
        s.push_str(&join(row));
        s.push('\n');
    }
    s
}

/// Text blocks of a value; tuples give one block per component.
pub fn emit_text(v: &Value) -> String {
    match v {
        Value::Tableau(t) => tableau_text(t),
        Value::Matrix(m) => matrix_text(m),
        Value::Plane(f) => plane_text(f),
        Value::Partition(p) => header("partition", p.parts()) + "\n",
        Value::Tuple(xs) => xs.iter().map(emit_text).collect::<Vec<_>>().join("\n"),
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
enum JsonValue {
    Tableau {
        lambda: Vec<i64>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        mu: Vec<i64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        range: Option<usize>,
        rows: Vec<Vec<i64>>,
    },
    Matrix {
        matrix: Vec<Vec<i64>>,
    },
    Plane {
        plane: Vec<i64>,
        values: Vec<Vec<i64>>,
    },
    Partition {
        partition: Vec<i64>,
    },
}

fn to_json_value(v: &Value) -> Vec<JsonValue> {
    match v {
        Value::Tableau(t) => vec![JsonValue::Tableau {
            lambda: t.outer().parts().to_vec(),
            mu: t.inner().parts().to_vec(),
            range: (t.range() as i64 > t.max_entry()).then_some(t.range()),
            rows: t.value_rows(),
        }],
        Value::Matrix(m) => vec![JsonValue::Matrix { matrix: m.rows() }],
        Value::Plane(f) => vec![JsonValue::Plane { plane: f.shape.parts().to_vec(), values: f.values.clone() }],
        Value::Partition(p) => vec![JsonValue::Partition { partition: p.parts().to_vec() }],
        Value::Tuple(xs) => xs.iter().flat_map(to_json_value).collect(),
    }
}

/// One JSON object per line; tuples give one line per component.
pub fn emit_json(v: &Value) -> String {
    to_json_value(v)
        .iter()
        .map(|j| serde_json::to_string(j).expect("plain data serializes") + "\n")
        .collect()
}

fn from_json_value(j: JsonValue) -> Result<Value, String> {
    let err = |e: ytab::Error| e.to_string();
    match j {
        JsonValue::Tableau { lambda, mu, range, rows } => {
            let shape = SkewShape::new(Partition::new(lambda).map_err(err)?, Partition::new(mu).map_err(err)?).map_err(err)?;
            let top = rows.iter().flatten().copied().max().unwrap_or(0).max(0) as usize;
            Tableau::from_rows_with_range(shape, &rows, range.unwrap_or(top).max(top)).map(Value::Tableau).map_err(err)
        }
        JsonValue::Matrix { matrix } => IntMatrix::new(matrix).map(Value::Matrix).map_err(err),
        JsonValue::Plane { plane, values } => {
            PlaneFunction::new(Partition::new(plane).map_err(err)?, values).map(Value::Plane).map_err(err)
        }
        JsonValue::Partition { partition } => Partition::new(partition).map(Value::Partition).map_err(err),
    }
}

/// Parses a stream of JSON objects, or arrays of them.
pub fn parse_json(input: &str) -> Result<Vec<Value>, ParseError> {
    let mut out = Vec::new();
    let mut stream = serde_json::Deserializer::from_str(input).into_iter::<serde_json::Value>();
    loop {
        let start = stream.byte_offset();
        let Some(next) = stream.next() else { break };
        let doc = next.map_err(|e| ParseError { line: e.line(), column: e.column(), message: e.to_string() })?;
        let (line, column) = position(input, start);
        let items = match doc {
            serde_json::Value::Array(xs) => xs,
            x => vec![x],
        };
        for item in items {
            let at = |message: String| ParseError { line, column, message };
            let j: JsonValue = serde_json::from_value(item).map_err(|e| at(e.to_string()))?;
            out.push(from_json_value(j).map_err(at)?);
        }
    }
    Ok(out)
}

/// 1-based line and column of the first non-blank character at or after `offset`.
fn position(input: &str, offset: usize) -> (usize, usize) {
    let skip = input[offset..].len() - input[offset..].trim_start().len();
    let before = &input[..offset + skip];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

/// Parses either format, chosen by the first non-blank character.
pub fn parse_any(input: &str) -> Result<Vec<Value>, ParseError> {
    match input.trim_start().chars().next() {
        Some('{') | Some('[') => parse_json(input),
        _ => parse_text(input),
    }
}

pub fn emit(v: &Value, format: Format) -> String {
    match format {
        Format::Text => emit_text(v),
        Format::Json => emit_json(v),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tableau(s: &str) -> Tableau {
        match parse_one_text(s).unwrap() {
            Value::Tableau(t) => t,
            v => panic!("not a tableau: {v}"),
        }
    }

    #[test]
    fn parses_a_skew_tableau() {
        let t = tableau("lambda: 3 2\nmu: 1\n. 1 2\n2 3\n");
        assert_eq!(t.to_string(), "[[.,1,2],[2,3]]");
        assert_eq!(tableau_text(&t), "lambda: 3 2\nmu: 1\n. 1 2\n2 3\n");
    }

    #[test]
    fn keeps_a_larger_range() {
        let t = tableau("lambda: 1\nrange: 4\n2\n");
        assert_eq!(t.range(), 4);
        assert_eq!(tableau(&tableau_text(&t)).range(), 4);
        let back = parse_json(&emit_json(&Value::Tableau(t.clone()))).unwrap();
        assert_eq!(back[0].as_tableau().unwrap().range(), 4);
    }

    #[test]
    fn errors_point_at_the_cell() {
        let e = parse_text("lambda: 2 1\n1 x\n2\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
        let e = parse_text("lambda: 2 1\nmu: 1\n1 2\n2\n").unwrap_err();
        assert_eq!((e.line, e.column), (3, 1));
        let e = parse_text("lambda: 2 1\n1 2\n1\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_text("matrix: 2\n1 0\n0\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_text("shape: 2\n").unwrap_err();
        assert_eq!((e.line, e.column), (1, 1));
    }

    #[test]
    fn json_errors_carry_positions() {
        let e = parse_json("{\"lambda\": [2],\n \"rows\": [[1, ]]}").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_json("{\"matrix\": [[1]]}\n{\"lambda\": [1], \"rows\": [[0]]}").unwrap_err();
        assert_eq!((e.line, e.column), (2, 1));
    }

    #[test]
    fn blocks_and_tuples() {
        let doc = "matrix: 2\n1 0\n0 1\n\n# second\nplane: 2 1\n0 1\n2\n";
        let vs = parse_text(doc).unwrap();
        assert_eq!(vs.len(), 2);
        let pair = Value::Tuple(vs.clone());
        assert_eq!(parse_text(&emit_text(&pair)).unwrap(), vs);
        assert_eq!(parse_json(&emit_json(&pair)).unwrap(), vs);
        assert_eq!(parse_any("[{\"matrix\": [[3]]}]").unwrap().len(), 1);
    }

    #[test]
    fn empty_shapes() {
        let t = tableau("lambda:\n");
        assert!(t.is_empty());
        let e = tableau("lambda: 2 1\nmu: 2 1\n. .\n.\n");
        assert_eq!(tableau(&tableau_text(&e)), e);
    }
}
