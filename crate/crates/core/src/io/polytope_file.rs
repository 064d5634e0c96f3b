//! Polytope input.
//!
//! Text form: an optional `ambient_dim N` header followed by one vertex per
//! line, coordinates separated by whitespace, each an integer or `p/q`.
//! `#` starts a comment.
//!
//! ```text
//! # half-open corner of the plane
//! ambient_dim 2
//! 0 0
//! 1/2 0
//! 0 1/3
//! ```
//!
//! JSON form: `{"ambient_dim": 2, "vertices": [["0", "0"], ["1/2", 0]]}`.
//! Coordinates are strings or integers, never floats.

use serde::Deserialize;

use super::json_error;
use crate::arith::{parse_rational, Rational, RationalVector};
use crate::error::{Error, Result};
use crate::geom::Polytope;

/// Dispatches on the first non-blank, non-comment character: `{` means JSON.
pub fn parse_polytope(src: &str) -> Result<Polytope> {
    let first = src
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    match first {
        Some(l) if l.starts_with('{') => parse_polytope_json(src),
        _ => parse_polytope_text(src),
    }
}

pub fn parse_polytope_text(src: &str) -> Result<Polytope> {
    let mut dim: Option<usize> = None;
    let mut vertices: Vec<RationalVector> = Vec::new();
    for (idx, raw) in src.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens = tokens_with_columns(content);
        let Some(&(col, head)) = tokens.first() else {
            continue;
        };
        if head == "ambient_dim" {
            if dim.is_some() || !vertices.is_empty() {
                return Err(Error::parse(
                    line,
                    col,
                    "`ambient_dim` must come first and only once",
                ));
            }
            let [_, (c, n)] = tokens[..] else {
                return Err(Error::parse(line, col, "expected `ambient_dim N`"));
            };
            let n: usize = n
                .parse()
                .map_err(|_| Error::parse(line, c, format!("`{n}` is not a dimension")))?;
            dim = Some(n);
            continue;
        }
        let expected = *dim.get_or_insert(tokens.len());
        if tokens.len() != expected {
            return Err(Error::parse(
                line,
                col,
                format!(
                    "vertex has {} coordinates, expected {expected}",
                    tokens.len()
                ),
            ));
        }
        let mut v = Vec::with_capacity(expected);
        for &(c, tok) in &tokens {
            v.push(coordinate(tok).map_err(|m| Error::parse(line, c, m))?);
        }
        vertices.push(v);
    }
    let dim = dim.ok_or(Error::EmptyPolytope)?;
    Polytope::from_points(dim, vertices)
}

fn tokens_with_columns(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in s.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(b)) => {
                out.push((s[..b].chars().count() + 1, &s[b..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(b) = start {
        out.push((s[..b].chars().count() + 1, &s[b..]));
    }
    out
}

fn coordinate(tok: &str) -> std::result::Result<Rational, String> {
    parse_rational(tok).map_err(|e| match e {
        Error::InvalidArgument(m) => format!("bad coordinate {m}"),
        other => other.to_string(),
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PolytopeDoc {
    ambient_dim: usize,
    vertices: Vec<Vec<Coordinate>>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Coordinate {
    Integer(i64),
    Text(String),
}

pub fn parse_polytope_json(src: &str) -> Result<Polytope> {
    let doc: PolytopeDoc = serde_json::from_str(src).map_err(json_error)?;
    let mut vertices = Vec::with_capacity(doc.vertices.len());
    for (i, row) in doc.vertices.iter().enumerate() {
        if row.len() != doc.ambient_dim {
            return Err(Error::InvalidArgument(format!(
                "vertex {i} has {} coordinates, expected {}",
                row.len(),
                doc.ambient_dim
            )));
        }
        let v =
            row.iter()
                .map(|c| match c {
                    Coordinate::Integer(n) => Ok(Rational::from_integer((*n).into())),
                    Coordinate::Text(s) => coordinate(s)
                        .map_err(|m| Error::InvalidArgument(format!("vertex {i}: {m}"))),
                })
                .collect::<Result<Vec<_>>>()?;
        vertices.push(v);
    }
    Polytope::from_points(doc.ambient_dim, vertices)
}

/// Text form of the vertex list, readable by [`parse_polytope_text`].
pub fn render_polytope_text(p: &Polytope) -> String {
    let mut out = format!("ambient_dim {}\n", p.ambient_dim());
    for v in p.vertices() {
        let row: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
