//! Encoding files.
//!
//! ```text
//! format shadow-encoding 1
//! vertex 0 kind=B
//! vertex 1 kind=P:3
//! vertex 2 kind=Y12
//! edge 0 1
//! edge 1 2 mark=double
//! edge 1 2 mark=single
//! beta 0 1
//! ```
//!
//! Vertices are listed with ids `0, 1, ...` in order. `mark=` names the
//! boundary circle used at the `Y12` end of an edge; when both ends are
//! `Y12` it takes two values, `mark=<at a>,<at b>`. `beta <i> <0|1>` sets
//! the value on basis cycle `i`; unlisted cycles get 0. The format line may
//! be omitted.

use super::{expect_header, number, Lines};
use crate::encoding::{EncodingEdge, EncodingGraph, Mark, PieceKind};
use crate::{Error, Result};

pub const ENCODING_FORMAT: (&str, &str) = ("shadow-encoding", "1");

pub fn render_encoding(g: &EncodingGraph) -> String {
    let mut out = format!("format {} {}\n", ENCODING_FORMAT.0, ENCODING_FORMAT.1);
    for (v, k) in g.kinds().iter().enumerate() {
        out.push_str(&format!("vertex {v} kind={k}\n"));
    }
    for e in g.edges() {
        out.push_str(&format!("edge {} {}", e.ends[0], e.ends[1]));
        match e.marks {
            [Some(a), Some(b)] => out.push_str(&format!(" mark={a},{b}")),
            [Some(m), None] | [None, Some(m)] => out.push_str(&format!(" mark={m}")),
            [None, None] => {}
        }
        out.push('\n');
    }
    for (i, b) in g.beta().iter().enumerate() {
        out.push_str(&format!("beta {i} {}\n", u8::from(*b)));
    }
    out
}

pub fn parse_encoding(text: &str) -> Result<EncodingGraph> {
    let mut lines = Lines::loose(text);
    let has_header = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| l.starts_with("format "));
    if has_header {
        expect_header(&mut lines, ENCODING_FORMAT.0, ENCODING_FORMAT.1)?;
    }
    let mut kinds = Vec::new();
    // edges with the raw mark list and the line they came from
    let mut raw_edges: Vec<(usize, usize, usize, Vec<Mark>)> = Vec::new();
    let mut beta: Vec<(usize, usize, bool)> = Vec::new();
    while let Some((no, line)) = lines.next_line() {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[..] {
            ["vertex", id, kind] => {
                let id: usize = number(no, id, "vertex id")?;
                if id != kinds.len() {
                    return Err(Error::parse(no, format!("expected vertex {}, got {id}", kinds.len())));
                }
                let kind = kind
                    .strip_prefix("kind=")
                    .ok_or_else(|| Error::parse(no, "expected `kind=`"))?;
                kinds.push(kind.parse::<PieceKind>().map_err(|e| Error::parse(no, e.to_string()))?);
            }
            ["edge", a, b, ref rest @ ..] => {
                let marks = match rest {
                    [] => Vec::new(),
                    [m] => m
                        .strip_prefix("mark=")
                        .ok_or_else(|| Error::parse(no, "expected `mark=`"))?
                        .split(',')
                        .map(|x| x.parse::<Mark>().map_err(|e| Error::parse(no, e.to_string())))
                        .collect::<Result<_>>()?,
                    _ => return Err(Error::parse(no, "too many fields on edge line")),
                };
                raw_edges.push((no, number(no, a, "vertex id")?, number(no, b, "vertex id")?, marks));
            }
            ["beta", i, v] => {
                let value = match v {
                    "0" => false,
                    "1" => true,
                    _ => return Err(Error::parse(no, format!("beta value must be 0 or 1, got `{v}`"))),
                };
                beta.push((no, number(no, i, "cycle index")?, value));
            }
            _ => return Err(Error::parse(no, format!("unknown line `{line}`"))),
        }
    }
    let mut edges = Vec::with_capacity(raw_edges.len());
    for (no, a, b, marks) in raw_edges {
        let kind = |v: usize| -> Result<PieceKind> {
            kinds
                .get(v)
                .copied()
                .ok_or_else(|| Error::parse(no, format!("edge refers to missing vertex {v}")))
        };
        let (ya, yb) = (kind(a)? == PieceKind::Y12, kind(b)? == PieceKind::Y12);
        let pair = match (ya, yb, &marks[..]) {
            (false, false, []) => [None, None],
            (true, false, [m]) => [Some(*m), None],
            (false, true, [m]) => [None, Some(*m)],
            (true, true, [ma, mb]) => [Some(*ma), Some(*mb)],
            _ => {
                return Err(Error::parse(
                    no,
                    "each Y12 end of an edge needs exactly one mark and other ends none",
                ))
            }
        };
        edges.push(EncodingEdge::marked(a, b, pair[0], pair[1]));
    }
    let skeleton = EncodingGraph::untwisted(kinds, edges).map_err(|e| Error::parse(lines.position(), e.to_string()))?;
    let mut values = vec![false; skeleton.cycle_rank()];
    for (no, i, v) in beta {
        let slot = values.get_mut(i).ok_or_else(|| {
            Error::parse(
                no,
                format!("cycle index {i} outside a basis of size {}", skeleton.cycle_rank()),
            )
        })?;
        *slot = v;
    }
    skeleton.with_beta(values)
}
