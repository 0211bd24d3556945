//! Model files.
//!
//! ```text
//! format shadow-model 1
//! vertex-piece vertices=1 graph=0:0-0:1,0:2-0:3 glue=012,012
//! circle-piece transposition
//! region genus=0 orientable=1 slots=v0.0
//! region genus=1 orientable=0 slots=c0.1r,free
//! ```
//!
//! Pieces and regions are numbered in file order. A slot is `v<p>.<c>` for
//! circuit `c` of vertex piece `p`, `c<p>.<c>` for a circle piece, with a
//! trailing `r` when the region runs against the circuit, or `free`; `-`
//! stands for no slots.

use super::catalog::parse_piece;
use super::{at_line, expect_header, field, number, Lines};
use crate::polyhedron::{CirclePiece, CircuitRef, PolyhedronModel, Slot, SurfaceRegion};
use crate::{Error, Result};

pub const MODEL_FORMAT: (&str, &str) = ("shadow-model", "1");

pub fn render_model(model: &PolyhedronModel) -> String {
    let mut out = format!("format {} {}\n", MODEL_FORMAT.0, MODEL_FORMAT.1);
    for p in model.vertex_pieces() {
        let graph: Vec<String> = p.graph().edges().iter().map(|[a, b]| format!("{a}-{b}")).collect();
        let glue: Vec<String> = p.gluings().iter().map(ToString::to_string).collect();
        out.push_str(&format!(
            "vertex-piece vertices={} graph={} glue={}\n",
            p.vertex_count(),
            graph.join(","),
            glue.join(",")
        ));
    }
    for c in model.circle_pieces() {
        out.push_str(&format!("circle-piece {}\n", c.monodromy));
    }
    for r in model.regions() {
        let slots: Vec<String> = r.slots.iter().map(render_slot).collect();
        out.push_str(&format!(
            "region genus={} orientable={} slots={}\n",
            r.genus,
            u8::from(r.orientable),
            if slots.is_empty() {
                "-".to_string()
            } else {
                slots.join(",")
            }
        ));
    }
    out
}

fn render_slot(s: &Slot) -> String {
    match *s {
        Slot::Free => "free".into(),
        Slot::Attached { circuit, reversed } => {
            let (tag, piece, c) = match circuit {
                CircuitRef::Vertex { piece, circuit } => ('v', piece, circuit),
                CircuitRef::Circle { piece, circuit } => ('c', piece, circuit),
            };
            format!("{tag}{piece}.{c}{}", if reversed { "r" } else { "" })
        }
    }
}

fn parse_slot(no: usize, s: &str) -> Result<Slot> {
    if s == "free" {
        return Ok(Slot::Free);
    }
    let (body, reversed) = match s.strip_suffix('r') {
        Some(b) => (b, true),
        None => (s, false),
    };
    let bad = || Error::parse(no, format!("invalid slot `{s}`"));
    let mut chars = body.chars();
    let tag = chars.next().ok_or_else(bad)?;
    let (p, c) = chars.as_str().split_once('.').ok_or_else(bad)?;
    let (piece, circuit) = (number(no, p, "piece index")?, number(no, c, "circuit index")?);
    let circuit = match tag {
        'v' => CircuitRef::Vertex { piece, circuit },
        'c' => CircuitRef::Circle { piece, circuit },
        _ => return Err(bad()),
    };
    Ok(Slot::Attached { circuit, reversed })
}

pub fn parse_model(text: &str) -> Result<PolyhedronModel> {
    let mut lines = Lines::loose(text);
    expect_header(&mut lines, MODEL_FORMAT.0, MODEL_FORMAT.1)?;
    let mut vertex_pieces = Vec::new();
    let mut circle_pieces = Vec::new();
    let mut regions = Vec::new();
    let mut last = 1;
    while let Some((no, line)) = lines.next_line() {
        last = no;
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            Some("vertex-piece") => {
                if !circle_pieces.is_empty() || !regions.is_empty() {
                    return Err(Error::parse(no, "vertex pieces must come first"));
                }
                let n = number(no, field(no, tokens.next(), "vertices")?, "vertex count")?;
                let graph = field(no, tokens.next(), "graph")?;
                let glue = field(no, tokens.next(), "glue")?;
                vertex_pieces.push(parse_piece(no, graph, glue, n)?);
            }
            Some("circle-piece") => {
                if !regions.is_empty() {
                    return Err(Error::parse(no, "circle pieces must precede regions"));
                }
                let kind = tokens.next().ok_or_else(|| Error::parse(no, "missing monodromy"))?;
                circle_pieces.push(CirclePiece {
                    monodromy: kind.parse().map_err(at_line(no))?,
                });
            }
            Some("region") => {
                let genus = number(no, field(no, tokens.next(), "genus")?, "genus")?;
                let orientable = match field(no, tokens.next(), "orientable")? {
                    "1" => true,
                    "0" => false,
                    other => return Err(Error::parse(no, format!("invalid orientable flag `{other}`"))),
                };
                let slots = match field(no, tokens.next(), "slots")? {
                    "-" => Vec::new(),
                    s => s.split(',').map(|x| parse_slot(no, x)).collect::<Result<_>>()?,
                };
                regions.push(SurfaceRegion {
                    genus,
                    orientable,
                    slots,
                });
            }
            _ => return Err(Error::parse(no, format!("unknown line `{line}`"))),
        }
        if tokens.next().is_some() {
            return Err(Error::parse(no, "unexpected trailing field"));
        }
    }
    PolyhedronModel::new(vertex_pieces, circle_pieces, regions).map_err(at_line(last))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedron::{MonodromyClass, VertexPiece};

    #[test]
    fn round_trip() {
        let piece = VertexPiece::from_parts(1, &[((0, 0), (0, 1)), ((0, 2), (0, 3))], &[[0, 1, 2], [0, 2, 1]]).unwrap();
        let special = PolyhedronModel::special(piece);
        let mixed = PolyhedronModel::new(
            vec![],
            vec![CirclePiece {
                monodromy: MonodromyClass::Transposition,
            }],
            vec![
                SurfaceRegion::disk(Slot::attached(CircuitRef::Circle { piece: 0, circuit: 0 })),
                SurfaceRegion {
                    genus: 1,
                    orientable: false,
                    slots: vec![
                        Slot::Attached {
                            circuit: CircuitRef::Circle { piece: 0, circuit: 1 },
                            reversed: true,
                        },
                        Slot::Free,
                    ],
                },
                SurfaceRegion {
                    genus: 0,
                    orientable: true,
                    slots: vec![],
                },
            ],
        )
        .unwrap();
        for m in [special, mixed, PolyhedronModel::disk()] {
            let text = render_model(&m);
            assert_eq!(parse_model(&text).unwrap(), m);
        }
    }

    #[test]
    fn comments_and_errors() {
        let text = "# a disk\nformat shadow-model 1\n\nregion genus=0 orientable=1 slots=free\n";
        assert_eq!(parse_model(text).unwrap(), PolyhedronModel::disk());
        let bad = "format shadow-model 1\nregion genus=0 orientable=1 slots=c0.0\n";
        assert!(matches!(parse_model(bad), Err(Error::Parse { line: 2, .. })));
        let bad = "format shadow-model 1\nregion genus=x orientable=1 slots=free\n";
        assert!(matches!(parse_model(bad), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(
            parse_model("format shadow-model 9\n"),
            Err(Error::Version { .. })
        ));
    }
}
