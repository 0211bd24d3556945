//! Catalog files.
//!
//! ```text
//! format shadow-catalog 1
//! vertices 1
//! histogram 2 5 3 1
//! records 11
//! <key hex> graph=0:0-0:1,0:2-0:3 glue=012,021 regions=1 betti=1,0,0 tors1=- tors2=- flags=- cancel=-
//! ```
//!
//! `flags` is `acyclic` or `-`; `cancel` is `1`, `0` or `-` when not computed.
//! The graph and gluing fields repeat what the key encodes, for readers.

use std::path::Path;

use super::{at_line, expect_header, field, list, number, read_file, render_list, Lines};
use crate::census::{CanonicalKey, Catalog, CatalogRecord};
use crate::polyhedron::{HomologyProfile, LegRef, SingularGraph, VertexPiece, WingGluing};
use crate::{Error, Result};

pub const CATALOG_FORMAT: (&str, &str) = ("shadow-catalog", "1");

pub fn render_catalog(catalog: &Catalog) -> String {
    let mut out = String::new();
    out.push_str(&format!("format {} {}\n", CATALOG_FORMAT.0, CATALOG_FORMAT.1));
    out.push_str(&format!("vertices {}\n", catalog.vertex_count));
    out.push_str("histogram");
    for h in &catalog.histogram {
        out.push_str(&format!(" {h}"));
    }
    out.push('\n');
    out.push_str(&format!("records {}\n", catalog.records.len()));
    for r in &catalog.records {
        out.push_str(&render_record(r));
        out.push('\n');
    }
    out
}

fn render_record(r: &CatalogRecord) -> String {
    let graph: Vec<String> = r
        .piece
        .graph()
        .edges()
        .iter()
        .map(|[a, b]| format!("{a}-{b}"))
        .collect();
    let glue: Vec<String> = r.piece.gluings().iter().map(ToString::to_string).collect();
    let h = &r.homology;
    format!(
        "{} graph={} glue={} regions={} betti={},{},{} tors1={} tors2={} flags={} cancel={}",
        r.key.to_hex(),
        graph.join(","),
        glue.join(","),
        r.region_count,
        h.betti[0],
        h.betti[1],
        h.betti[2],
        render_list(&h.torsion_1),
        render_list(&h.torsion_2),
        if r.acyclic { "acyclic" } else { "-" },
        match r.canceling {
            Some(true) => "1",
            Some(false) => "0",
            None => "-",
        }
    )
}

pub fn parse_catalog(text: &str) -> Result<Catalog> {
    let mut lines = Lines::strict(text);
    expect_header(&mut lines, CATALOG_FORMAT.0, CATALOG_FORMAT.1)?;
    let (no, line) = lines.expect("vertices line")?;
    let vertex_count: usize = number(no, line.strip_prefix("vertices ").unwrap_or("?"), "vertex count")?;
    let (no, line) = lines.expect("histogram line")?;
    let hist = line
        .strip_prefix("histogram")
        .ok_or_else(|| Error::parse(no, "expected histogram line"))?;
    let histogram = hist
        .split_whitespace()
        .map(|x| number(no, x, "histogram entry"))
        .collect::<Result<Vec<usize>>>()?;
    let (no, line) = lines.expect("records line")?;
    let count: usize = number(no, line.strip_prefix("records ").unwrap_or("?"), "record count")?;
    let mut records = Vec::with_capacity(count);
    for _ in 0..count {
        let (no, line) = lines.expect("record line")?;
        let record = parse_record(no, line)?;
        if record.vertex_count != vertex_count {
            return Err(Error::parse(no, format!("record has {} vertices", record.vertex_count)));
        }
        records.push(record);
    }
    if let Some((no, _)) = lines.next_line() {
        return Err(Error::parse(no, "trailing content after the last record"));
    }
    let catalog = Catalog {
        vertex_count,
        histogram,
        records,
    };
    catalog.validate().map_err(at_line(lines.position()))?;
    Ok(catalog)
}

fn parse_record(no: usize, line: &str) -> Result<CatalogRecord> {
    let mut tokens = line.split(' ');
    let key = CanonicalKey::from_hex(tokens.next().unwrap_or("")).map_err(at_line(no))?;
    let piece = key.decode().map_err(at_line(no))?;
    let listed = parse_piece(
        no,
        field(no, tokens.next(), "graph")?,
        field(no, tokens.next(), "glue")?,
        key.vertex_count(),
    )?;
    if listed != piece {
        return Err(Error::parse(no, "graph and gluings do not match the key"));
    }
    let region_count: usize = number(no, field(no, tokens.next(), "regions")?, "region count")?;
    if region_count != piece.circuits().len() {
        return Err(Error::parse(
            no,
            format!("key has {} regions, not {region_count}", piece.circuits().len()),
        ));
    }
    let betti: Vec<usize> = list(no, field(no, tokens.next(), "betti")?, "Betti number")?;
    let betti: [usize; 3] = betti
        .try_into()
        .map_err(|_| Error::parse(no, "expected three Betti numbers"))?;
    let torsion_1 = list(no, field(no, tokens.next(), "tors1")?, "torsion coefficient")?;
    let torsion_2 = list(no, field(no, tokens.next(), "tors2")?, "torsion coefficient")?;
    let homology = HomologyProfile {
        betti,
        torsion_1,
        torsion_2,
    };
    let acyclic = match field(no, tokens.next(), "flags")? {
        "acyclic" => true,
        "-" => false,
        other => return Err(Error::parse(no, format!("unknown flags `{other}`"))),
    };
    if acyclic != homology.is_acyclic() {
        return Err(Error::parse(no, "acyclic flag disagrees with the homology"));
    }
    let canceling = match field(no, tokens.next(), "cancel")? {
        "1" => Some(true),
        "0" => Some(false),
        "-" => None,
        other => return Err(Error::parse(no, format!("unknown cancel flag `{other}`"))),
    };
    if tokens.next().is_some() {
        return Err(Error::parse(no, "unexpected field after cancel"));
    }
    Ok(CatalogRecord {
        vertex_count: key.vertex_count(),
        key,
        piece,
        region_count,
        homology,
        acyclic,
        canceling,
    })
}

/// Reads `0:0-0:1,...` and `012,...` into a piece.
pub(crate) fn parse_piece(no: usize, graph: &str, glue: &str, vertex_count: usize) -> Result<VertexPiece> {
    let leg = |s: &str| -> Result<LegRef> {
        let (v, l) = s
            .split_once(':')
            .ok_or_else(|| Error::parse(no, format!("invalid leg `{s}`")))?;
        Ok(LegRef::new(number(no, v, "vertex")?, number(no, l, "leg")?))
    };
    let edges = graph
        .split(',')
        .map(|e| {
            let (a, b) = e
                .split_once('-')
                .ok_or_else(|| Error::parse(no, format!("invalid edge `{e}`")))?;
            Ok([leg(a)?, leg(b)?])
        })
        .collect::<Result<Vec<_>>>()?;
    let gluings = glue
        .split(',')
        .map(|g| {
            let digits: Vec<u8> = g.bytes().map(|b| b.wrapping_sub(b'0')).collect();
            let arr: [u8; 3] = digits
                .try_into()
                .map_err(|_| Error::parse(no, format!("invalid gluing `{g}`")))?;
            WingGluing::new(arr).map_err(at_line(no))
        })
        .collect::<Result<Vec<_>>>()?;
    let graph = SingularGraph::new(vertex_count, edges).map_err(at_line(no))?;
    VertexPiece::new(graph, gluings).map_err(at_line(no))
}

pub fn write_catalog(catalog: &Catalog, path: &Path) -> Result<()> {
    std::fs::write(path, render_catalog(catalog))
        .map_err(|e| Error::precondition(format!("cannot write {}: {e}", path.display())))
}

pub fn read_catalog(path: &Path) -> Result<Catalog> {
    parse_catalog(&read_file(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::{enumerate_special, EnumerateOptions};

    fn one() -> Catalog {
        enumerate_special(1, &EnumerateOptions::default()).unwrap()
    }

    #[test]
    fn round_trip_is_byte_exact() {
        let mut c = one();
        c.records[0].canceling = Some(false);
        c.records[1].canceling = Some(true);
        let text = render_catalog(&c);
        let back = parse_catalog(&text).unwrap();
        assert_eq!(back, c);
        assert_eq!(render_catalog(&back), text);
        assert!(text.starts_with("format shadow-catalog 1\nvertices 1\nhistogram 2 5 3 1\nrecords 11\n"));
    }

    #[test]
    fn truncation_is_reported_at_its_line() {
        let text = render_catalog(&one());
        let cut: String = text.lines().take(7).map(|l| format!("{l}\n")).collect();
        assert_eq!(
            parse_catalog(&cut).unwrap_err(),
            Error::parse(8, "unexpected end of file, expected record line")
        );
        let partial = &text[..text.len() - 20];
        match parse_catalog(partial) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 15),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn version_mismatch_is_fatal() {
        let text = render_catalog(&one()).replacen("shadow-catalog 1", "shadow-catalog 2", 1);
        assert!(matches!(parse_catalog(&text), Err(Error::Version { .. })));
    }

    #[test]
    fn tampered_fields_are_rejected() {
        let text = render_catalog(&one());
        let bad = text.replacen("regions=1", "regions=2", 1);
        assert!(matches!(parse_catalog(&bad), Err(Error::Parse { line: 5, .. })));
        let bad = text.replacen("histogram 2 5 3 1", "histogram 2 5 3 2", 1);
        assert!(matches!(parse_catalog(&bad), Err(Error::Parse { .. })));
    }
}
