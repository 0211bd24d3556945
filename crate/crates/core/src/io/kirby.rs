//! Kirby data files.
//!
//! ```text
//! format kirby-data 1
//! C0 framing=3/2 tags=[K1] inc=[(2,1,1),(3,2,0)]
//! U2
//! U3
//! ```
//!
//! Each incidence is `(dotted circle, geometric count, signed count)`.

use std::collections::BTreeMap;

use super::{expect_header, number, Lines};
use crate::kirby::{Incidence, KirbyComponent, KirbyData};
use crate::{Error, Result};

pub const KIRBY_FORMAT: (&str, &str) = ("kirby-data", "1");

pub fn render_kirby(k: &KirbyData) -> String {
    let mut out = format!("format {} {}\n", KIRBY_FORMAT.0, KIRBY_FORMAT.1);
    for c in &k.components {
        let inc: Vec<String> = c
            .incidence
            .iter()
            .map(|(u, i)| format!("({u},{},{})", i.geometric, i.signed))
            .collect();
        out.push_str(&format!(
            "C{} framing={}/2 tags=[{}] inc=[{}]\n",
            c.id,
            c.doubled_framing,
            c.tags.join(","),
            inc.join(",")
        ));
    }
    for u in &k.dotted_circles {
        out.push_str(&format!("U{u}\n"));
    }
    out
}

pub fn parse_kirby(text: &str) -> Result<KirbyData> {
    let mut lines = Lines::strict(text);
    expect_header(&mut lines, KIRBY_FORMAT.0, KIRBY_FORMAT.1)?;
    let mut components = Vec::new();
    let mut dotted_circles = Vec::new();
    while let Some((no, line)) = lines.next_line() {
        if let Some(u) = line.strip_prefix('U') {
            dotted_circles.push(number(no, u, "dotted circle id")?);
            continue;
        }
        if !dotted_circles.is_empty() {
            return Err(Error::parse(no, "components must precede dotted circles"));
        }
        components.push(parse_component(no, line)?);
    }
    Ok(KirbyData {
        components,
        dotted_circles,
    })
}

fn parse_component(no: usize, line: &str) -> Result<KirbyComponent> {
    let bad = |what: &str| Error::parse(no, format!("malformed component line: {what}"));
    let rest = line.strip_prefix('C').ok_or_else(|| bad("expected `C<id>`"))?;
    let (id, rest) = rest.split_once(" framing=").ok_or_else(|| bad("framing"))?;
    let (framing, rest) = rest.split_once("/2 tags=[").ok_or_else(|| bad("tags"))?;
    let (tags, rest) = rest.split_once("] inc=[").ok_or_else(|| bad("incidence"))?;
    let inc = rest.strip_suffix(']').ok_or_else(|| bad("unterminated incidence"))?;
    let tags = if tags.is_empty() {
        Vec::new()
    } else {
        tags.split(',').map(str::to_string).collect()
    };
    let mut incidence = BTreeMap::new();
    if !inc.is_empty() {
        for entry in inc.split("),(") {
            let entry = entry.trim_start_matches('(').trim_end_matches(')');
            let parts: Vec<&str> = entry.split(',').collect();
            let [u, g, s] = parts[..] else {
                return Err(bad("incidence triple"));
            };
            let u: usize = number(no, u, "dotted circle id")?;
            let i = Incidence {
                geometric: number(no, g, "geometric count")?,
                signed: number(no, s, "signed count")?,
            };
            if incidence.insert(u, i).is_some() {
                return Err(Error::parse(no, format!("dotted circle {u} listed twice")));
            }
        }
    }
    Ok(KirbyComponent {
        id: number(no, id, "component id")?,
        doubled_framing: number(no, framing, "framing")?,
        tags,
        incidence,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "format kirby-data 1\nC0 framing=3/2 tags=[K1,K2] inc=[(2,1,1),(3,2,0)]\nC4 framing=-2/2 tags=[] inc=[]\nU2\nU3\n";
        let k = parse_kirby(text).unwrap();
        assert_eq!(
            k.components[0].through(3),
            Incidence {
                geometric: 2,
                signed: 0
            }
        );
        assert_eq!(render_kirby(&k), text);
        assert!(matches!(
            parse_kirby("format kirby-data 1\nC0 framing=1 tags=[] inc=[]\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }
}
