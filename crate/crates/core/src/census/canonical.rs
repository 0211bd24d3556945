//! Canonical keys for vertex pieces.
//!
//! A piece is serialized from a labeling of its vertices and legs: for each
//! vertex in label order and each of its legs `0..4`, five bytes giving the
//! partner vertex, the partner leg, and where the wings toward the other three
//! legs (ascending) land at the partner. This reads the same whichever way an
//! edge is stored or in whichever order edges are listed.
//!
//! The key is the smallest serialization over *rooted* labelings. A rooted
//! labeling fixes a start vertex and a permutation of its legs; every other
//! vertex is numbered when first reached in breadth-first order over legs,
//! its arrival leg becomes leg 0, and its remaining legs are ordered by the
//! labels of the wings they are glued to on the parent side. Any symmetry of
//! the piece carries rooted labelings to rooted labelings, so the minimum is
//! an invariant; and the key determines the piece, so it is complete.

use std::fmt;

use crate::polyhedron::{other_legs, LegRef, SingularGraph, VertexPiece, WingGluing};
use crate::{Error, Result};

const PERMS4: [[u8; 4]; 24] = {
    let mut out = [[0u8; 4]; 24];
    let mut i = 0;
    let mut a = 0;
    while a < 4 {
        let mut b = 0;
        while b < 4 {
            let mut c = 0;
            while c < 4 {
                let d = 6 - a - b - c;
                if a != b && a != c && b != c {
                    out[i] = [a as u8, b as u8, c as u8, d as u8];
                    i += 1;
                }
                c += 1;
            }
            b += 1;
        }
        a += 1;
    }
    out
};

/// Lexicographically minimal serialization of a vertex piece.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn from_bytes(bytes: Vec<u8>) -> Result<Self> {
        if bytes.is_empty() || !bytes.len().is_multiple_of(20) {
            return Err(Error::structural(format!(
                "key length {} is not a positive multiple of 20",
                bytes.len()
            )));
        }
        let key = CanonicalKey(bytes);
        key.decode()?;
        Ok(key)
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        if !s.len().is_multiple_of(2) || !s.bytes().all(|b| b.is_ascii_hexdigit()) {
            return Err(Error::structural(format!("invalid key hex {s:?}")));
        }
        let bytes = (0..s.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(&s[i..i + 2], 16).unwrap())
            .collect();
        CanonicalKey::from_bytes(bytes)
    }

    pub fn vertex_count(&self) -> usize {
        self.0.len() / 20
    }

    /// The piece whose identity labeling produces this key. Edges run from
    /// the smaller `(vertex, leg)` end and are listed in order of that end.
    pub fn decode(&self) -> Result<VertexPiece> {
        let n = self.vertex_count();
        let mut edges = Vec::new();
        let mut gluings = Vec::new();
        for v in 0..n {
            for l in 0..4u8 {
                let rec = &self.0[20 * v + 5 * l as usize..][..5];
                let (w, m) = (rec[0] as usize, rec[1]);
                if w >= n || m > 3 {
                    return Err(Error::structural("key refers to a missing leg"));
                }
                let back = &self.0[20 * w + 5 * m as usize..][..5];
                if back[0] as usize != v || back[1] != l || (w, m) == (v, l) {
                    return Err(Error::structural("key incidence is not symmetric"));
                }
                if (v, l) < (w, m) {
                    let mut g = [0u8; 3];
                    for i in 0..3 {
                        let img = rec[2 + i];
                        g[i] = other_legs(m)
                            .iter()
                            .position(|&x| x == img)
                            .ok_or_else(|| Error::structural("key wing image is not a wing"))?
                            as u8;
                    }
                    edges.push([LegRef::new(v, l), LegRef::new(w, m)]);
                    gluings.push(WingGluing::new(g)?);
                }
            }
        }
        let piece = VertexPiece::new(SingularGraph::new(n, edges)?, gluings)?;
        Ok(piece)
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// Partner leg and wing map at every `(vertex, leg)`: the data a key reads.
#[derive(Clone, Debug)]
pub(crate) struct Incidence {
    n: usize,
    partner: Vec<[(usize, u8); 4]>,
    // wing label at (v, l) -> wing label at the partner
    wings: Vec<[[u8; 4]; 4]>,
}

impl Incidence {
    pub(crate) fn new(graph: &SingularGraph, gluings: &[WingGluing]) -> Self {
        let n = graph.vertex_count();
        let mut partner = vec![[(0usize, 0u8); 4]; n];
        let mut wings = vec![[[u8::MAX; 4]; 4]; n];
        for (e, &[a, b]) in graph.edges().iter().enumerate() {
            partner[a.vertex][a.leg as usize] = (b.vertex, b.leg);
            partner[b.vertex][b.leg as usize] = (a.vertex, a.leg);
            for &x in &other_legs(a.leg) {
                let y = gluings[e].map_label(a.leg, b.leg, x);
                wings[a.vertex][a.leg as usize][x as usize] = y;
                wings[b.vertex][b.leg as usize][y as usize] = x;
            }
        }
        Incidence { n, partner, wings }
    }

    pub(crate) fn of(piece: &VertexPiece) -> Self {
        Incidence::new(piece.graph(), piece.gluings())
    }

    /// Serialization under an explicit labeling: `vmap[v]` is the new number
    /// of vertex `v` and `lmap[v][l]` the new name of its leg `l`.
    fn serialize(&self, vmap: &[usize], lmap: &[[u8; 4]], out: &mut Vec<u8>) {
        let n = self.n;
        out.clear();
        out.resize(20 * n, 0);
        let mut inv_legs = vec![[0u8; 4]; n];
        for v in 0..n {
            for l in 0..4 {
                inv_legs[v][lmap[v][l] as usize] = l as u8;
            }
        }
        for v in 0..n {
            let nv = vmap[v];
            for nl in 0..4u8 {
                let l = inv_legs[v][nl as usize];
                let (w, m) = self.partner[v][l as usize];
                let rec = &mut out[20 * nv + 5 * nl as usize..][..5];
                rec[0] = vmap[w] as u8;
                rec[1] = lmap[w][m as usize];
                for (i, &ny) in other_legs(nl).iter().enumerate() {
                    let y = inv_legs[v][ny as usize];
                    let img = self.wings[v][l as usize][y as usize];
                    rec[2 + i] = lmap[w][img as usize];
                }
            }
        }
    }

    /// The rooted labeling from `start` with leg permutation `sigma`.
    /// Returns `None` if the piece is disconnected.
    fn rooted(&self, start: usize, sigma: [u8; 4]) -> Option<(Vec<usize>, Vec<[u8; 4]>)> {
        let n = self.n;
        let mut vmap = vec![usize::MAX; n];
        let mut lmap = vec![[0u8; 4]; n];
        let mut order = Vec::with_capacity(n);
        vmap[start] = 0;
        lmap[start] = sigma;
        order.push(start);
        let mut idx = 0;
        while idx < order.len() {
            let u = order[idx];
            idx += 1;
            let mut inv = [0u8; 4];
            for l in 0..4 {
                inv[lmap[u][l] as usize] = l as u8;
            }
            for nl in 0..4 {
                let a = inv[nl];
                let (w, b) = self.partner[u][a as usize];
                if vmap[w] != usize::MAX {
                    continue;
                }
                vmap[w] = order.len();
                order.push(w);
                let mut rest: Vec<(u8, u8)> = other_legs(a)
                    .iter()
                    .map(|&x| (lmap[u][x as usize], self.wings[u][a as usize][x as usize]))
                    .collect();
                rest.sort_unstable();
                let mut lm = [0u8; 4];
                lm[b as usize] = 0;
                for (k, &(_, y)) in rest.iter().enumerate() {
                    lm[y as usize] = k as u8 + 1;
                }
                lmap[w] = lm;
            }
        }
        (order.len() == n).then_some((vmap, lmap))
    }

    pub(crate) fn canonical_key(&self) -> Result<CanonicalKey> {
        let mut best: Option<Vec<u8>> = None;
        let mut buf = Vec::with_capacity(20 * self.n);
        for start in 0..self.n {
            for sigma in PERMS4 {
                let (vmap, lmap) = self
                    .rooted(start, sigma)
                    .ok_or_else(|| Error::precondition("canonical form requires a connected piece"))?;
                self.serialize(&vmap, &lmap, &mut buf);
                if best.as_ref().is_none_or(|b| buf < *b) {
                    best = Some(buf.clone());
                }
            }
        }
        best.map(CanonicalKey)
            .ok_or_else(|| Error::precondition("canonical form requires at least one vertex"))
    }

    fn exhaustive_key(&self) -> CanonicalKey {
        let n = self.n;
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best: Option<Vec<u8>> = None;
        let mut buf = Vec::new();
        loop {
            let mut choice = vec![0usize; n];
            'legs: loop {
                let lmap: Vec<[u8; 4]> = choice.iter().map(|&c| PERMS4[c]).collect();
                self.serialize(&perm, &lmap, &mut buf);
                if best.as_ref().is_none_or(|b| buf < *b) {
                    best = Some(buf.clone());
                }
                for c in choice.iter_mut() {
                    *c += 1;
                    if *c < 24 {
                        continue 'legs;
                    }
                    *c = 0;
                }
                break;
            }
            if !super::graphs::next_permutation(&mut perm) {
                break;
            }
        }
        CanonicalKey(best.unwrap_or_default())
    }
}

/// Canonical key of a connected vertex piece.
pub fn canonical_form(piece: &VertexPiece) -> Result<CanonicalKey> {
    Incidence::of(piece).canonical_key()
}

/// Minimum serialization over every vertex numbering and every leg
/// permutation at every vertex (`n! * 24^n` labelings). Keys from this
/// function are not comparable with [`canonical_form`], but they induce the
/// same partition into classes.
pub fn exhaustive_form(piece: &VertexPiece) -> CanonicalKey {
    Incidence::of(piece).exhaustive_key()
}
