//! Shared test support: an independent homology oracle and seeded generators.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use shadow_census::cancellation::{BipartiteEdge, BipartiteTree};
use shadow_census::census::CatalogRecord;
use shadow_census::census::{enumerate_special, Catalog, EnumerateOptions};
use shadow_census::encoding::{EncodingEdge, EncodingGraph, Mark, PieceKind};
use shadow_census::polyhedron::{
    CirclePiece, CircuitRef, HomologyProfile, MonodromyClass, PolyhedronModel, Slot, Strand, SurfaceRegion, VertexPiece,
};

pub fn catalog(n: usize) -> &'static Catalog {
    static ONE: OnceLock<Catalog> = OnceLock::new();
    static TWO: OnceLock<Catalog> = OnceLock::new();
    let cell = match n {
        1 => &ONE,
        2 => &TWO,
        _ => panic!("only n = 1, 2 are cached"),
    };
    cell.get_or_init(|| enumerate_special(n, &EnumerateOptions::default()).unwrap())
}

/// Every record of the cached catalogs.
pub fn all_records() -> impl Iterator<Item = &'static CatalogRecord> {
    catalog(1).records.iter().chain(&catalog(2).records)
}

// ---------------------------------------------------------------------------
// Simplicial oracle
// ---------------------------------------------------------------------------

/// A simplicial 2-complex given by its triangles and edges on numbered
/// vertices. Simplices are sorted vertex tuples.
#[derive(Default)]
pub struct Simplicial {
    vertices: usize,
    edges: BTreeSet<(usize, usize)>,
    triangles: BTreeSet<(usize, usize, usize)>,
}

impl Simplicial {
    fn fresh(&mut self) -> usize {
        self.vertices += 1;
        self.vertices - 1
    }

    fn edge(&mut self, a: usize, b: usize) {
        assert_ne!(a, b, "degenerate edge");
        self.edges.insert((a.min(b), a.max(b)));
    }

    fn triangle(&mut self, a: usize, b: usize, c: usize) {
        let mut t = [a, b, c];
        t.sort_unstable();
        assert!(t[0] != t[1] && t[1] != t[2], "degenerate triangle");
        self.edge(t[0], t[1]);
        self.edge(t[1], t[2]);
        self.edge(t[0], t[2]);
        assert!(self.triangles.insert((t[0], t[1], t[2])), "triangle {t:?} repeated");
    }

    /// Fills a closed walk `p_0 .. p_{k-1}` with a disk: a ring of fresh
    /// vertices inside the walk and a fresh centre.
    fn polygon(&mut self, walk: &[usize]) {
        let k = walk.len();
        assert!(k >= 3);
        let q: Vec<usize> = (0..k).map(|_| self.fresh()).collect();
        let c = self.fresh();
        for i in 0..k {
            let j = (i + 1) % k;
            self.triangle(walk[i], walk[j], q[i]);
            self.triangle(walk[j], q[j], q[i]);
            self.triangle(c, q[i], q[j]);
        }
    }

    /// A walk of three edges through two fresh vertices.
    fn arc(&mut self, from: usize, to: usize) -> Vec<usize> {
        let (x, y) = (self.fresh(), self.fresh());
        self.edge(from, x);
        self.edge(x, y);
        self.edge(y, to);
        vec![from, x, y, to]
    }

    pub fn homology(&self) -> HomologyProfile {
        let edges: Vec<(usize, usize)> = self.edges.iter().copied().collect();
        let index: BTreeMap<(usize, usize), usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut d1 = vec![vec![0i128; edges.len()]; self.vertices];
        for (j, &(a, b)) in edges.iter().enumerate() {
            d1[a][j] -= 1;
            d1[b][j] += 1;
        }
        let mut d2 = vec![vec![0i128; self.triangles.len()]; edges.len()];
        for (j, &(a, b, c)) in self.triangles.iter().enumerate() {
            d2[index[&(b, c)]][j] += 1;
            d2[index[&(a, c)]][j] -= 1;
            d2[index[&(a, b)]][j] += 1;
        }
        let r1 = diagonal(d1).len();
        let diag2 = diagonal(d2);
        let r2 = diag2.len();
        HomologyProfile {
            betti: [self.vertices - r1, edges.len() - r1 - r2, self.triangles.len() - r2],
            torsion_1: invariant_factors(diag2)
                .into_iter()
                .filter(|&d| d > 1)
                .map(|d| d as u64)
                .collect(),
            torsion_2: vec![],
        }
    }
}

/// Nonzero diagonal entries (absolute values) after eliminating with the
/// smallest available pivot; no divisibility is enforced.
fn diagonal(mut m: Vec<Vec<i128>>) -> Vec<i128> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut top = 0;
    while top < rows.min(cols) {
        let mut best: Option<(usize, usize)> = None;
        for (r, row) in m.iter().enumerate().skip(top) {
            for (c, &v) in row.iter().enumerate().skip(top) {
                if v != 0 && best.is_none_or(|(br, bc)| v.abs() < m[br][bc].abs()) {
                    best = Some((r, c));
                }
            }
        }
        let Some((r, c)) = best else { break };
        m.swap(top, r);
        for row in m.iter_mut() {
            row.swap(top, c);
        }
        loop {
            let p = m[top][top];
            let mut clean = true;
            for r in top + 1..rows {
                let q = m[r][top] / p;
                if q != 0 {
                    for c in top..cols {
                        m[r][c] -= q * m[top][c];
                    }
                }
                clean &= m[r][top] == 0;
            }
            for c in top + 1..cols {
                let q = m[top][c] / p;
                if q != 0 {
                    for row in m.iter_mut().skip(top) {
                        row[c] -= q * row[top];
                    }
                }
                clean &= m[top][c] == 0;
            }
            if clean {
                break;
            }
            // a smaller remainder exists in the pivot row or column
            let (mut br, mut bc) = (top, top);
            for r in top..rows {
                if m[r][top] != 0 && m[r][top].abs() < m[br][bc].abs() {
                    (br, bc) = (r, top);
                }
            }
            for c in top..cols {
                if m[top][c] != 0 && m[top][c].abs() < m[br][bc].abs() {
                    (br, bc) = (top, c);
                }
            }
            m.swap(top, br);
            for row in m.iter_mut() {
                row.swap(top, bc);
            }
        }
        out.push(m[top][top].abs());
        top += 1;
    }
    out
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn invariant_factors(mut d: Vec<i128>) -> Vec<i128> {
    d.sort_unstable();
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = gcd(d[i], d[j]);
            let l = d[i] / g * d[j];
            d[i] = g;
            d[j] = l;
        }
    }
    d
}

/// Triangulates a model from its defining data only.
///
/// Singular edges are split in three; each circle piece is a triangulated
/// mapping cylinder from every boundary circuit onto a three-edge core; each
/// region is a polygon reading `t s t^-1` per slot followed by its handles
/// or crosscaps.
pub fn triangulate(model: &PolyhedronModel) -> Simplicial {
    let mut sc = Simplicial::default();
    let mut walks: BTreeMap<CircuitRef, Vec<usize>> = BTreeMap::new();
    for (p, piece) in model.vertex_pieces().iter().enumerate() {
        let verts: Vec<usize> = (0..piece.vertex_count()).map(|_| sc.fresh()).collect();
        let inner: Vec<[usize; 2]> = piece
            .graph()
            .edges()
            .iter()
            .map(|[t, h]| {
                let w = sc.arc(verts[t.vertex], verts[h.vertex]);
                [w[1], w[2]]
            })
            .collect();
        for (c, circuit) in piece.circuits().iter().enumerate() {
            let mut walk = Vec::new();
            for t in &circuit.traversals {
                let [tl, hd] = piece.graph().edge(t.edge);
                let [x, y] = inner[t.edge];
                if t.forward {
                    walk.extend([verts[tl.vertex], x, y]);
                } else {
                    walk.extend([verts[hd.vertex], y, x]);
                }
            }
            walks.insert(CircuitRef::Vertex { piece: p, circuit: c }, walk);
        }
    }
    for (p, cp) in model.circle_pieces().iter().enumerate() {
        let k: Vec<usize> = (0..3).map(|_| sc.fresh()).collect();
        for (c, &w) in cp.monodromy.wraps().iter().enumerate() {
            let len = 3 * w as usize;
            let ring: Vec<usize> = (0..len).map(|_| sc.fresh()).collect();
            for i in 0..len {
                let j = (i + 1) % len;
                sc.triangle(ring[i], ring[j], k[j % 3]);
                sc.triangle(ring[i], k[j % 3], k[i % 3]);
            }
            walks.insert(CircuitRef::Circle { piece: p, circuit: c }, ring);
        }
    }
    for region in model.regions() {
        let base = sc.fresh();
        let mut seq: Vec<usize> = Vec::new();
        let push = |seq: &mut Vec<usize>, path: &[usize]| seq.extend_from_slice(&path[..path.len() - 1]);
        for slot in &region.slots {
            let mut lp = match slot {
                Slot::Free => (0..3).map(|_| sc.fresh()).collect::<Vec<_>>(),
                Slot::Attached { circuit, .. } => walks[circuit].clone(),
            };
            if let Slot::Free = slot {
                for i in 0..3 {
                    sc.edge(lp[i], lp[(i + 1) % 3]);
                }
            }
            if matches!(slot, Slot::Attached { reversed: true, .. }) {
                lp[1..].reverse();
            }
            lp.push(lp[0]);
            let tether = sc.arc(base, lp[0]);
            let back: Vec<usize> = tether.iter().rev().copied().collect();
            push(&mut seq, &tether);
            push(&mut seq, &lp);
            push(&mut seq, &back);
        }
        if region.orientable {
            for _ in 0..region.genus {
                let a = sc.arc(base, base);
                let b = sc.arc(base, base);
                let ai: Vec<usize> = a.iter().rev().copied().collect();
                let bi: Vec<usize> = b.iter().rev().copied().collect();
                for w in [&a, &b, &ai, &bi] {
                    push(&mut seq, w);
                }
            }
        } else {
            for _ in 0..region.genus {
                let c = sc.arc(base, base);
                push(&mut seq, &c);
                push(&mut seq, &c);
            }
        }
        if seq.is_empty() {
            // a sphere: the boundary of a tetrahedron on the base point
            let (x, y, z) = (sc.fresh(), sc.fresh(), sc.fresh());
            for [a, b, c] in [[base, x, y], [base, x, z], [base, y, z], [x, y, z]] {
                sc.triangle(a, b, c);
            }
        } else {
            sc.polygon(&seq);
        }
    }
    sc
}

pub fn oracle_homology(model: &PolyhedronModel) -> HomologyProfile {
    triangulate(model).homology()
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

fn random_piece(rng: &mut ChaCha8Rng) -> VertexPiece {
    let n = if rng.gen_bool(0.5) { 1 } else { 2 };
    let records = &catalog(n).records;
    records.choose(rng).unwrap().piece.clone()
}

fn random_monodromy(rng: &mut ChaCha8Rng) -> MonodromyClass {
    *[
        MonodromyClass::Trivial,
        MonodromyClass::Transposition,
        MonodromyClass::ThreeCycle,
    ]
    .choose(rng)
    .unwrap()
}

/// Random closed or open models from census pieces, circle pieces and
/// surfaces of random type. Regions take random groups of circuits.
pub fn random_model(rng: &mut ChaCha8Rng, allow_topology: bool) -> PolyhedronModel {
    let piece_count = rng.gen_range(0..3);
    random_model_with(rng, piece_count, allow_topology)
}

/// As [`random_model`] with a fixed number of vertex pieces.
pub fn random_model_with(rng: &mut ChaCha8Rng, piece_count: usize, allow_topology: bool) -> PolyhedronModel {
    let pieces: Vec<VertexPiece> = (0..piece_count).map(|_| random_piece(rng)).collect();
    let circles: Vec<CirclePiece> = (0..rng.gen_range(0..3))
        .map(|_| CirclePiece {
            monodromy: random_monodromy(rng),
        })
        .collect();
    let mut circuits: Vec<CircuitRef> = Vec::new();
    for (p, piece) in pieces.iter().enumerate() {
        circuits.extend((0..piece.circuits().len()).map(|c| CircuitRef::Vertex { piece: p, circuit: c }));
    }
    for (p, cp) in circles.iter().enumerate() {
        circuits.extend((0..cp.monodromy.circuit_count()).map(|c| CircuitRef::Circle { piece: p, circuit: c }));
    }
    circuits.shuffle(rng);
    let mut regions = Vec::new();
    let mut i = 0;
    while i < circuits.len() || regions.is_empty() {
        let take = rng.gen_range(1..=3).min(circuits.len() - i);
        let mut slots: Vec<Slot> = circuits[i..i + take]
            .iter()
            .map(|&c| Slot::Attached {
                circuit: c,
                reversed: rng.gen_bool(0.5),
            })
            .collect();
        i += take;
        if allow_topology && rng.gen_bool(0.15) {
            slots.push(Slot::Free);
        }
        let (genus, orientable) = if allow_topology && rng.gen_bool(0.2) {
            if rng.gen_bool(0.5) {
                (1, true)
            } else {
                (rng.gen_range(1..3), false)
            }
        } else {
            (0, true)
        };
        regions.push(SurfaceRegion {
            genus,
            orientable,
            slots,
        });
    }
    PolyhedronModel::new(pieces, circles, regions).unwrap()
}

/// A closed acyclic model with one or two vertex pieces, found by
/// rejection. The piece count is drawn first, uniformly.
pub fn random_acyclic_composite(rng: &mut ChaCha8Rng) -> PolyhedronModel {
    let piece_count = rng.gen_range(1..3);
    loop {
        let m = random_model_with(rng, piece_count, false);
        if !m.is_closed() {
            continue;
        }
        if shadow_census::polyhedron::homology_profile(&m).unwrap().is_acyclic() {
            return m;
        }
    }
}

/// A random valid encoding graph with random `beta`.
pub fn random_encoding(rng: &mut ChaCha8Rng) -> EncodingGraph {
    use PieceKind::*;
    loop {
        let count = rng.gen_range(1..7);
        let mut kinds: Vec<PieceKind> = (0..count)
            .map(|_| match rng.gen_range(0..8) {
                0 => B,
                1 => D,
                2 => P(rng.gen_range(3..5)),
                3 => M2,
                4 => Y111,
                5 | 6 => Y12,
                _ => Y3,
            })
            .collect();
        let stubs_of = |kinds: &[PieceKind]| kinds.iter().map(|k| k.degree()).sum::<usize>();
        if stubs_of(&kinds) % 2 == 1 {
            kinds.push(D);
        }
        // stubs (vertex, mark)
        let mut stubs: Vec<(usize, Option<Mark>)> = Vec::new();
        for (v, k) in kinds.iter().enumerate() {
            match k {
                Y12 => {
                    stubs.push((v, Some(Mark::Single)));
                    stubs.push((v, Some(Mark::Double)));
                }
                _ => stubs.extend(std::iter::repeat_n((v, None), k.degree())),
            }
        }
        stubs.shuffle(rng);
        let edges: Vec<EncodingEdge> = stubs
            .chunks(2)
            .map(|p| EncodingEdge::marked(p[0].0, p[1].0, p[0].1, p[1].1))
            .collect();
        let Ok(g) = EncodingGraph::untwisted(kinds, edges) else {
            continue; // two boundary vertices joined
        };
        let beta = (0..g.cycle_rank()).map(|_| rng.gen_bool(0.5)).collect();
        return g.with_beta(beta).unwrap();
    }
}

/// A random bipartite tree in which every X-vertex has a 1-labeled edge.
pub fn random_claim_tree(rng: &mut ChaCha8Rng) -> BipartiteTree {
    let size = rng.gen_range(2..14);
    // side[i]: false for X, true for Y; local index within its side
    let mut side = vec![rng.gen_bool(0.5)];
    let mut local = vec![0usize];
    let (mut xs, mut ys) = if side[0] { (0, 1) } else { (1, 0) };
    let mut edges = Vec::new();
    for _ in 1..size {
        let parent = rng.gen_range(0..side.len());
        let is_y = !side[parent];
        let idx = if is_y { ys } else { xs };
        if is_y {
            ys += 1;
        } else {
            xs += 1;
        }
        let (x, y) = if is_y {
            (local[parent], idx)
        } else {
            (idx, local[parent])
        };
        edges.push(BipartiteEdge {
            x,
            y,
            label: u8::from(rng.gen_bool(0.5)),
        });
        side.push(is_y);
        local.push(idx);
    }
    for x in 0..xs {
        if !edges.iter().any(|e| e.x == x && e.label == 1) {
            let incident: Vec<usize> = (0..edges.len()).filter(|&i| edges[i].x == x).collect();
            let pick = *incident.choose(rng).unwrap();
            edges[pick].label = 1;
        }
    }
    BipartiteTree {
        x_count: xs,
        y_count: ys,
        edges,
    }
}

/// The piece with vertices, legs and edge directions scrambled.
pub fn scramble(piece: &VertexPiece, rng: &mut ChaCha8Rng) -> VertexPiece {
    let n = piece.vertex_count();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let legs: Vec<[u8; 4]> = (0..n)
        .map(|_| {
            let mut l = [0u8, 1, 2, 3];
            l.shuffle(rng);
            l
        })
        .collect();
    let mut out = piece.relabeled(&perm, &legs).unwrap();
    for e in 0..out.edge_count() {
        if rng.gen_bool(0.5) {
            out = out.with_edge_reversed(e).unwrap();
        }
    }
    out
}

pub fn strand_multiplicities(piece: &VertexPiece) -> BTreeMap<Strand, usize> {
    let mut seen = BTreeMap::new();
    for c in piece.circuits() {
        for &t in &c.traversals {
            *seen.entry(piece.strand(t)).or_insert(0) += 1;
        }
    }
    seen
}

/// Every `Y` vertex whose edges are all labeled 1, by direct scan.
pub fn all_one_y_vertices(t: &BipartiteTree) -> Vec<usize> {
    (0..t.y_count)
        .filter(|&y| t.edges.iter().filter(|e| e.y == y).all(|e| e.label == 1))
        .collect()
}

/// An encoding with one boundary vertex and no `Y111`. Half the draws grow a
/// tree outward from the boundary; the rest pair stubs at random.
pub fn single_boundary_encoding(rng: &mut ChaCha8Rng) -> EncodingGraph {
    use PieceKind::*;
    let pick = |rng: &mut ChaCha8Rng, closing: bool| {
        if closing {
            return D;
        }
        match rng.gen_range(0..10) {
            0..=2 => D,
            3..=4 => P(rng.gen_range(3..5)),
            5..=7 => Y12,
            8 => M2,
            _ => Y3,
        }
    };
    let stubs_for = |v: usize, k: PieceKind| -> Vec<(usize, Option<Mark>)> {
        match k {
            Y12 => vec![(v, Some(Mark::Single)), (v, Some(Mark::Double))],
            _ => vec![(v, None); k.degree()],
        }
    };
    loop {
        let mut kinds = vec![B];
        let edges: Vec<EncodingEdge> = if rng.gen_bool(0.5) {
            let mut open = stubs_for(0, B);
            let mut edges = Vec::new();
            while let Some((v, mv)) = open.pop() {
                let k = pick(rng, kinds.len() > 6);
                let w = kinds.len();
                kinds.push(k);
                let mut theirs = stubs_for(w, k);
                let at = if k == Y12 {
                    // mostly the double circle faces the boundary
                    usize::from(rng.gen_bool(0.8))
                } else {
                    0
                };
                let (_, mw) = theirs.remove(at);
                edges.push(EncodingEdge::marked(v, w, mv, mw));
                open.extend(theirs);
            }
            edges
        } else {
            for _ in 0..rng.gen_range(1..6) {
                kinds.push(pick(rng, false));
            }
            let mut stubs: Vec<(usize, Option<Mark>)> = Vec::new();
            for (v, &k) in kinds.iter().enumerate() {
                stubs.extend(stubs_for(v, k));
            }
            if stubs.len() % 2 == 1 {
                stubs.push((kinds.len(), None));
                kinds.push(D);
            }
            stubs.shuffle(rng);
            stubs
                .chunks(2)
                .map(|p| EncodingEdge::marked(p[0].0, p[1].0, p[0].1, p[1].1))
                .collect()
        };
        let Ok(g) = EncodingGraph::untwisted(kinds, edges) else {
            continue;
        };
        let beta = (0..g.cycle_rank()).map(|_| rng.gen_bool(0.5)).collect();
        return g.with_beta(beta).unwrap();
    }
}
