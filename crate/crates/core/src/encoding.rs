//! Graph encodings of simple polyhedra without vertices.
//!
//! A vertex of the encoding graph is a piece: a boundary circle `B`, a
//! surface piece (`D`, `P(d)`, `M2`) or a Y-bundle (`Y111`, `Y12`, `Y3`).
//! An edge is a circle along which two pieces are glued. The map `beta`
//! is given on the fundamental cycles of a fixed spanning forest: the forest
//! is grown breadth-first from the lowest unvisited vertex, neighbours taken
//! in edge order, and the `i`-th basis cycle belongs to the `i`-th non-forest
//! edge. Every forest edge is an untwisted gluing and non-forest edge `i`
//! carries twist `beta[i]`.
//!
//! Twist conventions per gluing:
//! - surface to surface: untwisted glues the two pieces with compatible
//!   orientations;
//! - surface to Y: untwisted makes the region's boundary run along the Y
//!   circuit when the surface piece is positively oriented in its region;
//! - Y to Y: the circle becomes an annulus region whose boundary is
//!   `c_a - c_b` when untwisted and `c_a + c_b` when twisted.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::polyhedron::snf::rank_mod2;
use crate::polyhedron::{
    build_chain_complex, homology_profile, CirclePiece, CircuitRef, HomologyProfile, IntMatrix, MonodromyClass,
    PolyhedronModel, Slot, SurfaceRegion,
};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PieceKind {
    B,
    D,
    /// Sphere with `d >= 3` holes.
    P(u32),
    /// Möbius band.
    M2,
    Y111,
    Y12,
    Y3,
}

impl PieceKind {
    pub fn degree(self) -> usize {
        match self {
            PieceKind::B | PieceKind::D | PieceKind::M2 | PieceKind::Y3 => 1,
            PieceKind::Y12 => 2,
            PieceKind::Y111 => 3,
            PieceKind::P(d) => d as usize,
        }
    }

    pub fn is_surface(self) -> bool {
        matches!(self, PieceKind::D | PieceKind::P(_) | PieceKind::M2)
    }

    pub fn monodromy(self) -> Option<MonodromyClass> {
        match self {
            PieceKind::Y111 => Some(MonodromyClass::Trivial),
            PieceKind::Y12 => Some(MonodromyClass::Transposition),
            PieceKind::Y3 => Some(MonodromyClass::ThreeCycle),
            _ => None,
        }
    }

    fn euler_characteristic(self) -> i64 {
        match self {
            PieceKind::D => 1,
            PieceKind::P(d) => 2 - d as i64,
            _ => 0,
        }
    }
}

impl fmt::Display for PieceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PieceKind::B => f.write_str("B"),
            PieceKind::D => f.write_str("D"),
            PieceKind::P(d) => write!(f, "P:{d}"),
            PieceKind::M2 => f.write_str("M2"),
            PieceKind::Y111 => f.write_str("Y111"),
            PieceKind::Y12 => f.write_str("Y12"),
            PieceKind::Y3 => f.write_str("Y3"),
        }
    }
}

impl FromStr for PieceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "B" => PieceKind::B,
            "D" => PieceKind::D,
            "M2" => PieceKind::M2,
            "Y111" => PieceKind::Y111,
            "Y12" => PieceKind::Y12,
            "Y3" => PieceKind::Y3,
            _ => match s.strip_prefix("P:").map(str::parse::<u32>) {
                Some(Ok(d)) => PieceKind::P(d),
                _ => return Err(Error::structural(format!("unknown piece kind `{s}`"))),
            },
        })
    }
}

/// Which boundary circle of a `Y12` an edge uses: the one wrapping once or
/// the one wrapping twice around the core.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mark {
    Single,
    Double,
}

impl fmt::Display for Mark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mark::Single => "single",
            Mark::Double => "double",
        })
    }
}

impl FromStr for Mark {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "single" => Ok(Mark::Single),
            "double" => Ok(Mark::Double),
            _ => Err(Error::structural(format!("unknown mark `{s}`"))),
        }
    }
}

/// An edge with a mark on each end that sits at a `Y12`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EncodingEdge {
    pub ends: [usize; 2],
    pub marks: [Option<Mark>; 2],
}

impl EncodingEdge {
    pub fn new(a: usize, b: usize) -> Self {
        EncodingEdge {
            ends: [a, b],
            marks: [None, None],
        }
    }

    pub fn marked(a: usize, b: usize, ma: Option<Mark>, mb: Option<Mark>) -> Self {
        EncodingEdge {
            ends: [a, b],
            marks: [ma, mb],
        }
    }

    pub fn is_loop(&self) -> bool {
        self.ends[0] == self.ends[1]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EncodingGraph {
    kinds: Vec<PieceKind>,
    edges: Vec<EncodingEdge>,
    beta: Vec<bool>,
}

/// Spanning forest data shared by reconstruction and the checks.
struct Forest {
    tree: Vec<bool>,
    /// Parent edge of each vertex, `None` at roots.
    parent: Vec<Option<usize>>,
    depth: Vec<usize>,
    /// Non-forest edges in index order.
    cotree: Vec<usize>,
}

impl EncodingGraph {
    pub fn new(kinds: Vec<PieceKind>, edges: Vec<EncodingEdge>, beta: Vec<bool>) -> Result<Self> {
        let g = EncodingGraph { kinds, edges, beta };
        g.validate()?;
        Ok(g)
    }

    /// As [`EncodingGraph::new`] with `beta` zero on every basis cycle.
    pub fn untwisted(kinds: Vec<PieceKind>, edges: Vec<EncodingEdge>) -> Result<Self> {
        let mut g = EncodingGraph {
            kinds,
            edges,
            beta: Vec::new(),
        };
        g.check_edges()?;
        g.beta = vec![false; g.cycle_rank()];
        g.validate()?;
        Ok(g)
    }

    pub fn kinds(&self) -> &[PieceKind] {
        &self.kinds
    }

    pub fn edges(&self) -> &[EncodingEdge] {
        &self.edges
    }

    pub fn beta(&self) -> &[bool] {
        &self.beta
    }

    pub fn with_beta(&self, beta: Vec<bool>) -> Result<Self> {
        EncodingGraph::new(self.kinds.clone(), self.edges.clone(), beta)
    }

    pub fn vertex_count(&self) -> usize {
        self.kinds.len()
    }

    /// Incidences `(edge, end)` at each vertex, in edge order.
    pub fn incidences(&self) -> Vec<Vec<(usize, usize)>> {
        let mut inc = vec![Vec::new(); self.kinds.len()];
        for (e, edge) in self.edges.iter().enumerate() {
            for end in 0..2 {
                inc[edge.ends[end]].push((e, end));
            }
        }
        inc
    }

    fn check_edges(&self) -> Result<()> {
        for (e, edge) in self.edges.iter().enumerate() {
            if edge.ends.iter().any(|&v| v >= self.kinds.len()) {
                return Err(Error::structural(format!("edge {e} refers to a missing vertex")));
            }
        }
        Ok(())
    }

    fn validate(&self) -> Result<()> {
        self.check_edges()?;
        let inc = self.incidences();
        for (v, &kind) in self.kinds.iter().enumerate() {
            if let PieceKind::P(d) = kind {
                if d < 3 {
                    return Err(Error::structural(format!(
                        "vertex {v}: P needs at least 3 holes, got {d}"
                    )));
                }
            }
            if inc[v].len() != kind.degree() {
                return Err(Error::structural(format!(
                    "vertex {v} of kind {kind} has degree {} instead of {}",
                    inc[v].len(),
                    kind.degree()
                )));
            }
            let marks: Vec<Option<Mark>> = inc[v].iter().map(|&(e, end)| self.edges[e].marks[end]).collect();
            if kind == PieceKind::Y12 {
                let mut sorted = marks.clone();
                sorted.sort();
                if sorted != [Some(Mark::Single), Some(Mark::Double)] {
                    return Err(Error::structural(format!(
                        "Y12 vertex {v} needs one single and one double incidence, has {marks:?}"
                    )));
                }
            } else if marks.iter().any(Option::is_some) {
                return Err(Error::structural(format!("vertex {v} of kind {kind} carries a mark")));
            }
        }
        for (e, edge) in self.edges.iter().enumerate() {
            if edge.ends.iter().all(|&v| self.kinds[v] == PieceKind::B) {
                return Err(Error::structural(format!("edge {e} joins two boundary vertices")));
            }
        }
        let rank = self.cycle_rank();
        if self.beta.len() != rank {
            return Err(Error::structural(format!(
                "beta has {} values for a cycle basis of size {rank}",
                self.beta.len()
            )));
        }
        Ok(())
    }

    fn forest(&self) -> Forest {
        let n = self.kinds.len();
        let inc = self.incidences();
        let mut seen = vec![false; n];
        let mut tree = vec![false; self.edges.len()];
        let mut parent = vec![None; n];
        let mut depth = vec![0; n];
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &(e, end) in &inc[v] {
                    let w = self.edges[e].ends[1 - end];
                    if !seen[w] {
                        seen[w] = true;
                        tree[e] = true;
                        parent[w] = Some(e);
                        depth[w] = depth[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        let cotree = (0..self.edges.len()).filter(|&e| !tree[e]).collect();
        Forest {
            tree,
            parent,
            depth,
            cotree,
        }
    }

    /// Rank of `H_1(G; Z/2)`.
    pub fn cycle_rank(&self) -> usize {
        self.forest().cotree.len()
    }

    pub fn is_tree(&self) -> bool {
        let f = self.forest();
        f.cotree.is_empty() && f.parent.iter().filter(|p| p.is_none()).count() == 1
    }

    /// Edge sets of the basis cycles, in basis order.
    pub fn cycle_basis(&self) -> Vec<Vec<usize>> {
        let f = self.forest();
        f.cotree
            .iter()
            .map(|&e| {
                let [mut a, mut b] = self.edges[e].ends;
                let mut cycle = vec![e];
                while a != b {
                    if f.depth[a] < f.depth[b] {
                        std::mem::swap(&mut a, &mut b);
                    }
                    let pe = f.parent[a].expect("non-root has a parent");
                    cycle.push(pe);
                    let [x, y] = self.edges[pe].ends;
                    a = if x == a { y } else { x };
                }
                cycle.sort_unstable();
                cycle
            })
            .collect()
    }

    /// Twist of every edge: zero on the forest, `beta` on the rest.
    pub fn edge_twists(&self) -> Vec<bool> {
        let f = self.forest();
        let mut twist = vec![false; self.edges.len()];
        for (i, &e) in f.cotree.iter().enumerate() {
            twist[e] = self.beta[i];
        }
        debug_assert!(f.tree.iter().zip(&twist).all(|(&t, &w)| !(t && w)));
        twist
    }

    /// The values of `beta` that a twist cochain induces on the basis.
    pub fn beta_from_twists(&self, twists: &[bool]) -> Result<Vec<bool>> {
        if twists.len() != self.edges.len() {
            return Err(Error::precondition("one twist per edge is required"));
        }
        Ok(self
            .cycle_basis()
            .iter()
            .map(|c| c.iter().fold(false, |acc, &e| acc ^ twists[e]))
            .collect())
    }

    /// The same encoding with edges listed in the order `order[i]` and
    /// `beta` transported so that every edge keeps its twist class.
    pub fn with_edge_order(&self, order: &[usize]) -> Result<Self> {
        let mut sorted = order.to_vec();
        sorted.sort_unstable();
        if sorted != (0..self.edges.len()).collect::<Vec<_>>() {
            return Err(Error::precondition("edge order must be a permutation"));
        }
        let twists = self.edge_twists();
        let mut g = EncodingGraph {
            kinds: self.kinds.clone(),
            edges: order.iter().map(|&e| self.edges[e]).collect(),
            beta: Vec::new(),
        };
        let new_twists: Vec<bool> = order.iter().map(|&e| twists[e]).collect();
        g.beta = g.beta_from_twists(&new_twists)?;
        Ok(g)
    }
}

/// Circuit of Y-piece `circle` used by incidence `(e, end)`.
fn y_circuits(g: &EncodingGraph, inc: &[Vec<(usize, usize)>], v: usize) -> Vec<((usize, usize), usize)> {
    match g.kinds[v] {
        PieceKind::Y12 => inc[v]
            .iter()
            .map(|&(e, end)| {
                let c = match g.edges[e].marks[end] {
                    Some(Mark::Double) => 1,
                    _ => 0,
                };
                ((e, end), c)
            })
            .collect(),
        _ => inc[v].iter().enumerate().map(|(i, &x)| (x, i)).collect(),
    }
}

/// Builds the model encoded by `g`.
///
/// Circle pieces follow the Y vertices in vertex order. Regions are the
/// connected unions of surface pieces, ordered by their lowest vertex,
/// followed by one annulus per Y-to-Y edge and one collar per B-to-Y edge
/// in edge order. Each B vertex becomes exactly one free slot.
pub fn reconstruct_from_encoding(g: &EncodingGraph) -> Result<PolyhedronModel> {
    g.validate()?;
    let n = g.kinds.len();
    let inc = g.incidences();
    let twist = g.edge_twists();

    let mut circle_of = vec![usize::MAX; n];
    let mut circle_pieces = Vec::new();
    for (v, kind) in g.kinds.iter().enumerate() {
        if let Some(monodromy) = kind.monodromy() {
            circle_of[v] = circle_pieces.len();
            circle_pieces.push(CirclePiece { monodromy });
        }
    }
    let mut circuit_at = vec![[usize::MAX; 2]; g.edges.len()];
    for v in 0..n {
        if g.kinds[v].monodromy().is_some() {
            for ((e, end), c) in y_circuits(g, &inc, v) {
                circuit_at[e][end] = c;
            }
        }
    }
    let circuit = |e: usize, end: usize| CircuitRef::Circle {
        piece: circle_of[g.edges[e].ends[end]],
        circuit: circuit_at[e][end],
    };

    // Surface groups with a relative orientation for each member.
    let mut group = vec![usize::MAX; n];
    let mut orient = vec![1i64; n];
    let mut groups: Vec<(Vec<usize>, bool)> = Vec::new();
    for root in 0..n {
        if !g.kinds[root].is_surface() || group[root] != usize::MAX {
            continue;
        }
        let id = groups.len();
        let mut members = vec![root];
        let mut orientable = true;
        group[root] = id;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &(e, end) in &inc[v] {
                let w = g.edges[e].ends[1 - end];
                if !g.kinds[w].is_surface() {
                    continue;
                }
                let want = if twist[e] { -orient[v] } else { orient[v] };
                if group[w] == usize::MAX {
                    group[w] = id;
                    orient[w] = want;
                    members.push(w);
                    queue.push_back(w);
                } else if orient[w] != want {
                    orientable = false;
                }
            }
        }
        members.sort_unstable();
        groups.push((members, orientable));
    }

    let mut regions = Vec::new();
    for (members, twist_orientable) in &groups {
        let mut slots = Vec::new();
        let mut chi = 0;
        let mut has_m2 = false;
        for &v in members {
            chi += g.kinds[v].euler_characteristic();
            has_m2 |= g.kinds[v] == PieceKind::M2;
            for &(e, end) in &inc[v] {
                let w = g.edges[e].ends[1 - end];
                match g.kinds[w] {
                    k if k.is_surface() => {}
                    PieceKind::B => slots.push(Slot::Free),
                    _ => {
                        let sign = if twist[e] { -orient[v] } else { orient[v] };
                        slots.push(Slot::Attached {
                            circuit: circuit(e, 1 - end),
                            reversed: sign < 0,
                        });
                    }
                }
            }
        }
        let orientable = *twist_orientable && !has_m2;
        let deficit = 2 - slots.len() as i64 - chi;
        let genus = if orientable {
            if deficit < 0 || deficit % 2 != 0 {
                return Err(Error::Internal(format!(
                    "orientable region with genus deficit {deficit}"
                )));
            }
            deficit / 2
        } else {
            if deficit < 1 {
                return Err(Error::Internal(format!(
                    "non-orientable region with {deficit} crosscaps"
                )));
            }
            deficit
        };
        regions.push(SurfaceRegion {
            genus: genus as u32,
            orientable,
            slots,
        });
    }
    for (e, edge) in g.edges.iter().enumerate() {
        let [a, b] = edge.ends;
        let (ka, kb) = (g.kinds[a], g.kinds[b]);
        let slots = match (ka.monodromy().is_some(), kb.monodromy().is_some()) {
            (true, true) => vec![
                Slot::Attached {
                    circuit: circuit(e, 0),
                    reversed: false,
                },
                Slot::Attached {
                    circuit: circuit(e, 1),
                    reversed: !twist[e],
                },
            ],
            (true, false) if kb == PieceKind::B => vec![Slot::attached(circuit(e, 0)), Slot::Free],
            (false, true) if ka == PieceKind::B => vec![Slot::attached(circuit(e, 1)), Slot::Free],
            _ => continue,
        };
        regions.push(SurfaceRegion {
            genus: 0,
            orientable: true,
            slots,
        });
    }
    PolyhedronModel::new(vec![], circle_pieces, regions)
}

/// A cell structure on the encoded polyhedron that contains the encoding
/// graph in its 1-skeleton, over `Z/2`.
///
/// 0-cells: one centre per piece, then one point per gluing circle.
/// 1-cells: two half-edges per encoding edge (centre to circle point, circle
/// point to centre), then the gluing circles, the Y cores and one crosscap
/// loop per Möbius band. 2-cells: one per surface piece, cut open along its
/// half-edges, and one per Y-piece incidence spanning the circle and the
/// core it wraps.
struct PieceComplex {
    boundary_1: IntMatrix,
    boundary_2: IntMatrix,
}

fn piece_complex(g: &EncodingGraph) -> PieceComplex {
    let n = g.kinds.len();
    let m = g.edges.len();
    let inc = g.incidences();
    let mut core = vec![usize::MAX; n];
    let mut crosscap = vec![usize::MAX; n];
    let mut next = 3 * m;
    for v in 0..n {
        if g.kinds[v].monodromy().is_some() {
            core[v] = next;
            next += 1;
        }
    }
    for v in 0..n {
        if g.kinds[v] == PieceKind::M2 {
            crosscap[v] = next;
            next += 1;
        }
    }
    let c1 = next;
    let mut boundary_1 = IntMatrix::zeros(n + m, c1);
    for (e, edge) in g.edges.iter().enumerate() {
        for end in 0..2 {
            let h = 2 * e + end;
            boundary_1.add_to(edge.ends[end], h, 1);
            boundary_1.add_to(n + e, h, 1);
        }
    }
    let mut columns: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        let kind = g.kinds[v];
        if kind.is_surface() {
            // Half-edges appear twice and cancel; a crosscap appears twice.
            columns.push(inc[v].iter().map(|&(e, _)| 2 * m + e).collect());
        } else if let Some(mono) = kind.monodromy() {
            for ((e, _), c) in y_circuits(g, &inc, v) {
                let mut col = vec![2 * m + e];
                if mono.wraps()[c] % 2 == 1 {
                    col.push(core[v]);
                }
                columns.push(col);
            }
        }
    }
    let mut boundary_2 = IntMatrix::zeros(c1, columns.len());
    for (j, col) in columns.iter().enumerate() {
        for &r in col {
            boundary_2.add_to(r, j, 1);
        }
    }
    PieceComplex { boundary_1, boundary_2 }
}

fn mod2_betti(d1: &IntMatrix, d2: &IntMatrix) -> [usize; 3] {
    let (r1, r2) = (rank_mod2(d1), rank_mod2(d2));
    [d1.rows() - r1, d1.cols() - r1 - r2, d2.cols() - r2]
}

/// Outcome of [`retraction_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RetractionReport {
    pub graph_rank: usize,
    /// `Z/2` Betti numbers of the polyhedron.
    pub betti_mod2: [usize; 3],
    /// Rank of the image of `H_1(G; Z/2)` in `H_1(X; Z/2)`.
    pub image_rank: usize,
}

impl RetractionReport {
    pub fn injective(&self) -> bool {
        self.image_rank == self.graph_rank
    }
}

/// Whether `H_1(G; Z/2) -> H_1(X; Z/2)` is injective for the encoding graph
/// sitting inside the polyhedron it encodes.
///
/// The map is computed on a piece-level cell structure that contains `G`;
/// the `Z/2` Betti numbers of that structure are first matched against the
/// cellular chain complex of `x`.
pub fn retraction_check(g: &EncodingGraph, x: &PolyhedronModel) -> Result<bool> {
    Ok(retraction_report(g, x)?.injective())
}

pub fn retraction_report(g: &EncodingGraph, x: &PolyhedronModel) -> Result<RetractionReport> {
    if reconstruct_from_encoding(g)? != *x {
        return Err(Error::precondition("model is not the reconstruction of the encoding"));
    }
    let pc = piece_complex(g);
    let cc = build_chain_complex(x)?;
    let betti_mod2 = mod2_betti(&pc.boundary_1, &pc.boundary_2);
    let model_betti = mod2_betti(&cc.boundary_1, &cc.boundary_2);
    if betti_mod2 != model_betti {
        return Err(Error::InvariantViolation(format!(
            "piece complex has Z/2 Betti numbers {betti_mod2:?}, model has {model_betti:?}"
        )));
    }
    let basis = g.cycle_basis();
    let rows = pc.boundary_2.rows();
    let mut extended = IntMatrix::zeros(rows, pc.boundary_2.cols() + basis.len());
    for r in 0..rows {
        for c in 0..pc.boundary_2.cols() {
            extended.set(r, c, pc.boundary_2.get(r, c));
        }
    }
    for (i, cycle) in basis.iter().enumerate() {
        let col = pc.boundary_2.cols() + i;
        for &e in cycle {
            extended.add_to(2 * e, col, 1);
            extended.add_to(2 * e + 1, col, 1);
        }
    }
    let image_rank = rank_mod2(&extended) - rank_mod2(&pc.boundary_2);
    Ok(RetractionReport {
        graph_rank: basis.len(),
        betti_mod2,
        image_rank,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EncodingViolation {
    NotATree {
        cycle_rank: usize,
        components: usize,
    },
    ForbiddenPiece {
        vertex: usize,
        kind: PieceKind,
    },
    /// The double-marked edge of a `Y12` does not lead toward the boundary.
    DoubleMarkAwayFromBoundary {
        vertex: usize,
    },
}

impl fmt::Display for EncodingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EncodingViolation::NotATree { cycle_rank, components } => {
                write!(
                    f,
                    "graph is not a tree (cycle rank {cycle_rank}, {components} components)"
                )
            }
            EncodingViolation::ForbiddenPiece { vertex, kind } => write!(f, "vertex {vertex} is a {kind} piece"),
            EncodingViolation::DoubleMarkAwayFromBoundary { vertex } => {
                write!(f, "Y12 vertex {vertex} has its double mark away from the boundary")
            }
        }
    }
}

pub const MINIMAL_FORM_NOTE: &str = "checks assume the encoding is already in minimal form; no collapses are applied";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EncodingReport {
    pub violations: Vec<EncodingViolation>,
    pub homology: HomologyProfile,
    pub note: &'static str,
}

impl EncodingReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn acyclic(&self) -> bool {
        self.homology.is_acyclic()
    }

    /// Whether a clean report goes with an acyclic reconstruction.
    pub fn consistent(&self) -> bool {
        self.is_clean() == self.acyclic()
    }
}

/// Structure checks for an encoding with one boundary circle that is meant
/// to be acyclic.
pub fn acyclic_encoding_check(g: &EncodingGraph) -> Result<EncodingReport> {
    let boundary: Vec<usize> = (0..g.kinds.len()).filter(|&v| g.kinds[v] == PieceKind::B).collect();
    let &[b] = &boundary[..] else {
        return Err(Error::precondition(format!(
            "expected exactly one boundary vertex, found {}",
            boundary.len()
        )));
    };
    let model = reconstruct_from_encoding(g)?;
    let homology = homology_profile(&model)?;
    let mut violations = Vec::new();
    let f = g.forest();
    let components = f.parent.iter().filter(|p| p.is_none()).count();
    let tree = f.cotree.is_empty() && components == 1;
    if !tree {
        violations.push(EncodingViolation::NotATree {
            cycle_rank: f.cotree.len(),
            components,
        });
    }
    for (v, &kind) in g.kinds.iter().enumerate() {
        if matches!(kind, PieceKind::M2 | PieceKind::Y3 | PieceKind::Y111) {
            violations.push(EncodingViolation::ForbiddenPiece { vertex: v, kind });
        }
    }
    if tree {
        // Parent edges of a forest rooted at the boundary vertex.
        let inc = g.incidences();
        let mut toward = vec![None; g.kinds.len()];
        let mut seen = vec![false; g.kinds.len()];
        seen[b] = true;
        let mut queue = VecDeque::from([b]);
        while let Some(v) = queue.pop_front() {
            for &(e, end) in &inc[v] {
                let w = g.edges[e].ends[1 - end];
                if !seen[w] {
                    seen[w] = true;
                    toward[w] = Some((e, 1 - end));
                    queue.push_back(w);
                }
            }
        }
        for v in 0..g.kinds.len() {
            if g.kinds[v] == PieceKind::Y12 {
                let ok = toward[v].is_some_and(|(e, end)| g.edges[e].marks[end] == Some(Mark::Double));
                if !ok {
                    violations.push(EncodingViolation::DoubleMarkAwayFromBoundary { vertex: v });
                }
            }
        }
    }
    Ok(EncodingReport {
        violations,
        homology,
        note: MINIMAL_FORM_NOTE,
    })
}
