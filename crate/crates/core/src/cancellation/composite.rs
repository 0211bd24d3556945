use std::collections::BTreeMap;

use super::pairs::{admits_canceling_pairs, CancelingSearch, CancelingWitness};
use super::trees::Dsu;
use crate::polyhedron::{homology_profile, CircuitRef, HomologyProfile, PolyhedronModel, Slot};
use crate::{Error, Result};

/// The check applied to one vertex piece of a closed polyhedron.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PieceCheck {
    pub piece: usize,
    pub vertex_count: usize,
    pub circuit_count: usize,
    /// Search result on the capped piece; `None` when the piece does not
    /// have exactly one more circuit than vertices and so imposes nothing.
    pub search: Option<CancelingSearch>,
}

impl PieceCheck {
    pub fn qualifies(&self) -> bool {
        self.search.is_some()
    }

    pub fn passes(&self) -> bool {
        self.search.as_ref().is_none_or(CancelingSearch::admits)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    pub pieces: Vec<PieceCheck>,
}

impl ConditionReport {
    pub fn holds(&self) -> bool {
        self.pieces.iter().all(PieceCheck::passes)
    }

    pub fn witnesses(&self) -> Vec<(usize, CancelingWitness)> {
        self.pieces
            .iter()
            .filter_map(|p| Some((p.piece, p.search.as_ref()?.witness.clone()?)))
            .collect()
    }
}

/// Caps every vertex piece with `#circuits = #vertices + 1` and asks whether
/// the resulting special polyhedron admits a full canceling sequence.
pub fn cancellation_condition(x: &PolyhedronModel) -> Result<ConditionReport> {
    if !x.is_closed() {
        return Err(Error::precondition(
            "the cancellation condition is defined for closed polyhedra",
        ));
    }
    let mut pieces = Vec::new();
    for (p, piece) in x.vertex_pieces().iter().enumerate() {
        let n = piece.vertex_count();
        let m = piece.circuits().len();
        let search = if m == n + 1 {
            let capped = PolyhedronModel::new(vec![piece.clone()], vec![], vec![])?.cap_all()?;
            if capped.regions().len() != n + 1 {
                return Err(Error::Internal("capped piece has the wrong region count".into()));
            }
            Some(admits_canceling_pairs(&capped)?)
        } else {
            None
        };
        pieces.push(PieceCheck {
            piece: p,
            vertex_count: n,
            circuit_count: m,
            search,
        });
    }
    Ok(ConditionReport { pieces })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BipartiteEdge {
    pub x: usize,
    pub y: usize,
    pub label: u8,
}

/// Vertex pieces (`X`) against components of the rest (`Y`), joined once per
/// boundary circuit of a vertex piece.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteTree {
    pub x_count: usize,
    pub y_count: usize,
    pub edges: Vec<BipartiteEdge>,
}

impl BipartiteTree {
    pub fn is_tree(&self) -> bool {
        let nodes = self.x_count + self.y_count;
        if nodes == 0 || self.edges.len() + 1 != nodes {
            return false;
        }
        let mut dsu = Dsu::new(nodes);
        self.edges
            .iter()
            .all(|e| e.x < self.x_count && e.y < self.y_count && dsu.union(e.x, self.x_count + e.y))
    }
}

/// Builds the bipartite graph of a closed acyclic polyhedron and labels each
/// edge by the homology of the side of the cut containing its `Y` end:
/// `0` for acyclic, `1` for a homology circle.
pub fn build_bipartite_tree(x: &PolyhedronModel) -> Result<BipartiteTree> {
    if !x.is_closed() || x.vertex_pieces().is_empty() {
        return Err(Error::precondition(
            "bipartite tree needs a closed polyhedron with a vertex piece",
        ));
    }
    let h = homology_profile(x)?;
    if !h.is_acyclic() {
        return Err(Error::precondition(format!("model is not acyclic ({h})")));
    }
    let nc = x.circle_pieces().len();
    let nr = x.regions().len();
    // Y components: circle pieces and regions, joined by attachments.
    let mut dsu = Dsu::new(nc + nr);
    for (r, region) in x.regions().iter().enumerate() {
        for slot in &region.slots {
            if let Slot::Attached {
                circuit: CircuitRef::Circle { piece, .. },
                ..
            } = *slot
            {
                dsu.union(piece, nc + r);
            }
        }
    }
    let mut y_of_root = BTreeMap::new();
    let mut y_nodes: Vec<Vec<usize>> = Vec::new();
    for node in 0..nc + nr {
        let root = dsu.find(node);
        let y = *y_of_root.entry(root).or_insert_with(|| {
            y_nodes.push(Vec::new());
            y_nodes.len() - 1
        });
        y_nodes[y].push(node);
    }
    let mut raw = Vec::new();
    for (p, piece) in x.vertex_pieces().iter().enumerate() {
        for c in 0..piece.circuits().len() {
            let (r, _) = x
                .slot_of(CircuitRef::Vertex { piece: p, circuit: c })
                .ok_or_else(|| Error::Internal("closed model has an unattached circuit".into()))?;
            raw.push((p, y_of_root[&dsu.find(nc + r)]));
        }
    }
    let mut tree = BipartiteTree {
        x_count: x.vertex_pieces().len(),
        y_count: y_nodes.len(),
        edges: raw.iter().map(|&(x, y)| BipartiteEdge { x, y, label: 0 }).collect(),
    };
    if !tree.is_tree() {
        return Err(Error::InvariantViolation(
            "the piece graph of an acyclic polyhedron is not a tree".into(),
        ));
    }
    for i in 0..tree.edges.len() {
        let side = far_side(&tree, i);
        let vps: Vec<usize> = (0..tree.x_count).filter(|&v| side[v]).collect();
        let mut cps = Vec::new();
        let mut regions = Vec::new();
        for (y, nodes) in y_nodes.iter().enumerate() {
            if side[tree.x_count + y] {
                for &node in nodes {
                    if node < nc {
                        cps.push(node);
                    } else {
                        regions.push(node - nc);
                    }
                }
            }
        }
        cps.sort_unstable();
        regions.sort_unstable();
        let h = homology_profile(&x.restrict(&vps, &cps, &regions)?)?;
        tree.edges[i].label = label_for(&h)?;
    }
    Ok(tree)
}

fn label_for(h: &HomologyProfile) -> Result<u8> {
    if h.is_acyclic() {
        Ok(0)
    } else if h.is_homology_circle() {
        Ok(1)
    } else {
        Err(Error::InvariantViolation(format!(
            "a side of the piece tree is neither acyclic nor a homology circle ({h})"
        )))
    }
}

/// Nodes (X first, then Y) reachable from the `Y` end of edge `skip` without it.
fn far_side(t: &BipartiteTree, skip: usize) -> Vec<bool> {
    let nodes = t.x_count + t.y_count;
    let mut seen = vec![false; nodes];
    let start = t.x_count + t.edges[skip].y;
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for (i, e) in t.edges.iter().enumerate() {
            if i == skip {
                continue;
            }
            let (a, b) = (e.x, t.x_count + e.y);
            let w = if a == v {
                b
            } else if b == v {
                a
            } else {
                continue;
            };
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen
}

/// Finds a `Y` vertex all of whose edges are labeled `1`.
///
/// Walks from `X_0`, leaving each `X` by a 1-edge and each `Y` by a 0-edge;
/// in a tree the walk never repeats an edge, so it stops at such a `Y`.
/// Returns `None` if some `X` vertex has no 1-edge.
pub fn find_all_one_y_vertex(t: &BipartiteTree) -> Result<Option<usize>> {
    if !t.is_tree() {
        return Err(Error::precondition("labeled graph is not a tree"));
    }
    let has_one = |x: usize| t.edges.iter().any(|e| e.x == x && e.label == 1);
    if !(0..t.x_count).all(has_one) {
        return Ok(None);
    }
    if t.x_count == 0 {
        return Ok(None);
    }
    let mut x = 0;
    let mut arrived: Option<usize> = None;
    for _ in 0..=t.edges.len() {
        let (i, e) = t
            .edges
            .iter()
            .enumerate()
            .find(|&(i, e)| e.x == x && e.label == 1 && Some(i) != arrived)
            .ok_or_else(|| Error::InvariantViolation(format!("walk stuck at X{x}")))?;
        let y = e.y;
        match t
            .edges
            .iter()
            .enumerate()
            .find(|&(j, f)| f.y == y && f.label == 0 && j != i)
        {
            None => return Ok(Some(y)),
            Some((j, f)) => {
                x = f.x;
                arrived = Some(j);
            }
        }
    }
    Err(Error::InvariantViolation("walk did not terminate on a tree".into()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BallCertificate {
    pub homology: HomologyProfile,
    /// One witness per qualifying vertex piece.
    pub witnesses: Vec<(usize, CancelingWitness)>,
    /// Pieces that impose no requirement.
    pub non_qualifying: Vec<usize>,
    /// Facts taken on trust rather than checked.
    pub hypotheses: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertifyFailure {
    NotClosed,
    NotAcyclic(HomologyProfile),
    NoCancelingSequence { piece: usize },
}

impl std::fmt::Display for CertifyFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CertifyFailure::NotClosed => f.write_str("not closed"),
            CertifyFailure::NotAcyclic(h) => write!(f, "not acyclic ({h})"),
            CertifyFailure::NoCancelingSequence { piece } => {
                write!(f, "vertex piece {piece} admits no full canceling sequence")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certification {
    Certified(BallCertificate),
    Failed(Vec<CertifyFailure>),
}

pub const BOUNDARY_HYPOTHESIS: &str = "boundary of the 4-dimensional thickening is the 3-sphere (assumed)";

/// Checks acyclicity and the cancellation condition; on success the
/// polyhedron is a shadow of the 4-ball under the recorded hypothesis.
pub fn certify_ball(x: &PolyhedronModel) -> Result<Certification> {
    let mut failures = Vec::new();
    let homology = homology_profile(x)?;
    if !x.is_closed() {
        failures.push(CertifyFailure::NotClosed);
    }
    if !homology.is_acyclic() {
        failures.push(CertifyFailure::NotAcyclic(homology.clone()));
    }
    if !x.is_closed() {
        return Ok(Certification::Failed(failures));
    }
    let report = cancellation_condition(x)?;
    for p in &report.pieces {
        if !p.passes() {
            failures.push(CertifyFailure::NoCancelingSequence { piece: p.piece });
        }
    }
    if !failures.is_empty() {
        return Ok(Certification::Failed(failures));
    }
    Ok(Certification::Certified(BallCertificate {
        homology,
        witnesses: report.witnesses(),
        non_qualifying: report
            .pieces
            .iter()
            .filter(|p| !p.qualifies())
            .map(|p| p.piece)
            .collect(),
        hypotheses: vec![BOUNDARY_HYPOTHESIS.to_string()],
    }))
}
