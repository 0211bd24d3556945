use std::collections::BTreeMap;

use super::homology::{homology_profile, HomologyProfile};
use super::model::{CircuitRef, PolyhedronModel, Slot};
use crate::{Error, Result};

/// How a complementary component of a vertex piece is classified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ComponentKind {
    Acyclic,
    HomologyCircle,
    Other,
}

/// A connected component of the closure of `X minus X'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplementComponent {
    /// The component as a model of its own; slots that were glued to the
    /// removed piece are free.
    pub model: PolyhedronModel,
    /// Circuits of the removed piece that bound this component.
    pub piece_circuits: Vec<usize>,
    /// Regions of the ambient model in this component.
    pub regions: Vec<usize>,
    pub homology: HomologyProfile,
    pub kind: ComponentKind,
}

impl ComplementComponent {
    pub fn vertex_count(&self) -> usize {
        self.model.vertex_count()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitReport {
    pub piece: usize,
    pub vertex_count: usize,
    pub circuit_count: usize,
    pub components: Vec<ComplementComponent>,
}

impl SplitReport {
    pub fn count(&self, kind: ComponentKind) -> usize {
        self.components.iter().filter(|c| c.kind == kind).count()
    }
}

/// Removes vertex piece `piece` and returns the connected pieces of what is
/// left, with their homology classification, regardless of the model's own
/// homology.
pub fn complement_components(model: &PolyhedronModel, piece: usize) -> Result<Vec<ComplementComponent>> {
    let pieces = model.vertex_pieces();
    if piece >= pieces.len() {
        return Err(Error::precondition(format!("no vertex piece {piece}")));
    }
    // Union-find over nodes: other vertex pieces, circle pieces, regions.
    let nv = pieces.len();
    let nc = model.circle_pieces().len();
    let nr = model.regions().len();
    let mut parent: Vec<usize> = (0..nv + nc + nr).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (r, region) in model.regions().iter().enumerate() {
        for slot in &region.slots {
            let node = match *slot {
                Slot::Attached {
                    circuit: CircuitRef::Vertex { piece: p, .. },
                    ..
                } if p != piece => p,
                Slot::Attached {
                    circuit: CircuitRef::Circle { piece: p, .. },
                    ..
                } => nv + p,
                _ => continue,
            };
            let (a, b) = (find(&mut parent, node), find(&mut parent, nv + nc + r));
            parent[a] = b;
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for node in 0..nv + nc + nr {
        if node == piece {
            continue;
        }
        let root = find(&mut parent, node);
        groups.entry(root).or_default().push(node);
    }
    let mut components: Vec<Vec<usize>> = groups.into_values().collect();
    components.sort();

    let mut out = Vec::new();
    for nodes in components {
        let vps: Vec<usize> = nodes.iter().copied().filter(|&x| x < nv).collect();
        let cps: Vec<usize> = nodes
            .iter()
            .filter(|&&x| x >= nv && x < nv + nc)
            .map(|&x| x - nv)
            .collect();
        let region_ids: Vec<usize> = nodes.iter().filter(|&&x| x >= nv + nc).map(|&x| x - nv - nc).collect();
        let mut piece_circuits: Vec<usize> = region_ids
            .iter()
            .flat_map(|&r| model.regions()[r].slots.iter())
            .filter_map(|s| match *s {
                Slot::Attached {
                    circuit: CircuitRef::Vertex { piece: p, circuit },
                    ..
                } if p == piece => Some(circuit),
                _ => None,
            })
            .collect();
        piece_circuits.sort_unstable();
        let sub = model.restrict(&vps, &cps, &region_ids)?;
        let homology = homology_profile(&sub)?;
        let kind = if homology.is_acyclic() {
            ComponentKind::Acyclic
        } else if homology.is_homology_circle() {
            ComponentKind::HomologyCircle
        } else {
            ComponentKind::Other
        };
        out.push(ComplementComponent {
            model: sub,
            piece_circuits,
            regions: region_ids,
            homology,
            kind,
        });
    }
    Ok(out)
}

/// Splits a closed acyclic model along the boundary circuits of one vertex
/// piece with `n` vertices and `m` circuits.
///
/// The complement must consist of `n + 1` acyclic components and `m - n - 1`
/// homology circles, each of the latter containing a true vertex; anything
/// else is reported as an invariant violation.
pub fn split_along_slots(model: &PolyhedronModel, piece: usize) -> Result<SplitReport> {
    if !model.is_closed() {
        return Err(Error::precondition("split_along_slots requires a closed model"));
    }
    let h = homology_profile(model)?;
    if !h.is_acyclic() {
        return Err(Error::precondition(format!("model is not acyclic ({h})")));
    }
    let components = complement_components(model, piece)?;
    let p = &model.vertex_pieces()[piece];
    let report = SplitReport {
        piece,
        vertex_count: p.vertex_count(),
        circuit_count: p.circuits().len(),
        components,
    };
    let n = report.vertex_count;
    let m = report.circuit_count;
    let acyclic = report.count(ComponentKind::Acyclic);
    let circles = report.count(ComponentKind::HomologyCircle);
    if m < n + 1 || acyclic != n + 1 || circles != m - n - 1 || report.count(ComponentKind::Other) > 0 {
        return Err(Error::InvariantViolation(format!(
            "piece {piece} with {n} vertices and {m} circuits splits into {acyclic} acyclic and {circles} homology-circle components (of {})",
            report.components.len()
        )));
    }
    if let Some(c) = report
        .components
        .iter()
        .find(|c| c.kind == ComponentKind::HomologyCircle && c.vertex_count() == 0)
    {
        return Err(Error::InvariantViolation(format!(
            "homology-circle component on circuits {:?} has no true vertex",
            c.piece_circuits
        )));
    }
    Ok(report)
}

/// Regions that are not spheres with holes, and consistency of that list
/// with the model's homology.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarityReport {
    pub nonplanar_regions: Vec<usize>,
    pub acyclic: bool,
    pub has_boundary: bool,
    pub violations: Vec<String>,
}

impl PlanarityReport {
    pub fn into_result(self) -> Result<PlanarityReport> {
        if self.violations.is_empty() {
            Ok(self)
        } else {
            Err(Error::InvariantViolation(self.violations.join("; ")))
        }
    }
}

pub fn regions_planarity_check(model: &PolyhedronModel) -> Result<PlanarityReport> {
    Ok(regions_planarity_check_with(model, &homology_profile(model)?))
}

/// As [`regions_planarity_check`], trusting the supplied homology.
pub fn regions_planarity_check_with(model: &PolyhedronModel, homology: &HomologyProfile) -> PlanarityReport {
    let nonplanar_regions: Vec<usize> = model
        .regions()
        .iter()
        .enumerate()
        .filter(|(_, r)| r.genus > 0 || !r.orientable)
        .map(|(i, _)| i)
        .collect();
    let acyclic = homology.is_acyclic();
    let has_boundary = !model.is_closed();
    let mut violations = Vec::new();
    if acyclic && !nonplanar_regions.is_empty() {
        violations.push(format!(
            "acyclic model has regions {nonplanar_regions:?} that are not spheres with holes"
        ));
    }
    if acyclic && model.vertex_count() == 0 && !has_boundary {
        violations.push("acyclic model without vertices has empty boundary".into());
    }
    PlanarityReport {
        nonplanar_regions,
        acyclic,
        has_boundary,
        violations,
    }
}
