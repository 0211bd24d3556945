//! Gleams, gluing of shadowed polyhedra and abstract Kirby diagrams.
//!
//! A Kirby diagram is kept as incidence data only: which 2-handle
//! components run through which dotted circles, how many times and with
//! what algebraic sign. No planar picture is ever built.

use std::collections::BTreeMap;

use crate::cancellation::{CancelingSequence, MaximalTree};
use crate::polyhedron::{BoundaryRef, CircuitRef, PolyhedronModel, Slot, SurfaceRegion};
use crate::{Error, Result};

/// A polyhedron with a gleam on every region, stored doubled so that
/// half-integers are exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShadowedPolyhedron {
    pub model: PolyhedronModel,
    pub doubled_gleams: Vec<i64>,
}

impl ShadowedPolyhedron {
    pub fn new(model: PolyhedronModel, doubled_gleams: Vec<i64>) -> Result<Self> {
        if doubled_gleams.len() != model.regions().len() {
            return Err(Error::precondition(format!(
                "{} gleams for {} regions",
                doubled_gleams.len(),
                model.regions().len()
            )));
        }
        Ok(ShadowedPolyhedron { model, doubled_gleams })
    }
}

/// Passes of a component through one dotted circle.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Incidence {
    pub geometric: usize,
    pub signed: i64,
}

/// A framed 2-handle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KirbyComponent {
    /// Region the handle came from.
    pub id: usize,
    /// Framing, doubled.
    pub doubled_framing: i64,
    /// Labels of knots summed in from outside the diagram.
    pub tags: Vec<String>,
    /// Nonzero incidences keyed by dotted-circle id.
    pub incidence: BTreeMap<usize, Incidence>,
}

impl KirbyComponent {
    pub fn through(&self, u: usize) -> Incidence {
        self.incidence.get(&u).copied().unwrap_or_default()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KirbyData {
    pub components: Vec<KirbyComponent>,
    /// Dotted-circle ids; a dotted circle is named by its singular edge.
    pub dotted_circles: Vec<usize>,
}

impl KirbyData {
    pub fn component_index(&self, id: usize) -> Option<usize> {
        self.components.iter().position(|c| c.id == id)
    }

    /// One framed knot and one dotted circle.
    pub fn is_terminal(&self) -> bool {
        self.components.len() == 1 && self.dotted_circles.len() == 1
    }

    pub fn total_geometric(&self, u: usize) -> usize {
        self.components.iter().map(|c| c.through(u).geometric).sum()
    }
}

/// One component per region, one dotted circle per edge outside `t`.
pub fn shadow_to_kirby(x: &ShadowedPolyhedron, t: &MaximalTree) -> Result<KirbyData> {
    let m = &x.model;
    if !m.is_special() || !m.is_closed() || m.vertex_pieces().is_empty() {
        return Err(Error::precondition(
            "Kirby export needs a closed special polyhedron with vertices",
        ));
    }
    let piece = &m.vertex_pieces()[0];
    if !t.is_spanning_tree_of(piece.graph()) {
        return Err(Error::precondition("not a maximal tree of the singular graph"));
    }
    let dotted = t.complement(piece.edge_count());
    let mut components = Vec::with_capacity(m.regions().len());
    for (r, region) in m.regions().iter().enumerate() {
        let circuit = match region.slots[..] {
            [Slot::Attached {
                circuit: CircuitRef::Vertex { circuit, .. },
                ..
            }] => &piece.circuits()[circuit],
            _ => return Err(Error::Internal("special region without a vertex circuit".into())),
        };
        let incidence = dotted
            .iter()
            .map(|&u| {
                (
                    u,
                    Incidence {
                        geometric: circuit.geometric_count(u),
                        signed: circuit.signed_count(u),
                    },
                )
            })
            .filter(|(_, i)| i.geometric > 0)
            .collect();
        components.push(KirbyComponent {
            id: r,
            doubled_framing: x.doubled_gleams[r],
            tags: Vec::new(),
            incidence,
        });
    }
    Ok(KirbyData {
        components,
        dotted_circles: dotted,
    })
}

/// Cancels dotted circle `u` against component `c`, which must pass it
/// exactly once.
///
/// Every other component passing `u` is slid over `c` once per pass, so it
/// gains `c`'s passes through the remaining dotted circles: geometric
/// counts add, and signed counts add with the orientation that cancels the
/// pass through `u`. Tags of `c` are appended to every component that slid.
/// Framings are carried unchanged since linking data is not tracked.
pub fn cancel_handle_pair(k: &KirbyData, u: usize, c: usize) -> Result<KirbyData> {
    let ci = k
        .component_index(c)
        .ok_or_else(|| Error::precondition(format!("no component C{c}")))?;
    if !k.dotted_circles.contains(&u) {
        return Err(Error::precondition(format!("no dotted circle U{u}")));
    }
    let pass = k.components[ci].through(u);
    if pass.geometric != 1 {
        return Err(Error::precondition(format!(
            "C{c} passes U{u} {} times, not once",
            pass.geometric
        )));
    }
    let sigma = pass.signed;
    let canceled = k.components[ci].clone();
    let mut components = Vec::with_capacity(k.components.len() - 1);
    for (i, comp) in k.components.iter().enumerate() {
        if i == ci {
            continue;
        }
        let mut comp = comp.clone();
        if let Some(p) = comp.incidence.remove(&u) {
            if p.geometric > 0 {
                for (&v, q) in &canceled.incidence {
                    if v == u {
                        continue;
                    }
                    let e = comp.incidence.entry(v).or_default();
                    e.geometric += p.geometric * q.geometric;
                    e.signed -= sigma * p.signed * q.signed;
                }
                comp.tags.extend(canceled.tags.iter().cloned());
            }
        }
        comp.incidence.retain(|_, i| i.geometric > 0);
        components.push(comp);
    }
    Ok(KirbyData {
        components,
        dotted_circles: k.dotted_circles.iter().copied().filter(|&v| v != u).collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simplified {
    pub data: KirbyData,
    pub terminal: bool,
}

/// Applies [`cancel_handle_pair`] along a canceling sequence, in order.
pub fn simplify_kirby(k: &KirbyData, witness: &CancelingSequence) -> Result<Simplified> {
    let mut data = k.clone();
    for (step, &(u, c)) in witness.pairs.iter().enumerate() {
        data = cancel_handle_pair(&data, u, c).map_err(|e| match e {
            Error::Precondition(m) => Error::Precondition(format!("step {step} (U{u}, C{c}): {m}")),
            other => other,
        })?;
    }
    let terminal = data.is_terminal();
    Ok(Simplified { data, terminal })
}

/// Appends a summand tag to component `c`.
pub fn attach_external_summand(k: &KirbyData, c: usize, label: &str) -> Result<KirbyData> {
    let ci = k
        .component_index(c)
        .ok_or_else(|| Error::precondition(format!("no component C{c}")))?;
    let mut out = k.clone();
    out.components[ci].tags.push(label.to_string());
    Ok(out)
}

/// Glues two shadowed polyhedra along free boundary circles, merging the two
/// regions that carry them into one region whose gleam is the sum.
///
/// The merged region takes the place of `ka`'s region; regions of `b` follow
/// those of `a`, with `kb`'s region removed.
pub fn glue_shadows_along_knots(
    a: &ShadowedPolyhedron,
    ka: BoundaryRef,
    b: &ShadowedPolyhedron,
    kb: BoundaryRef,
) -> Result<ShadowedPolyhedron> {
    let free = |x: &ShadowedPolyhedron, k: BoundaryRef| match k {
        BoundaryRef::FreeSlot { region, slot }
            if x.model.regions().get(region).and_then(|r| r.slots.get(slot)) == Some(&Slot::Free) =>
        {
            Ok((region, slot))
        }
        _ => Err(Error::precondition(format!("{k:?} is not a free slot of a region"))),
    };
    let (ra, sa) = free(a, ka)?;
    let (rb, sb) = free(b, kb)?;
    let union = a.model.disjoint_union(&b.model);
    let na = a.model.regions().len();
    let ra_region = &union.regions()[ra];
    let rb_region = &union.regions()[na + rb];
    let mut slots: Vec<Slot> = ra_region.slots.clone();
    slots.remove(sa);
    let mut b_slots = rb_region.slots.clone();
    b_slots.remove(sb);
    slots.extend(b_slots);
    let crosscaps = |r: &SurfaceRegion| if r.orientable { 2 * r.genus } else { r.genus };
    let merged = if ra_region.orientable && rb_region.orientable {
        SurfaceRegion {
            genus: ra_region.genus + rb_region.genus,
            orientable: true,
            slots,
        }
    } else {
        SurfaceRegion {
            genus: crosscaps(ra_region) + crosscaps(rb_region),
            orientable: false,
            slots,
        }
    };
    let mut regions = union.regions().to_vec();
    let mut gleams = [a.doubled_gleams.clone(), b.doubled_gleams.clone()].concat();
    regions[ra] = merged;
    gleams[ra] += gleams[na + rb];
    regions.remove(na + rb);
    gleams.remove(na + rb);
    ShadowedPolyhedron::new(union.with_regions(regions)?, gleams)
}
