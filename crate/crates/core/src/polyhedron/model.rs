use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::piece::VertexPiece;
use crate::{Error, Result};

/// Monodromy of a Y-bundle over the circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MonodromyClass {
    /// `Y111`: three boundary circles, each wrapping once.
    Trivial,
    /// `Y12`: one circle wrapping once and one wrapping twice.
    Transposition,
    /// `Y3`: a single circle wrapping three times.
    ThreeCycle,
}

impl MonodromyClass {
    /// How many times each boundary circuit wraps around the core, in
    /// circuit order. Circuits are the orbits of the monodromy on the three
    /// prongs, ordered by their smallest prong.
    pub fn wraps(self) -> &'static [i64] {
        match self {
            MonodromyClass::Trivial => &[1, 1, 1],
            MonodromyClass::Transposition => &[1, 2],
            MonodromyClass::ThreeCycle => &[3],
        }
    }

    pub fn circuit_count(self) -> usize {
        self.wraps().len()
    }

    /// The monodromy as a permutation of the prongs `0, 1, 2`.
    pub fn permutation(self) -> [usize; 3] {
        match self {
            MonodromyClass::Trivial => [0, 1, 2],
            MonodromyClass::Transposition => [0, 2, 1],
            MonodromyClass::ThreeCycle => [1, 2, 0],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MonodromyClass::Trivial => "trivial",
            MonodromyClass::Transposition => "transposition",
            MonodromyClass::ThreeCycle => "three_cycle",
        }
    }
}

impl fmt::Display for MonodromyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MonodromyClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trivial" => Ok(MonodromyClass::Trivial),
            "transposition" => Ok(MonodromyClass::Transposition),
            "three_cycle" => Ok(MonodromyClass::ThreeCycle),
            _ => Err(Error::structural(format!("unknown monodromy class {s:?}"))),
        }
    }
}

/// A singular circle without vertices, with a neighbourhood that is a Y-bundle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CirclePiece {
    pub monodromy: MonodromyClass,
}

/// A boundary circuit of one of the pieces of a model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CircuitRef {
    Vertex { piece: usize, circuit: usize },
    Circle { piece: usize, circuit: usize },
}

/// One boundary circle of a surface region.
///
/// An attached slot is glued to a piece circuit; `reversed` records that the
/// region's boundary orientation runs against the circuit's own direction.
/// A free slot is a boundary circle of the polyhedron.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slot {
    Attached { circuit: CircuitRef, reversed: bool },
    Free,
}

impl Slot {
    pub fn attached(circuit: CircuitRef) -> Slot {
        Slot::Attached {
            circuit,
            reversed: false,
        }
    }
}

/// The closure of a region: a compact surface with numbered boundary slots.
///
/// For non-orientable regions `genus` counts crosscaps and must be positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SurfaceRegion {
    pub genus: u32,
    pub orientable: bool,
    pub slots: Vec<Slot>,
}

impl SurfaceRegion {
    pub fn disk(slot: Slot) -> Self {
        SurfaceRegion {
            genus: 0,
            orientable: true,
            slots: vec![slot],
        }
    }

    pub fn is_disk(&self) -> bool {
        self.genus == 0 && self.orientable && self.slots.len() == 1
    }

    /// Euler characteristic of the closed-up surface with its boundary circles.
    pub fn euler_characteristic(&self) -> i64 {
        let b = self.slots.len() as i64;
        let g = self.genus as i64;
        if self.orientable {
            2 - 2 * g - b
        } else {
            2 - g - b
        }
    }

    fn free_slots(&self) -> impl Iterator<Item = usize> + '_ {
        self.slots
            .iter()
            .enumerate()
            .filter(|(_, s)| matches!(s, Slot::Free))
            .map(|(i, _)| i)
    }
}

/// A boundary circle of a model: either a piece circuit with no region on it
/// or a free slot of a region.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundaryRef {
    Circuit(CircuitRef),
    FreeSlot { region: usize, slot: usize },
}

/// An abstract simple polyhedron assembled from pieces and regions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyhedronModel {
    vertex_pieces: Vec<VertexPiece>,
    circle_pieces: Vec<CirclePiece>,
    regions: Vec<SurfaceRegion>,
}

impl PolyhedronModel {
    pub fn new(
        vertex_pieces: Vec<VertexPiece>,
        circle_pieces: Vec<CirclePiece>,
        regions: Vec<SurfaceRegion>,
    ) -> Result<Self> {
        let model = PolyhedronModel {
            vertex_pieces,
            circle_pieces,
            regions,
        };
        model.validate()?;
        Ok(model)
    }

    /// The closed special polyhedron whose regions are disks on every circuit
    /// of `piece`.
    pub fn special(piece: VertexPiece) -> Self {
        let regions = (0..piece.circuits().len())
            .map(|c| SurfaceRegion::disk(Slot::attached(CircuitRef::Vertex { piece: 0, circuit: c })))
            .collect();
        PolyhedronModel {
            vertex_pieces: vec![piece],
            circle_pieces: Vec::new(),
            regions,
        }
    }

    /// The disk, with one free boundary circle.
    pub fn disk() -> Self {
        PolyhedronModel {
            vertex_pieces: Vec::new(),
            circle_pieces: Vec::new(),
            regions: vec![SurfaceRegion::disk(Slot::Free)],
        }
    }

    fn validate(&self) -> Result<()> {
        let mut used = BTreeSet::new();
        for (r, region) in self.regions.iter().enumerate() {
            if !region.orientable && region.genus == 0 {
                return Err(Error::structural(format!(
                    "region {r} is non-orientable with no crosscaps"
                )));
            }
            for slot in &region.slots {
                if let Slot::Attached { circuit, .. } = *slot {
                    self.check_circuit(circuit)?;
                    if !used.insert(circuit) {
                        return Err(Error::structural(format!(
                            "circuit {circuit:?} is attached to more than one slot"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_circuit(&self, c: CircuitRef) -> Result<()> {
        let ok = match c {
            CircuitRef::Vertex { piece, circuit } => self
                .vertex_pieces
                .get(piece)
                .is_some_and(|p| circuit < p.circuits().len()),
            CircuitRef::Circle { piece, circuit } => self
                .circle_pieces
                .get(piece)
                .is_some_and(|p| circuit < p.monodromy.circuit_count()),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::structural(format!("no such circuit {c:?}")))
        }
    }

    pub fn vertex_pieces(&self) -> &[VertexPiece] {
        &self.vertex_pieces
    }

    pub fn circle_pieces(&self) -> &[CirclePiece] {
        &self.circle_pieces
    }

    pub fn regions(&self) -> &[SurfaceRegion] {
        &self.regions
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_pieces.iter().map(VertexPiece::vertex_count).sum()
    }

    /// Every circuit of every piece, vertex pieces first.
    pub fn all_circuits(&self) -> Vec<CircuitRef> {
        let mut out = Vec::new();
        for (p, piece) in self.vertex_pieces.iter().enumerate() {
            for c in 0..piece.circuits().len() {
                out.push(CircuitRef::Vertex { piece: p, circuit: c });
            }
        }
        for (p, piece) in self.circle_pieces.iter().enumerate() {
            for c in 0..piece.monodromy.circuit_count() {
                out.push(CircuitRef::Circle { piece: p, circuit: c });
            }
        }
        out
    }

    /// The region slot a circuit is attached to, if any.
    pub fn slot_of(&self, c: CircuitRef) -> Option<(usize, usize)> {
        self.regions.iter().enumerate().find_map(|(r, region)| {
            region
                .slots
                .iter()
                .position(|s| matches!(s, Slot::Attached { circuit, .. } if *circuit == c))
                .map(|i| (r, i))
        })
    }

    /// All boundary circles: unmatched piece circuits, then free slots.
    pub fn boundary(&self) -> Vec<BoundaryRef> {
        let attached: BTreeSet<CircuitRef> = self
            .regions
            .iter()
            .flat_map(|r| r.slots.iter())
            .filter_map(|s| match s {
                Slot::Attached { circuit, .. } => Some(*circuit),
                Slot::Free => None,
            })
            .collect();
        let mut out: Vec<BoundaryRef> = self
            .all_circuits()
            .into_iter()
            .filter(|c| !attached.contains(c))
            .map(BoundaryRef::Circuit)
            .collect();
        for (r, region) in self.regions.iter().enumerate() {
            out.extend(
                region
                    .free_slots()
                    .map(|slot| BoundaryRef::FreeSlot { region: r, slot }),
            );
        }
        out
    }

    pub fn is_closed(&self) -> bool {
        self.boundary().is_empty()
    }

    /// Whether the model is a special polyhedron: the disk, or a closed
    /// polyhedron with one connected vertex piece and only disk regions.
    pub fn is_special(&self) -> bool {
        if *self == PolyhedronModel::disk() {
            return true;
        }
        self.circle_pieces.is_empty()
            && self.vertex_pieces.len() == 1
            && self.vertex_pieces[0].graph().is_connected()
            && self.regions.iter().all(SurfaceRegion::is_disk)
            && self.is_closed()
    }

    /// Euler characteristic from the stratification: graph vertices minus
    /// graph edges plus the characteristics of the closed-up regions.
    pub fn euler_characteristic(&self) -> i64 {
        let v: i64 = self.vertex_pieces.iter().map(|p| p.vertex_count() as i64).sum();
        let e: i64 = self.vertex_pieces.iter().map(|p| p.edge_count() as i64).sum();
        v - e
            + self
                .regions
                .iter()
                .map(SurfaceRegion::euler_characteristic)
                .sum::<i64>()
    }

    /// Caps each named boundary circle with a disk.
    ///
    /// An unmatched circuit gets a new disk region; a free slot is filled in,
    /// which removes it from its region.
    pub fn cap_off(&self, targets: &[BoundaryRef]) -> Result<PolyhedronModel> {
        let boundary: BTreeSet<BoundaryRef> = self.boundary().into_iter().collect();
        let mut seen = BTreeSet::new();
        for t in targets {
            if !boundary.contains(t) {
                return Err(Error::precondition(format!(
                    "{t:?} is not a boundary circle of the model (already capped or unknown)"
                )));
            }
            if !seen.insert(*t) {
                return Err(Error::precondition(format!("{t:?} named twice")));
            }
        }
        let mut regions = self.regions.clone();
        let mut drop: Vec<(usize, usize)> = Vec::new();
        for t in targets {
            match *t {
                BoundaryRef::Circuit(c) => regions.push(SurfaceRegion::disk(Slot::attached(c))),
                BoundaryRef::FreeSlot { region, slot } => drop.push((region, slot)),
            }
        }
        drop.sort_unstable_by(|a, b| b.cmp(a));
        for (region, slot) in drop {
            regions[region].slots.remove(slot);
        }
        PolyhedronModel::new(self.vertex_pieces.clone(), self.circle_pieces.clone(), regions)
    }

    /// Caps every boundary circle.
    pub fn cap_all(&self) -> Result<PolyhedronModel> {
        self.cap_off(&self.boundary())
    }

    /// Disjoint union; indices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &PolyhedronModel) -> PolyhedronModel {
        let dv = self.vertex_pieces.len();
        let dc = self.circle_pieces.len();
        let mut regions = self.regions.clone();
        for region in &other.regions {
            let mut region = region.clone();
            for slot in &mut region.slots {
                if let Slot::Attached { circuit, .. } = slot {
                    *circuit = shift(*circuit, dv, dc);
                }
            }
            regions.push(region);
        }
        PolyhedronModel {
            vertex_pieces: [self.vertex_pieces.clone(), other.vertex_pieces.clone()].concat(),
            circle_pieces: [self.circle_pieces.clone(), other.circle_pieces.clone()].concat(),
            regions,
        }
    }

    /// The sub-polyhedron made of the listed pieces and regions, renumbered
    /// in the given order. Slots glued to a piece left out become free.
    pub fn restrict(
        &self,
        vertex_pieces: &[usize],
        circle_pieces: &[usize],
        regions: &[usize],
    ) -> Result<PolyhedronModel> {
        let vmap = |p: usize| vertex_pieces.iter().position(|&x| x == p);
        let cmap = |p: usize| circle_pieces.iter().position(|&x| x == p);
        let mut out = Vec::with_capacity(regions.len());
        for &r in regions {
            let src = self
                .regions
                .get(r)
                .ok_or_else(|| Error::precondition(format!("no region {r}")))?;
            let slots = src
                .slots
                .iter()
                .map(|slot| match *slot {
                    Slot::Attached { circuit, reversed } => {
                        let mapped = match circuit {
                            CircuitRef::Vertex { piece, circuit } => {
                                vmap(piece).map(|piece| CircuitRef::Vertex { piece, circuit })
                            }
                            CircuitRef::Circle { piece, circuit } => {
                                cmap(piece).map(|piece| CircuitRef::Circle { piece, circuit })
                            }
                        };
                        mapped.map_or(Slot::Free, |circuit| Slot::Attached { circuit, reversed })
                    }
                    Slot::Free => Slot::Free,
                })
                .collect();
            out.push(SurfaceRegion {
                genus: src.genus,
                orientable: src.orientable,
                slots,
            });
        }
        let vps = vertex_pieces
            .iter()
            .map(|&p| {
                self.vertex_pieces
                    .get(p)
                    .cloned()
                    .ok_or_else(|| Error::precondition(format!("no vertex piece {p}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let cps = circle_pieces
            .iter()
            .map(|&p| {
                self.circle_pieces
                    .get(p)
                    .copied()
                    .ok_or_else(|| Error::precondition(format!("no circle piece {p}")))
            })
            .collect::<Result<Vec<_>>>()?;
        PolyhedronModel::new(vps, cps, out)
    }

    /// Replaces the regions, keeping the pieces.
    pub fn with_regions(&self, regions: Vec<SurfaceRegion>) -> Result<PolyhedronModel> {
        PolyhedronModel::new(self.vertex_pieces.clone(), self.circle_pieces.clone(), regions)
    }
}

pub(crate) fn shift(c: CircuitRef, dv: usize, dc: usize) -> CircuitRef {
    match c {
        CircuitRef::Vertex { piece, circuit } => CircuitRef::Vertex {
            piece: piece + dv,
            circuit,
        },
        CircuitRef::Circle { piece, circuit } => CircuitRef::Circle {
            piece: piece + dc,
            circuit,
        },
    }
}
