//! Combinatorial model of simple polyhedra and the integral homology of
//! their underlying 2-complexes.

pub mod chain;
pub mod graph;
pub mod homology;
pub mod model;
pub mod piece;
pub mod snf;
pub mod split;

pub use chain::{build_chain_complex, ChainComplex};
pub use graph::{other_legs, LegRef, SingularGraph, WingGluing};
pub use homology::{homology_profile, HomologyProfile};
pub use model::{BoundaryRef, CirclePiece, CircuitRef, MonodromyClass, PolyhedronModel, Slot, SurfaceRegion};
pub use piece::{trace_circuits, Circuit, Strand, Traversal, VertexPiece};
pub use snf::{smith_normal_form, IntMatrix, SmithForm, SnfMode};
pub use split::{regions_planarity_check, split_along_slots, ComponentKind, PlanarityReport, SplitReport};

/// Euler characteristic of the model, from its stratification.
pub fn euler_characteristic(model: &PolyhedronModel) -> i64 {
    model.euler_characteristic()
}

/// Caps the named boundary circles with disks.
pub fn cap_off(model: &PolyhedronModel, targets: &[BoundaryRef]) -> crate::Result<PolyhedronModel> {
    model.cap_off(targets)
}
