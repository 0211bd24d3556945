//! Combinatorial toolkit for special and simple polyhedra (Turaev shadows).
//!
//! The crate is organised bottom-up:
//!
//! * [`polyhedron`]: the combinatorial model of simple polyhedra (vertex pieces
//!   glued from cones over the complete graph on four points, singular circles,
//!   surface regions) and its exact integral homology.
//! * [`census`]: enumeration of closed special polyhedra with a fixed number of
//!   true vertices, deduplicated by a canonical key.
//! * [`cancellation`]: canceling-pair search, the cancellation condition on
//!   composite polyhedra, and ball certificates.
//! * [`kirby`]: gleams, shadow gluing and abstract Kirby diagrams.
//! * [`encoding`]: piece-graph encodings of polyhedra without vertices.
//! * [`io`] and [`cli`]: line-oriented file formats and the command-line surface.

pub mod cancellation;
pub mod census;
pub mod cli;
pub mod encoding;
mod error;
pub mod io;
pub mod kirby;
pub mod polyhedron;

pub use error::{Error, Result};
