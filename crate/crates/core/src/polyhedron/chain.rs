//! Cellular chain complex of a model.
//!
//! Cells, in index order within each dimension:
//!
//! * 0-cells: the vertices of each vertex piece; one point on the core of
//!   each circle piece; then, region by region, a fresh point on each free
//!   slot, or a single fresh base point if the region has no slots.
//! * 1-cells: the edges of each vertex piece (oriented tail to head); the
//!   core loop of each circle piece; then, region by region, a loop on each
//!   free slot, spokes from the base point of slot 0 to the base point of
//!   every later slot, and the surface loops `a1 b1 ... ag bg` (orientable)
//!   or `c1 ... ch` (crosscaps).
//! * 2-cells: one per region, attached along
//!   `prod_i s_i w_i s_i^-1 * prod_j [a_j, b_j]` or `... * prod_j c_j^2`,
//!   where `w_i` is the slot's boundary word.
//!
//! The boundary word of a vertex-piece circuit is its traversal sequence,
//! based at the entry vertex of its first traversal. The boundary word of
//! circle circuit `k` is the core loop raised to the circuit's wrapping number.
//! A reversed slot reads the word backwards.

use super::model::{CircuitRef, PolyhedronModel, Slot};
use super::snf::IntMatrix;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    /// Number of cells in dimensions 0, 1, 2.
    pub cells: [usize; 3],
    /// `cells[0] x cells[1]`.
    pub boundary_1: IntMatrix,
    /// `cells[1] x cells[2]`.
    pub boundary_2: IntMatrix,
    /// 0-cell of each vertex, per vertex piece.
    pub vertex_cells: Vec<Vec<usize>>,
    /// 1-cell of each edge, per vertex piece.
    pub edge_cells: Vec<Vec<usize>>,
    /// 0-cell on the core of each circle piece.
    pub circle_points: Vec<usize>,
    /// 1-cell of the core of each circle piece.
    pub core_cells: Vec<usize>,
}

impl ChainComplex {
    /// The 1-chain of a piece circuit in its own direction.
    pub fn circuit_chain(&self, model: &PolyhedronModel, c: CircuitRef) -> Vec<(usize, i64)> {
        match c {
            CircuitRef::Vertex { piece, circuit } => model.vertex_pieces()[piece].circuits()[circuit]
                .traversals
                .iter()
                .map(|t| (self.edge_cells[piece][t.edge], if t.forward { 1 } else { -1 }))
                .collect(),
            CircuitRef::Circle { piece, circuit } => {
                let w = model.circle_pieces()[piece].monodromy.wraps()[circuit];
                vec![(self.core_cells[piece], w)]
            }
        }
    }

    /// The 0-cell a piece circuit is based at.
    pub fn circuit_base(&self, model: &PolyhedronModel, c: CircuitRef) -> usize {
        match c {
            CircuitRef::Vertex { piece, circuit } => {
                let p = &model.vertex_pieces()[piece];
                let first = p.circuits()[circuit].traversals[0];
                self.vertex_cells[piece][p.entry_vertex(first)]
            }
            CircuitRef::Circle { piece, .. } => self.circle_points[piece],
        }
    }
}

/// Builds the cellular chain complex and checks that `d1 d2 = 0`.
pub fn build_chain_complex(model: &PolyhedronModel) -> Result<ChainComplex> {
    let mut c0 = 0usize;
    let mut c1 = 0usize;
    let mut vertex_cells = Vec::new();
    let mut edge_cells = Vec::new();
    for piece in model.vertex_pieces() {
        vertex_cells.push((c0..c0 + piece.vertex_count()).collect::<Vec<_>>());
        c0 += piece.vertex_count();
        edge_cells.push((c1..c1 + piece.edge_count()).collect::<Vec<_>>());
        c1 += piece.edge_count();
    }
    let circle_points: Vec<usize> = (c0..c0 + model.circle_pieces().len()).collect();
    c0 += circle_points.len();
    let core_cells: Vec<usize> = (c1..c1 + model.circle_pieces().len()).collect();
    c1 += core_cells.len();

    let mut cc = ChainComplex {
        cells: [0; 3],
        boundary_1: IntMatrix::zeros(0, 0),
        boundary_2: IntMatrix::zeros(0, 0),
        vertex_cells,
        edge_cells,
        circle_points,
        core_cells,
    };

    // 1-cell endpoints (tail, head) and 2-cell boundary chains.
    let mut ends: Vec<(usize, usize)> = Vec::with_capacity(c1);
    for (p, piece) in model.vertex_pieces().iter().enumerate() {
        for [a, b] in piece.graph().edges() {
            ends.push((cc.vertex_cells[p][a.vertex], cc.vertex_cells[p][b.vertex]));
        }
    }
    for &pt in &cc.circle_points {
        ends.push((pt, pt));
    }
    let mut faces: Vec<Vec<(usize, i64)>> = Vec::with_capacity(model.regions().len());
    for region in model.regions() {
        let mut chain = Vec::new();
        let mut bases = Vec::with_capacity(region.slots.len());
        for slot in &region.slots {
            match *slot {
                Slot::Attached { circuit, reversed } => {
                    let sign = if reversed { -1 } else { 1 };
                    chain.extend(cc.circuit_chain(model, circuit).into_iter().map(|(e, x)| (e, sign * x)));
                    bases.push(cc.circuit_base(model, circuit));
                }
                Slot::Free => {
                    let p = c0;
                    c0 += 1;
                    ends.push((p, p));
                    chain.push((c1, 1));
                    c1 += 1;
                    bases.push(p);
                }
            }
        }
        let base = match bases.first() {
            Some(&b) => b,
            None => {
                c0 += 1;
                c0 - 1
            }
        };
        for &b in bases.iter().skip(1) {
            ends.push((base, b));
            c1 += 1;
        }
        let loops = if region.orientable {
            2 * region.genus
        } else {
            region.genus
        } as usize;
        for _ in 0..loops {
            ends.push((base, base));
            if !region.orientable {
                chain.push((c1, 2));
            }
            c1 += 1;
        }
        faces.push(chain);
    }
    debug_assert_eq!(ends.len(), c1);

    let c2 = faces.len();
    let mut d1 = IntMatrix::zeros(c0, c1);
    for (e, &(t, h)) in ends.iter().enumerate() {
        d1.add_to(h, e, 1);
        d1.add_to(t, e, -1);
    }
    let mut d2 = IntMatrix::zeros(c1, c2);
    for (f, chain) in faces.iter().enumerate() {
        for &(e, x) in chain {
            d2.add_to(e, f, x);
        }
    }
    if !d1.mul(&d2)?.is_zero() {
        return Err(Error::Internal("boundary of a boundary is nonzero".into()));
    }
    cc.cells = [c0, c1, c2];
    cc.boundary_1 = d1;
    cc.boundary_2 = d2;
    Ok(cc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedron::model::{CirclePiece, MonodromyClass, SurfaceRegion};
    use crate::polyhedron::piece::VertexPiece;

    #[test]
    fn disk_has_one_cell_per_dimension_and_zero_boundaries() {
        let cc = build_chain_complex(&PolyhedronModel::disk()).unwrap();
        assert_eq!(cc.cells, [1, 1, 1]);
        assert!(cc.boundary_1.is_zero());
        assert_eq!(cc.boundary_2.get(0, 0), 1);
    }

    #[test]
    fn one_vertex_two_region_complex_shape() {
        // gluing with two circuits
        let piece = (0..36)
            .map(|i| {
                VertexPiece::from_parts(
                    1,
                    &[((0, 0), (0, 1)), ((0, 2), (0, 3))],
                    &[
                        crate::polyhedron::WingGluing::from_index(i / 6).as_array(),
                        crate::polyhedron::WingGluing::from_index(i % 6).as_array(),
                    ],
                )
                .unwrap()
            })
            .find(|p| p.circuits().len() == 2)
            .unwrap();
        let cc = build_chain_complex(&PolyhedronModel::special(piece)).unwrap();
        assert_eq!(cc.cells, [1, 2, 2]);
        assert_eq!((cc.boundary_2.rows(), cc.boundary_2.cols()), (2, 2));
    }

    #[test]
    fn capped_three_cycle_has_degree_three_attaching_map() {
        let model = PolyhedronModel::new(
            vec![],
            vec![CirclePiece {
                monodromy: MonodromyClass::ThreeCycle,
            }],
            vec![SurfaceRegion::disk(Slot::attached(CircuitRef::Circle {
                piece: 0,
                circuit: 0,
            }))],
        )
        .unwrap();
        let cc = build_chain_complex(&model).unwrap();
        assert_eq!(cc.cells, [1, 1, 1]);
        assert_eq!(cc.boundary_2.get(cc.core_cells[0], 0).abs(), 3);
    }

    #[test]
    fn crosscap_and_handles_cell_counts() {
        let klein_with_hole = SurfaceRegion {
            genus: 2,
            orientable: false,
            slots: vec![Slot::Free],
        };
        let torus = SurfaceRegion {
            genus: 1,
            orientable: true,
            slots: vec![],
        };
        let m = PolyhedronModel::new(vec![], vec![], vec![klein_with_hole, torus]).unwrap();
        let cc = build_chain_complex(&m).unwrap();
        // points: free slot, torus base; loops: f, c1, c2, a, b
        assert_eq!(cc.cells, [2, 5, 2]);
        assert_eq!(
            cc.cells[0] as i64 - cc.cells[1] as i64 + cc.cells[2] as i64,
            m.euler_characteristic()
        );
    }
}
