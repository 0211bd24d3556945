use std::fmt;

use super::graph::{other_legs, LegRef, SingularGraph, WingGluing};
use crate::{Error, Result};

/// One pass of a circuit along a sheet of a singular edge.
///
/// `wing` is the wing label at the entry end of the edge; `forward` is true
/// when the pass runs from the edge's tail to its head.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Traversal {
    pub edge: usize,
    pub wing: u8,
    pub forward: bool,
}

/// A sheet of a singular edge, named by the wing label at the edge's tail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Strand {
    pub edge: usize,
    pub tail_wing: u8,
}

/// A boundary cycle of a region, as a cyclic sequence of traversals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Circuit {
    pub traversals: Vec<Traversal>,
}

impl Circuit {
    pub fn len(&self) -> usize {
        self.traversals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.traversals.is_empty()
    }

    /// Number of passes along edge `e`, ignoring direction.
    pub fn geometric_count(&self, e: usize) -> usize {
        self.traversals.iter().filter(|t| t.edge == e).count()
    }

    /// Algebraic number of passes along edge `e`.
    pub fn signed_count(&self, e: usize) -> i64 {
        self.traversals
            .iter()
            .filter(|t| t.edge == e)
            .map(|t| if t.forward { 1 } else { -1 })
            .sum()
    }
}

/// A neighbourhood of a connected singular component with at least one true
/// vertex: a 4-regular graph whose edges carry wing gluings.
///
/// Circuits are traced once on construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexPiece {
    graph: SingularGraph,
    gluings: Vec<WingGluing>,
    circuits: Vec<Circuit>,
}

impl VertexPiece {
    pub fn new(graph: SingularGraph, gluings: Vec<WingGluing>) -> Result<Self> {
        if gluings.len() != graph.edge_count() {
            return Err(Error::structural(format!(
                "{} gluings given for {} edges",
                gluings.len(),
                graph.edge_count()
            )));
        }
        if graph.vertex_count() == 0 {
            return Err(Error::structural("a vertex piece needs at least one vertex"));
        }
        let circuits = trace(&graph, &gluings)?;
        Ok(VertexPiece {
            graph,
            gluings,
            circuits,
        })
    }

    /// Builds a piece from raw `(tail, head)` leg pairs and gluing triples.
    pub fn from_parts(vertex_count: usize, edges: &[((usize, u8), (usize, u8))], gluings: &[[u8; 3]]) -> Result<Self> {
        let edges = edges
            .iter()
            .map(|&((v, l), (w, m))| [LegRef::new(v, l), LegRef::new(w, m)])
            .collect();
        let graph = SingularGraph::new(vertex_count, edges)?;
        let gluings = gluings
            .iter()
            .map(|&g| WingGluing::new(g))
            .collect::<Result<Vec<_>>>()?;
        VertexPiece::new(graph, gluings)
    }

    pub fn graph(&self) -> &SingularGraph {
        &self.graph
    }

    pub fn gluings(&self) -> &[WingGluing] {
        &self.gluings
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn circuits(&self) -> &[Circuit] {
        &self.circuits
    }

    /// The other end of the edge at `leg`, and the map from wing labels at
    /// `leg` to wing labels at that other end.
    pub fn partner(&self, leg: LegRef) -> (LegRef, [u8; 4]) {
        let (e, end) = self.graph.edge_at(leg);
        let ends = self.graph.edge(e);
        let other = ends[1 - end];
        let glue = if end == 0 {
            self.gluings[e]
        } else {
            self.gluings[e].inverse()
        };
        let mut map = [u8::MAX; 4];
        for (i, &w) in other_legs(leg.leg).iter().enumerate() {
            map[w as usize] = other_legs(other.leg)[glue.apply(i)];
        }
        (other, map)
    }

    /// The vertex at which traversal `t` starts.
    pub fn entry_vertex(&self, t: Traversal) -> usize {
        let [tail, head] = self.graph.edge(t.edge);
        if t.forward {
            tail.vertex
        } else {
            head.vertex
        }
    }

    pub fn strand(&self, t: Traversal) -> Strand {
        let tail_wing = if t.forward {
            t.wing
        } else {
            let [tail, head] = self.graph.edge(t.edge);
            self.gluings[t.edge].inverse().map_label(head.leg, tail.leg, t.wing)
        };
        Strand {
            edge: t.edge,
            tail_wing,
        }
    }

    /// The same piece with edge `e` running the other way.
    pub fn with_edge_reversed(&self, e: usize) -> Result<Self> {
        let mut edges = self.graph.edges().to_vec();
        edges[e].swap(0, 1);
        let mut gluings = self.gluings.clone();
        gluings[e] = gluings[e].inverse();
        VertexPiece::new(SingularGraph::new(self.vertex_count(), edges)?, gluings)
    }

    /// The same piece with vertex `v` renamed `perm[v]` and, at each vertex,
    /// leg `l` renamed `legs[v][l]`. Edge order is kept.
    pub fn relabeled(&self, perm: &[usize], legs: &[[u8; 4]]) -> Result<Self> {
        let n = self.vertex_count();
        if perm.len() != n || legs.len() != n {
            return Err(Error::precondition("relabeling has the wrong size"));
        }
        let mut edges = Vec::with_capacity(self.edge_count());
        let mut gluings = Vec::with_capacity(self.edge_count());
        for (e, &[a, b]) in self.graph.edges().iter().enumerate() {
            let na = LegRef::new(perm[a.vertex], legs[a.vertex][a.leg as usize]);
            let nb = LegRef::new(perm[b.vertex], legs[b.vertex][b.leg as usize]);
            let mut g = [0u8; 3];
            for &w in &other_legs(a.leg) {
                let image = self.gluings[e].map_label(a.leg, b.leg, w);
                let nw = legs[a.vertex][w as usize];
                let ni = other_legs(na.leg).iter().position(|&x| x == nw).unwrap();
                let nimage = legs[b.vertex][image as usize];
                g[ni] = other_legs(nb.leg).iter().position(|&x| x == nimage).unwrap() as u8;
            }
            edges.push([na, nb]);
            gluings.push(WingGluing::new(g)?);
        }
        VertexPiece::new(SingularGraph::new(n, edges)?, gluings)
    }
}

impl fmt::Display for VertexPiece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (e, ([a, b], g)) in self.graph.edges().iter().zip(&self.gluings).enumerate() {
            if e > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{a}-{b}/{g}")?;
        }
        Ok(())
    }
}

/// Traces the region-boundary circuits of a glued piece.
///
/// A pass arriving at leg `p` on the wing toward `q` continues through the
/// vertex to leg `q` and leaves along the edge attached there on the wing
/// toward `p`. Each circuit starts on the lowest untraced strand, run forward.
pub fn trace_circuits(piece: &VertexPiece) -> Vec<Circuit> {
    piece.circuits.clone()
}

fn trace(graph: &SingularGraph, gluings: &[WingGluing]) -> Result<Vec<Circuit>> {
    let edges = graph.edges();
    let strand_index = |e: usize, tail_wing: u8| 3 * e + super::graph::wing_position(edges[e][0].leg, tail_wing);
    let mut seen = vec![false; 3 * edges.len()];
    let mut circuits = Vec::new();
    for e in 0..edges.len() {
        for &w in &other_legs(edges[e][0].leg) {
            if seen[strand_index(e, w)] {
                continue;
            }
            let start = Traversal {
                edge: e,
                wing: w,
                forward: true,
            };
            let mut traversals = Vec::new();
            let mut t = start;
            loop {
                let [tail, head] = edges[t.edge];
                let (from, to, glue) = if t.forward {
                    (tail, head, gluings[t.edge])
                } else {
                    (head, tail, gluings[t.edge].inverse())
                };
                let tail_wing = if t.forward {
                    t.wing
                } else {
                    glue.map_label(from.leg, to.leg, t.wing)
                };
                let idx = strand_index(t.edge, tail_wing);
                if seen[idx] {
                    return Err(Error::Internal(format!(
                        "strand ({}, {tail_wing}) traced twice",
                        t.edge
                    )));
                }
                seen[idx] = true;
                traversals.push(t);
                // Arrive at leg `to.leg` on the wing toward `q`; leave at leg `q`.
                let q = glue.map_label(from.leg, to.leg, t.wing);
                let out = LegRef::new(to.vertex, q);
                let (ne, end) = graph.edge_at(out);
                t = Traversal {
                    edge: ne,
                    wing: to.leg,
                    forward: end == 0,
                };
                if t == start {
                    break;
                }
            }
            circuits.push(Circuit { traversals });
        }
    }
    Ok(circuits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn one_vertex(g0: [u8; 3], g1: [u8; 3]) -> VertexPiece {
        VertexPiece::from_parts(1, &[((0, 0), (0, 1)), ((0, 2), (0, 3))], &[g0, g1]).unwrap()
    }

    // Orbit count of the raw "arrive at (v, p) on wing q" state map; every
    // region boundary shows up twice, once per direction.
    fn state_orbits(piece: &VertexPiece) -> usize {
        let n = piece.vertex_count();
        let mut states = BTreeSet::new();
        for v in 0..n {
            for p in 0..4u8 {
                for q in other_legs(p) {
                    states.insert((v, p, q));
                }
            }
        }
        let mut orbits = 0;
        while let Some(&s) = states.iter().next() {
            orbits += 1;
            let mut x = s;
            loop {
                states.remove(&x);
                let (v, p, q) = x;
                let (other, map) = piece.partner(LegRef::new(v, q));
                x = (other.vertex, other.leg, map[p as usize]);
                if x == s {
                    break;
                }
            }
        }
        orbits
    }

    #[test]
    fn identity_gluing_matches_state_orbits() {
        let piece = one_vertex([0, 1, 2], [0, 1, 2]);
        assert_eq!(piece.circuits().len() * 2, state_orbits(&piece));
    }

    #[test]
    fn all_one_vertex_gluings_partition_strands() {
        for a in WingGluing::all() {
            for b in WingGluing::all() {
                let piece = one_vertex(a.as_array(), b.as_array());
                let c = piece.circuits();
                assert!((1..=4).contains(&c.len()));
                assert_eq!(c.iter().map(Circuit::len).sum::<usize>(), 6);
                assert_eq!(c.len() * 2, state_orbits(&piece));
                let strands: BTreeSet<_> = c
                    .iter()
                    .flat_map(|c| c.traversals.iter().map(|&t| piece.strand(t)))
                    .collect();
                assert_eq!(strands.len(), 6);
            }
        }
    }

    #[test]
    fn circuits_are_closed_walks() {
        let piece = one_vertex([1, 2, 0], [0, 2, 1]);
        for c in piece.circuits() {
            for (i, t) in c.traversals.iter().enumerate() {
                let next = c.traversals[(i + 1) % c.len()];
                let [tail, head] = piece.graph().edge(t.edge);
                let end = if t.forward { head } else { tail };
                assert_eq!(end.vertex, piece.entry_vertex(next));
            }
        }
    }

    #[test]
    fn reversing_an_edge_keeps_circuit_count() {
        let piece = one_vertex([1, 2, 0], [2, 1, 0]);
        let rev = piece.with_edge_reversed(0).unwrap();
        assert_eq!(piece.circuits().len(), rev.circuits().len());
    }

    #[test]
    fn bad_gluing_is_structural() {
        let err = VertexPiece::from_parts(1, &[((0, 0), (0, 1)), ((0, 2), (0, 3))], &[[0, 0, 1], [0, 1, 2]]);
        assert!(matches!(err, Err(Error::Structural(_))));
    }
}
