use std::fmt;

use crate::{Error, Result};

/// One of the four legs at a true vertex of the singular graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LegRef {
    pub vertex: usize,
    pub leg: u8,
}

impl LegRef {
    pub const fn new(vertex: usize, leg: u8) -> Self {
        LegRef { vertex, leg }
    }
}

impl fmt::Display for LegRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.vertex, self.leg)
    }
}

/// The three legs of a vertex other than `leg`, in ascending order.
///
/// The wings of a vertex at leg `p` are labeled by these legs: the wing toward
/// `q` is the cone over the edge `{p, q}` of the vertex link.
pub fn other_legs(leg: u8) -> [u8; 3] {
    match leg {
        0 => [1, 2, 3],
        1 => [0, 2, 3],
        2 => [0, 1, 3],
        3 => [0, 1, 2],
        _ => panic!("leg index {leg} out of range"),
    }
}

/// Position of wing label `wing` among [`other_legs`]`(leg)`.
pub fn wing_position(leg: u8, wing: u8) -> usize {
    debug_assert!(leg != wing && wing < 4);
    if wing < leg {
        wing as usize
    } else {
        wing as usize - 1
    }
}

/// A bijection between the three wings at the tail end of an edge and the
/// three wings at its head end.
///
/// `perm[i] = j` sends the `i`-th wing of the tail (in [`other_legs`] order)
/// to the `j`-th wing of the head.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WingGluing([u8; 3]);

const ALL_GLUINGS: [[u8; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

impl WingGluing {
    pub const IDENTITY: WingGluing = WingGluing([0, 1, 2]);

    pub fn new(perm: [u8; 3]) -> Result<Self> {
        let mut seen = [false; 3];
        for &p in &perm {
            if p > 2 || seen[p as usize] {
                return Err(Error::structural(format!(
                    "wing gluing {perm:?} is not a bijection of three wings"
                )));
            }
            seen[p as usize] = true;
        }
        Ok(WingGluing(perm))
    }

    /// The six gluings in lexicographic order.
    pub fn all() -> [WingGluing; 6] {
        ALL_GLUINGS.map(WingGluing)
    }

    pub fn from_index(index: usize) -> WingGluing {
        WingGluing(ALL_GLUINGS[index])
    }

    pub fn index(self) -> usize {
        ALL_GLUINGS.iter().position(|p| *p == self.0).unwrap()
    }

    pub fn as_array(self) -> [u8; 3] {
        self.0
    }

    pub fn apply(self, position: usize) -> usize {
        self.0[position] as usize
    }

    pub fn inverse(self) -> WingGluing {
        let mut inv = [0u8; 3];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        WingGluing(inv)
    }

    /// Maps a wing label at the tail leg `tail` to the wing label at the head leg `head`.
    pub fn map_label(self, tail: u8, head: u8, wing: u8) -> u8 {
        other_legs(head)[self.apply(wing_position(tail, wing))]
    }
}

impl fmt::Display for WingGluing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.0[0], self.0[1], self.0[2])
    }
}

/// A 4-regular multigraph whose legs are labeled `0..4` at every vertex.
///
/// Each edge is stored as `[tail, head]`. Loops (both ends at one vertex, on
/// distinct legs) are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SingularGraph {
    vertex_count: usize,
    edges: Vec<[LegRef; 2]>,
    // (edge, end) at every (vertex, leg)
    incidence: Vec<[(usize, u8); 4]>,
}

impl SingularGraph {
    pub fn new(vertex_count: usize, edges: Vec<[LegRef; 2]>) -> Result<Self> {
        let mut incidence = vec![[(usize::MAX, 0u8); 4]; vertex_count];
        for (e, ends) in edges.iter().enumerate() {
            for (end, leg) in ends.iter().enumerate() {
                if leg.vertex >= vertex_count || leg.leg > 3 {
                    return Err(Error::structural(format!(
                        "edge {e} uses leg {leg} outside {vertex_count} vertices"
                    )));
                }
                let slot = &mut incidence[leg.vertex][leg.leg as usize];
                if slot.0 != usize::MAX {
                    return Err(Error::structural(format!(
                        "leg {leg} is used by edges {} and {e}",
                        slot.0
                    )));
                }
                *slot = (e, end as u8);
            }
        }
        for (v, legs) in incidence.iter().enumerate() {
            if let Some(l) = legs.iter().position(|s| s.0 == usize::MAX) {
                return Err(Error::structural(format!("leg {v}:{l} has no edge")));
            }
        }
        Ok(SingularGraph {
            vertex_count,
            edges,
            incidence,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[[LegRef; 2]] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> [LegRef; 2] {
        self.edges[e]
    }

    /// The edge attached at `leg` and which end of it (0 = tail, 1 = head).
    pub fn edge_at(&self, leg: LegRef) -> (usize, usize) {
        let (e, end) = self.incidence[leg.vertex][leg.leg as usize];
        (e, end as usize)
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.edges[e][0].vertex == self.edges[e][1].vertex
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for leg in 0..4 {
                let (e, end) = self.incidence[v][leg];
                let w = self.edges[e][1 - end as usize].vertex;
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}
