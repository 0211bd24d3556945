use std::fmt;

use super::chain::{build_chain_complex, ChainComplex};
use super::model::PolyhedronModel;
use super::snf::{factor_to_u64, smith_normal_form, smith_normal_form_auto, SnfMode};
use crate::Result;

/// Integral homology of a 2-complex: Betti numbers and torsion coefficients
/// of `H1` and `H2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HomologyProfile {
    pub betti: [usize; 3],
    pub torsion_1: Vec<u64>,
    pub torsion_2: Vec<u64>,
}

impl HomologyProfile {
    pub fn point() -> Self {
        HomologyProfile {
            betti: [1, 0, 0],
            torsion_1: Vec::new(),
            torsion_2: Vec::new(),
        }
    }

    pub fn is_acyclic(&self) -> bool {
        self.betti == [1, 0, 0] && self.torsion_1.is_empty() && self.torsion_2.is_empty()
    }

    pub fn is_homology_circle(&self) -> bool {
        self.betti == [1, 1, 0] && self.torsion_1.is_empty() && self.torsion_2.is_empty()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.betti[0] as i64 - self.betti[1] as i64 + self.betti[2] as i64
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [b0, b1, b2] = self.betti;
        write!(f, "betti=({b0},{b1},{b2})")?;
        for (name, t) in [("tors1", &self.torsion_1), ("tors2", &self.torsion_2)] {
            if !t.is_empty() {
                let parts: Vec<String> = t.iter().map(u64::to_string).collect();
                write!(f, " {name}={}", parts.join(","))?;
            }
        }
        Ok(())
    }
}

/// Homology of a chain complex with cells in dimensions 0 to 2.
pub fn complex_homology(cc: &ChainComplex, mode: Option<SnfMode>) -> Result<HomologyProfile> {
    let snf = |m| match mode {
        Some(mode) => smith_normal_form(m, mode),
        None => smith_normal_form_auto(m),
    };
    let s1 = snf(&cc.boundary_1)?;
    let s2 = snf(&cc.boundary_2)?;
    let (r1, r2) = (s1.rank(), s2.rank());
    let [c0, c1, c2] = cc.cells;
    let torsion_1 = s2.torsion().iter().map(factor_to_u64).collect::<Result<Vec<_>>>()?;
    Ok(HomologyProfile {
        betti: [c0 - r1, c1 - r1 - r2, c2 - r2],
        torsion_1,
        torsion_2: Vec::new(),
    })
}

/// Integral homology of the model's 2-complex.
///
/// Smith normal forms are computed in checked `i64` arithmetic and redone
/// exactly if that overflows.
pub fn homology_profile(model: &PolyhedronModel) -> Result<HomologyProfile> {
    complex_homology(&build_chain_complex(model)?, None)
}

/// Number of connected components of the model, computed from the cell structure.
pub fn component_count(model: &PolyhedronModel) -> Result<usize> {
    let cc = build_chain_complex(model)?;
    let mut parent: Vec<usize> = (0..cc.cells[0]).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for e in 0..cc.cells[1] {
        let ends: Vec<usize> = (0..cc.cells[0]).filter(|&v| cc.boundary_1.get(v, e) != 0).collect();
        if let [a, b] = ends[..] {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
    }
    Ok((0..cc.cells[0]).filter(|&v| find(&mut parent, v) == v).count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedron::model::{CirclePiece, CircuitRef, MonodromyClass, Slot, SurfaceRegion};

    fn capped_circle(m: MonodromyClass) -> PolyhedronModel {
        let regions = (0..m.circuit_count())
            .map(|c| SurfaceRegion::disk(Slot::attached(CircuitRef::Circle { piece: 0, circuit: c })))
            .collect();
        PolyhedronModel::new(vec![], vec![CirclePiece { monodromy: m }], regions).unwrap()
    }

    #[test]
    fn disk_is_acyclic() {
        assert!(homology_profile(&PolyhedronModel::disk()).unwrap().is_acyclic());
    }

    #[test]
    fn capped_y3_has_three_torsion() {
        let h = homology_profile(&capped_circle(MonodromyClass::ThreeCycle)).unwrap();
        assert_eq!(h.betti, [1, 0, 0]);
        assert_eq!(h.torsion_1, vec![3]);
    }

    #[test]
    fn capped_y12_is_acyclic() {
        // core with disks of degree 1 and 2: H1 = Z/gcd(1,2) = 0, H2 = Z.
        let h = homology_profile(&capped_circle(MonodromyClass::Transposition)).unwrap();
        assert_eq!(h.betti, [1, 0, 1]);
        assert!(h.torsion_1.is_empty());
    }

    #[test]
    fn sphere_and_projective_plane() {
        let sphere = PolyhedronModel::disk().cap_all().unwrap();
        assert_eq!(homology_profile(&sphere).unwrap().betti, [1, 0, 1]);
        let rp2 = PolyhedronModel::new(
            vec![],
            vec![],
            vec![SurfaceRegion {
                genus: 1,
                orientable: false,
                slots: vec![],
            }],
        )
        .unwrap();
        let h = homology_profile(&rp2).unwrap();
        assert_eq!((h.betti, h.torsion_1), ([1, 0, 0], vec![2]));
        assert_eq!(component_count(&rp2).unwrap(), 1);
    }
}
