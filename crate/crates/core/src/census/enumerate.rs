use std::collections::BTreeSet;
use std::thread;

use super::canonical::{CanonicalKey, Incidence};
use super::graphs::enumerate_singular_graphs;
use super::{Catalog, CatalogRecord};
use crate::polyhedron::{homology_profile, PolyhedronModel, SingularGraph, WingGluing};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerateOptions {
    /// Worker threads; `1` runs the single-threaded reference path.
    pub jobs: usize,
    /// Fail with [`Error::ResourceLimit`] once more classes than this are found.
    pub max_orbits: Option<usize>,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            jobs: 1,
            max_orbits: Some(1_000_000),
        }
    }
}

/// Census of closed special polyhedra with `n` true vertices.
pub fn enumerate_special(n: usize, options: &EnumerateOptions) -> Result<Catalog> {
    let graphs = enumerate_singular_graphs(n)?;
    let keys = if options.jobs <= 1 {
        reference_keys(&graphs, options.max_orbits)?
    } else {
        partitioned_keys(&graphs, options.jobs, options.max_orbits)?
    };
    let records = keys.into_iter().map(|k| record_for(n, k)).collect::<Result<Vec<_>>>()?;
    Ok(Catalog::from_records(n, records))
}

fn gluing_assignment(graph: &SingularGraph, mut index: usize) -> Vec<WingGluing> {
    (0..graph.edge_count())
        .map(|_| {
            let g = WingGluing::from_index(index % 6);
            index /= 6;
            g
        })
        .collect()
}

fn check_cap(found: usize, cap: Option<usize>) -> Result<()> {
    match cap {
        Some(c) if found > c => Err(Error::ResourceLimit(format!("more than {c} classes found"))),
        _ => Ok(()),
    }
}

fn reference_keys(graphs: &[SingularGraph], cap: Option<usize>) -> Result<BTreeSet<CanonicalKey>> {
    let mut keys = BTreeSet::new();
    for g in graphs {
        let total = 6usize.pow(g.edge_count() as u32);
        for i in 0..total {
            let gl = gluing_assignment(g, i);
            keys.insert(Incidence::new(g, &gl).canonical_key()?);
            check_cap(keys.len(), cap)?;
        }
    }
    Ok(keys)
}

/// Each worker takes every `jobs`-th gluing of every graph; the key sets are
/// merged by ordered union, so the result does not depend on scheduling.
fn partitioned_keys(graphs: &[SingularGraph], jobs: usize, cap: Option<usize>) -> Result<BTreeSet<CanonicalKey>> {
    let parts: Vec<Result<BTreeSet<CanonicalKey>>> = thread::scope(|s| {
        let handles: Vec<_> = (0..jobs)
            .map(|w| {
                s.spawn(move || {
                    let mut keys = BTreeSet::new();
                    for g in graphs {
                        let total = 6usize.pow(g.edge_count() as u32);
                        for i in (w..total).step_by(jobs) {
                            let gl = gluing_assignment(g, i);
                            keys.insert(Incidence::new(g, &gl).canonical_key()?);
                            check_cap(keys.len(), cap)?;
                        }
                    }
                    Ok(keys)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| {
                h.join()
                    .unwrap_or_else(|_| Err(Error::Internal("enumeration worker panicked".into())))
            })
            .collect()
    });
    let mut keys = BTreeSet::new();
    for part in parts {
        keys.extend(part?);
        check_cap(keys.len(), cap)?;
    }
    Ok(keys)
}

fn record_for(n: usize, key: CanonicalKey) -> Result<CatalogRecord> {
    let piece = key.decode()?;
    let regions = piece.circuits().len();
    let model = PolyhedronModel::special(piece.clone());
    let homology = homology_profile(&model)?;
    let chi = regions as i64 - n as i64;
    if model.euler_characteristic() != chi || homology.euler_characteristic() != chi {
        return Err(Error::Internal(format!(
            "Euler characteristic mismatch for {key}: r - n = {chi}, cells {}, homology {}",
            model.euler_characteristic(),
            homology.euler_characteristic()
        )));
    }
    let acyclic = homology.is_acyclic();
    if acyclic && regions != n + 1 {
        return Err(Error::InvariantViolation(format!(
            "acyclic special polyhedron {key} has {regions} regions and {n} vertices"
        )));
    }
    Ok(CatalogRecord {
        key,
        piece,
        vertex_count: n,
        region_count: regions,
        homology,
        acyclic,
        canceling: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_vertex_census() {
        let c = enumerate_special(1, &EnumerateOptions::default()).unwrap();
        assert_eq!(c.records.len(), 11);
        assert_eq!(c.histogram, vec![2, 5, 3, 1]);
    }

    #[test]
    fn partitioned_matches_reference() {
        let a = enumerate_special(1, &EnumerateOptions::default()).unwrap();
        let b = enumerate_special(
            1,
            &EnumerateOptions {
                jobs: 3,
                max_orbits: None,
            },
        )
        .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn orbit_cap_is_enforced() {
        let r = enumerate_special(
            1,
            &EnumerateOptions {
                jobs: 1,
                max_orbits: Some(5),
            },
        );
        assert!(matches!(r, Err(Error::ResourceLimit(_))));
        let r = enumerate_special(
            1,
            &EnumerateOptions {
                jobs: 2,
                max_orbits: Some(5),
            },
        );
        assert!(matches!(r, Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn zero_vertices_is_a_precondition_error() {
        assert!(matches!(
            enumerate_special(0, &EnumerateOptions::default()),
            Err(Error::Precondition(_))
        ));
    }
}
