//! Census of closed special polyhedra by number of true vertices.

pub mod canonical;
pub mod enumerate;
pub mod graphs;

use std::collections::BTreeMap;

pub use canonical::{canonical_form, exhaustive_form, CanonicalKey};
pub use enumerate::{enumerate_special, EnumerateOptions};
pub use graphs::enumerate_singular_graphs;

use crate::polyhedron::{HomologyProfile, PolyhedronModel, VertexPiece};
use crate::{Error, Result};

/// One class of the census.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogRecord {
    pub key: CanonicalKey,
    /// The piece decoded from the key.
    pub piece: VertexPiece,
    pub vertex_count: usize,
    pub region_count: usize,
    pub homology: HomologyProfile,
    pub acyclic: bool,
    /// Whether the polyhedron admits a full sequence of canceling pairs;
    /// `None` until computed.
    pub canceling: Option<bool>,
}

impl CatalogRecord {
    /// The closed special polyhedron of this record.
    pub fn model(&self) -> PolyhedronModel {
        PolyhedronModel::special(self.piece.clone())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.region_count as i64 - self.vertex_count as i64
    }
}

/// The census for one vertex count, sorted by region count and then key.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    pub vertex_count: usize,
    /// `histogram[r - 1]` classes have `r` regions.
    pub histogram: Vec<usize>,
    pub records: Vec<CatalogRecord>,
}

impl Catalog {
    pub fn from_records(vertex_count: usize, mut records: Vec<CatalogRecord>) -> Self {
        records.sort_by(|a, b| (a.region_count, &a.key).cmp(&(b.region_count, &b.key)));
        Catalog {
            vertex_count,
            histogram: histogram(&records),
            records,
        }
    }

    pub fn histogram_map(&self) -> BTreeMap<usize, usize> {
        self.histogram
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| (i + 1, c))
            .collect()
    }

    /// Checks ordering, duplicate-freeness and the histogram.
    pub fn validate(&self) -> Result<()> {
        for w in self.records.windows(2) {
            if (w[0].region_count, &w[0].key) >= (w[1].region_count, &w[1].key) {
                return Err(Error::structural(format!(
                    "records out of order or duplicated at key {}",
                    w[1].key
                )));
            }
        }
        if histogram(&self.records) != self.histogram {
            return Err(Error::structural("histogram does not match records"));
        }
        Ok(())
    }
}

fn histogram(records: &[CatalogRecord]) -> Vec<usize> {
    let max = records.iter().map(|r| r.region_count).max().unwrap_or(0);
    let mut h = vec![0; max];
    for r in records {
        h[r.region_count - 1] += 1;
    }
    h
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ClassificationReport {
    pub total: usize,
    pub acyclic: usize,
    /// Indices of acyclic records.
    pub acyclic_records: Vec<usize>,
    /// Acyclic classes by region count.
    pub acyclic_by_regions: BTreeMap<usize, usize>,
}

/// Counts acyclic classes, failing hard if one of them does not have
/// exactly one more region than vertices.
pub fn classify_catalog(catalog: &Catalog) -> Result<ClassificationReport> {
    let mut report = ClassificationReport {
        total: catalog.records.len(),
        ..Default::default()
    };
    for (i, r) in catalog.records.iter().enumerate() {
        if r.homology.is_acyclic() != r.acyclic {
            return Err(Error::Internal(format!("record {i} has a stale acyclic flag")));
        }
        if !r.acyclic {
            continue;
        }
        if r.region_count != r.vertex_count + 1 {
            return Err(Error::InvariantViolation(format!(
                "acyclic record {i} has {} regions and {} vertices",
                r.region_count, r.vertex_count
            )));
        }
        report.acyclic += 1;
        report.acyclic_records.push(i);
        *report.acyclic_by_regions.entry(r.region_count).or_default() += 1;
    }
    Ok(report)
}
