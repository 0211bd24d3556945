//! Canceling pairs, the cancellation condition and ball certificates.

pub mod composite;
pub mod pairs;
pub mod trees;

pub use composite::{
    build_bipartite_tree, cancellation_condition, certify_ball, find_all_one_y_vertex, BallCertificate, BipartiteEdge,
    BipartiteTree, Certification, CertifyFailure, ConditionReport, PieceCheck,
};
pub use pairs::{
    admits_canceling_pairs, find_canceling_sequence, search_all_trees, verify_sequence, CancelingSearch,
    CancelingSequence, CancelingWitness, SearchOrder,
};
pub use trees::{maximal_trees, MaximalTree};

use crate::census::Catalog;
use crate::Result;

/// Per-record outcome of a catalog sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepEntry {
    pub index: usize,
    pub search: CancelingSearch,
}

/// Runs the canceling-pair search on every record and stores the flags.
pub fn annotate_catalog(catalog: &mut Catalog) -> Result<Vec<SweepEntry>> {
    let mut out = Vec::with_capacity(catalog.records.len());
    for (index, record) in catalog.records.iter_mut().enumerate() {
        let search = admits_canceling_pairs(&record.model())?;
        record.canceling = Some(search.admits());
        out.push(SweepEntry { index, search });
    }
    Ok(out)
}
