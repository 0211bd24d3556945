use super::trees::{maximal_trees, MaximalTree};
use crate::polyhedron::{Circuit, CircuitRef, PolyhedronModel, Slot};
use crate::{Error, Result};

/// Ordered `(non-tree edge, region)` pairs. Region `R_i` passes edge `e_i`
/// exactly once and does not pass any later edge `e_j`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CancelingSequence {
    pub pairs: Vec<(usize, usize)>,
}

impl CancelingSequence {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// A tree together with a full canceling sequence for it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CancelingWitness {
    pub tree: MaximalTree,
    pub sequence: CancelingSequence,
}

/// Result of searching every maximal tree of a special polyhedron.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CancelingSearch {
    /// First witness in tree order, if any.
    pub witness: Option<CancelingWitness>,
    pub trees_total: usize,
    /// How many trees admit a full sequence.
    pub trees_admitting: usize,
}

impl CancelingSearch {
    pub fn admits(&self) -> bool {
        self.witness.is_some()
    }

    /// Whether the answer would differ for some choice of a single tree.
    pub fn depends_on_tree(&self) -> bool {
        self.trees_admitting > 0 && self.trees_admitting < self.trees_total
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SearchOrder {
    /// Trees, edges and regions in ascending order.
    #[default]
    Forward,
    /// Everything in descending order.
    Reverse,
}

/// The region circuits of a closed special model, by region id.
fn region_circuits(x: &PolyhedronModel) -> Result<Vec<&Circuit>> {
    if !x.is_special() || !x.is_closed() || x.vertex_pieces().is_empty() {
        return Err(Error::precondition(
            "canceling pairs need a closed special polyhedron with vertices",
        ));
    }
    let piece = &x.vertex_pieces()[0];
    x.regions()
        .iter()
        .map(|r| match r.slots[..] {
            [Slot::Attached {
                circuit: CircuitRef::Vertex { circuit, .. },
                ..
            }] => Ok(&piece.circuits()[circuit]),
            _ => Err(Error::Internal("special region without a vertex circuit".into())),
        })
        .collect()
}

/// Searches for `k` canceling pairs with respect to `t`.
pub fn find_canceling_sequence(x: &PolyhedronModel, t: &MaximalTree, k: usize) -> Result<Option<CancelingSequence>> {
    find_ordered(x, t, k, SearchOrder::Forward)
}

pub fn find_ordered(
    x: &PolyhedronModel,
    t: &MaximalTree,
    k: usize,
    order: SearchOrder,
) -> Result<Option<CancelingSequence>> {
    let circuits = region_circuits(x)?;
    if k > circuits.len() {
        return Err(Error::precondition(format!(
            "{k} canceling pairs requested but there are only {} regions",
            circuits.len()
        )));
    }
    let graph = x.vertex_pieces()[0].graph();
    if !t.is_spanning_tree_of(graph) {
        return Err(Error::precondition("not a maximal tree of the singular graph"));
    }
    let mut edges = t.complement(graph.edge_count());
    let mut regions: Vec<usize> = (0..circuits.len()).collect();
    if order == SearchOrder::Reverse {
        edges.reverse();
        regions.reverse();
    }
    // count[r][e] = number of passes of region r along edge e
    let count: Vec<Vec<usize>> = circuits
        .iter()
        .map(|c| (0..graph.edge_count()).map(|e| c.geometric_count(e)).collect())
        .collect();
    let mut chosen = Vec::with_capacity(k);
    Ok(dfs(&count, &edges, &regions, k, &mut chosen).then_some(CancelingSequence { pairs: chosen }))
}

fn dfs(count: &[Vec<usize>], edges: &[usize], regions: &[usize], k: usize, chosen: &mut Vec<(usize, usize)>) -> bool {
    if chosen.len() == k {
        return true;
    }
    for &e in edges {
        if chosen.iter().any(|&(ce, cr)| ce == e || count[cr][e] != 0) {
            continue;
        }
        for &r in regions {
            if count[r][e] != 1 || chosen.iter().any(|&(_, cr)| cr == r) {
                continue;
            }
            chosen.push((e, r));
            if dfs(count, edges, regions, k, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Re-checks a sequence against raw circuit pass counts.
pub fn verify_sequence(x: &PolyhedronModel, t: &MaximalTree, seq: &CancelingSequence) -> Result<()> {
    let circuits = region_circuits(x)?;
    let graph = x.vertex_pieces()[0].graph();
    if !t.is_spanning_tree_of(graph) {
        return Err(Error::precondition("not a maximal tree of the singular graph"));
    }
    for (i, &(e, r)) in seq.pairs.iter().enumerate() {
        if e >= graph.edge_count() || r >= circuits.len() {
            return Err(Error::precondition(format!(
                "pair {i} refers to a missing edge or region"
            )));
        }
        if t.contains(e) {
            return Err(Error::precondition(format!("pair {i} uses tree edge {e}")));
        }
        if seq.pairs[..i].iter().any(|&(pe, pr)| pe == e || pr == r) {
            return Err(Error::precondition(format!("pair {i} repeats an edge or region")));
        }
        let passes = circuits[r].traversals.iter().filter(|tr| tr.edge == e).count();
        if passes != 1 {
            return Err(Error::precondition(format!(
                "region {r} passes edge {e} {passes} times"
            )));
        }
        for &(later, _) in &seq.pairs[i + 1..] {
            if circuits[r].traversals.iter().any(|tr| tr.edge == later) {
                return Err(Error::precondition(format!("region {r} passes later edge {later}")));
            }
        }
    }
    Ok(())
}

/// Whether some maximal tree admits `n` canceling pairs, `n` the vertex count.
pub fn admits_canceling_pairs(x: &PolyhedronModel) -> Result<CancelingSearch> {
    search_all_trees(x, SearchOrder::Forward)
}

pub fn search_all_trees(x: &PolyhedronModel, order: SearchOrder) -> Result<CancelingSearch> {
    let circuits = region_circuits(x)?;
    let graph = x.vertex_pieces()[0].graph();
    let n = graph.vertex_count();
    let mut trees: Vec<MaximalTree> = maximal_trees(graph)?.collect();
    if order == SearchOrder::Reverse {
        trees.reverse();
    }
    let mut search = CancelingSearch {
        witness: None,
        trees_total: trees.len(),
        trees_admitting: 0,
    };
    if circuits.len() < n {
        return Ok(search);
    }
    for tree in trees {
        if let Some(sequence) = find_ordered(x, &tree, n, order)? {
            search.trees_admitting += 1;
            if search.witness.is_none() {
                search.witness = Some(CancelingWitness { tree, sequence });
            }
        }
    }
    Ok(search)
}
