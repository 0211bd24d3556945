use crate::polyhedron::SingularGraph;
use crate::{Error, Result};

/// A spanning tree of a singular graph, as sorted edge ids.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MaximalTree {
    pub edges: Vec<usize>,
}

impl MaximalTree {
    pub fn contains(&self, e: usize) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// Edges not in the tree, ascending.
    pub fn complement(&self, edge_count: usize) -> Vec<usize> {
        (0..edge_count).filter(|&e| !self.contains(e)).collect()
    }

    /// Whether the edges form a spanning tree of `g`.
    pub fn is_spanning_tree_of(&self, g: &SingularGraph) -> bool {
        let n = g.vertex_count();
        if self.edges.len() + 1 != n || self.edges.iter().any(|&e| e >= g.edge_count()) {
            return false;
        }
        let mut dsu = Dsu::new(n);
        self.edges.iter().all(|&e| {
            let [a, b] = g.edge(e);
            dsu.union(a.vertex, b.vertex)
        })
    }
}

pub(crate) struct Dsu(Vec<usize>);

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    /// Joins the classes of `a` and `b`; false if they were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra] = rb;
        true
    }
}

/// Iterator over spanning trees in lexicographic order of their edge sets.
pub struct MaximalTrees<'a> {
    graph: &'a SingularGraph,
    combo: Option<Vec<usize>>,
}

impl Iterator for MaximalTrees<'_> {
    type Item = MaximalTree;

    fn next(&mut self) -> Option<MaximalTree> {
        let m = self.graph.edge_count();
        loop {
            let combo = self.combo.as_mut()?;
            let tree = MaximalTree { edges: combo.clone() };
            // advance to the next k-combination of 0..m
            let k = combo.len();
            match (0..k).rev().find(|&i| combo[i] < m - k + i) {
                Some(i) => {
                    combo[i] += 1;
                    for j in i + 1..k {
                        combo[j] = combo[j - 1] + 1;
                    }
                }
                None => self.combo = None,
            }
            if tree.is_spanning_tree_of(self.graph) {
                return Some(tree);
            }
        }
    }
}

/// Every spanning tree of a connected graph, each exactly once.
pub fn maximal_trees(g: &SingularGraph) -> Result<MaximalTrees<'_>> {
    if g.vertex_count() == 0 || !g.is_connected() {
        return Err(Error::precondition("maximal trees require a connected nonempty graph"));
    }
    let k = g.vertex_count() - 1;
    let combo = (k <= g.edge_count()).then(|| (0..k).collect());
    Ok(MaximalTrees { graph: g, combo })
}
