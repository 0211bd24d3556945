use std::collections::BTreeSet;

use crate::polyhedron::{LegRef, SingularGraph};
use crate::{Error, Result};

/// All connected 4-regular multigraphs (loops allowed) on `n` vertices, one
/// per isomorphism class.
///
/// Each class is produced from the lexicographically smallest of its
/// adjacency matrices, where the diagonal counts loops. Legs are handed out
/// at every vertex in edge creation order: loops first, then edges to
/// higher-numbered vertices.
pub fn enumerate_singular_graphs(n: usize) -> Result<Vec<SingularGraph>> {
    if n == 0 {
        return Err(Error::precondition(
            "enumerate requires n >= 1; the only special polyhedron without vertices is the disk",
        ));
    }
    let mut classes = BTreeSet::new();
    let mut adj = vec![vec![0u8; n]; n];
    fill(&mut adj, 0, 0, &mut classes);
    classes.into_iter().map(|a| from_adjacency(&a)).collect()
}

fn fill(adj: &mut Vec<Vec<u8>>, i: usize, j: usize, out: &mut BTreeSet<Vec<Vec<u8>>>) {
    let n = adj.len();
    if i == n {
        if (0..n).all(|v| degree(adj, v) == 4) && connected(adj) {
            out.insert(canonical_matrix(adj));
        }
        return;
    }
    let (ni, nj) = if j + 1 == n { (i + 1, i + 1) } else { (i, j + 1) };
    let max = if i == j { 2 } else { 4 };
    for m in 0..=max {
        adj[i][j] = m;
        adj[j][i] = m;
        if degree(adj, i) <= 4 && degree(adj, j) <= 4 {
            // Row i is final once j reaches the end.
            if j + 1 < n || degree(adj, i) == 4 {
                fill(adj, ni, nj, out);
            }
        }
    }
    adj[i][j] = 0;
    adj[j][i] = 0;
}

fn degree(adj: &[Vec<u8>], v: usize) -> u32 {
    adj[v]
        .iter()
        .enumerate()
        .map(|(w, &m)| if w == v { 2 * m as u32 } else { m as u32 })
        .sum()
}

fn connected(adj: &[Vec<u8>]) -> bool {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for w in 0..n {
            if adj[v][w] > 0 && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn canonical_matrix(adj: &[Vec<u8>]) -> Vec<Vec<u8>> {
    let n = adj.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<Vec<u8>>> = None;
    loop {
        let m: Vec<Vec<u8>> = (0..n)
            .map(|i| (0..n).map(|j| adj[perm[i]][perm[j]]).collect())
            .collect();
        if best.as_ref().is_none_or(|b| m < *b) {
            best = Some(m);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.unwrap()
}

pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn from_adjacency(adj: &[Vec<u8>]) -> Result<SingularGraph> {
    let n = adj.len();
    let mut next = vec![0u8; n];
    let mut take = |v: usize| {
        let l = next[v];
        next[v] += 1;
        LegRef::new(v, l)
    };
    let mut edges = Vec::new();
    for (v, row) in adj.iter().enumerate() {
        for _ in 0..row[v] {
            let a = take(v);
            let b = take(v);
            edges.push([a, b]);
        }
    }
    for v in 0..n {
        for w in v + 1..n {
            for _ in 0..adj[v][w] {
                let a = take(v);
                let b = take(w);
                edges.push([a, b]);
            }
        }
    }
    // Creation order above is per vertex for loops, then by vertex pair; sort
    // by tail so the edge list reads in leg order.
    edges.sort();
    SingularGraph::new(n, edges)
}
