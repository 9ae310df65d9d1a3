//! Stable dual trees with `n` labeled legs.
//!
//! For each vertex count `p` in `1..=n-2`, every unlabeled tree shape on `p`
//! vertices receives every distribution of the legs that leaves each vertex
//! with valence at least 3. Shape automorphisms produce repeats, which are
//! removed by canonical form.

use std::collections::{BTreeMap, HashSet};

use super::DualTree;
use crate::error::{ensure_n_at_least, Result};

/// All stable trees with legs `1..=n`, each isomorphism class once, ordered
/// by vertex count then serialization.
pub fn enumerate_stable_trees(n: usize) -> Result<Vec<DualTree>> {
    ensure_n_at_least(n, 3)?;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for p in 1..=n - 2 {
        for shape in tree_shapes(p) {
            distribute_legs(p, &shape, n, |legs| {
                let tree = DualTree::new(p, &shape, legs).expect("distribution respects stability");
                if seen.insert(tree.clone()) {
                    out.push(tree);
                }
            });
        }
    }
    let mut keyed: Vec<(usize, String, DualTree)> =
        out.into_iter().map(|t| (t.vertex_count(), t.serialization(), t)).collect();
    keyed.sort_unstable_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    Ok(keyed.into_iter().map(|(_, _, t)| t).collect())
}

/// One edge list per isomorphism class of unlabeled tree on `p` vertices.
pub(crate) fn tree_shapes(p: usize) -> Vec<Vec<(usize, usize)>> {
    match p {
        0 => Vec::new(),
        1 => vec![Vec::new()],
        2 => vec![vec![(0, 1)]],
        _ => {
            let mut classes: BTreeMap<String, Vec<(usize, usize)>> = BTreeMap::new();
            let mut seq = vec![0usize; p - 2];
            loop {
                let edges = prufer_decode(&seq, p);
                classes.entry(unlabeled_form(p, &edges)).or_insert(edges);
                // odometer over [0, p)^(p-2)
                let mut i = 0;
                while i < seq.len() && seq[i] == p - 1 {
                    seq[i] = 0;
                    i += 1;
                }
                if i == seq.len() {
                    break;
                }
                seq[i] += 1;
            }
            classes.into_values().collect()
        }
    }
}

fn prufer_decode(seq: &[usize], p: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; p];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(p - 1);
    for &v in seq {
        let leaf = (0..p).find(|&u| degree[u] == 1).expect("a leaf exists");
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..p).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// AHU encoding rooted at the tree's center; with two centers, the smaller
/// of the two rootings.
fn unlabeled_form(p: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); p];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..p).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = p;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.iter().map(|&c| ahu(c, usize::MAX, &adj)).min().expect("a center exists")
}

fn ahu(v: usize, parent: usize, adj: &[Vec<usize>]) -> String {
    let mut parts: Vec<String> =
        adj[v].iter().filter(|&&w| w != parent).map(|&w| ahu(w, v, adj)).collect();
    parts.sort_unstable();
    format!("({})", parts.concat())
}

/// Calls `emit` with every assignment `legs[i] = vertex of leg i+1` that
/// brings each vertex of the shape to valence at least 3.
fn distribute_legs(p: usize, shape: &[(usize, usize)], n: usize, mut emit: impl FnMut(&[usize])) {
    let mut deficit = vec![3usize; p];
    for &(a, b) in shape {
        deficit[a] = deficit[a].saturating_sub(1);
        deficit[b] = deficit[b].saturating_sub(1);
    }
    let total: usize = deficit.iter().sum();
    let mut legs = vec![0; n];
    assign(0, total, &mut deficit, &mut legs, &mut emit);
}

fn assign(
    next: usize,
    open_deficit: usize,
    deficit: &mut [usize],
    legs: &mut [usize],
    emit: &mut impl FnMut(&[usize]),
) {
    let n = legs.len();
    if open_deficit > n - next {
        return;
    }
    if next == n {
        emit(legs);
        return;
    }
    for v in 0..deficit.len() {
        legs[next] = v;
        let filled = deficit[v] > 0;
        if filled {
            deficit[v] -= 1;
        }
        assign(next + 1, open_deficit - usize::from(filled), deficit, legs, emit);
        if filled {
            deficit[v] += 1;
        }
    }
}
