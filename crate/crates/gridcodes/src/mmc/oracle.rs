//! Brute-force reference: the minimum cycle mean is attained by a simple
//! cycle, so enumerating all of them is a complete (factorial-time) oracle.

use super::WeightedDigraph;
use crate::errors::{Error, Result};
use crate::ratio::Rational;

/// Hard cap: the enumeration visits every simple path.
pub const MAX_ORACLE_NODES: usize = 12;

/// Calls `f(nodes, total_weight)` for every simple cycle (parallel edges
/// collapsed to their minimum weight first; self-loops count as length-1
/// cycles). Node lists start at the cycle's smallest node index.
pub fn for_each_simple_cycle(g: &WeightedDigraph, mut f: impl FnMut(&[u32], i64)) {
    let n = g.node_count();
    assert!(
        n <= MAX_ORACLE_NODES,
        "oracle limited to {MAX_ORACLE_NODES} nodes"
    );
    // collapse parallel edges; keeps the minimum mean unchanged
    let mut adj: Vec<Vec<(u32, i64)>> = vec![Vec::new(); n];
    for v in 0..n as u32 {
        let mut best: Vec<Option<i64>> = vec![None; n];
        for &(t, w) in g.out_edges(v) {
            let slot = &mut best[t as usize];
            *slot = Some(slot.map_or(w, |b: i64| b.min(w)));
        }
        for (t, w) in best.into_iter().enumerate() {
            if let Some(w) = w {
                adj[v as usize].push((t as u32, w));
            }
        }
    }

    let mut on_path = vec![false; n];
    let mut path: Vec<u32> = Vec::new();

    fn dfs(
        adj: &[Vec<(u32, i64)>],
        root: u32,
        u: u32,
        weight: i64,
        on_path: &mut [bool],
        path: &mut Vec<u32>,
        f: &mut impl FnMut(&[u32], i64),
    ) {
        for &(t, w) in &adj[u as usize] {
            if t == root {
                f(path, weight + w);
            } else if t > root && !on_path[t as usize] {
                on_path[t as usize] = true;
                path.push(t);
                dfs(adj, root, t, weight + w, on_path, path, f);
                path.pop();
                on_path[t as usize] = false;
            }
        }
    }

    for root in 0..n as u32 {
        on_path[root as usize] = true;
        path.push(root);
        dfs(&adj, root, root, 0, &mut on_path, &mut path, &mut f);
        path.pop();
        on_path[root as usize] = false;
    }
}

/// Minimum mean weight over all simple cycles, or `NoCycle`.
pub fn min_mean_by_enumeration(g: &WeightedDigraph) -> Result<Rational> {
    let mut best: Option<Rational> = None;
    for_each_simple_cycle(g, |nodes, weight| {
        let mean = Rational::new(weight, nodes.len() as i64);
        if best.map_or(true, |b| mean < b) {
            best = Some(mean);
        }
    });
    best.ok_or(Error::NoCycle)
}
