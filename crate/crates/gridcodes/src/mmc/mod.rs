//! Minimum mean weight cycle kernel.
//!
//! Karp's recurrence `F_k(v) = min over edges (w, v) of F_{k-1}(w) + λ(w,v)`
//! computed from a start node, with the mean of the best cycle read off as
//! `min_v max_k (F_n(v) - F_k(v)) / (n - k)`. Three space variants are
//! provided; see [`SpaceVariant`]. All mean comparisons are exact (128-bit
//! cross multiplication); no floating point participates in any decision.

mod karp;
pub mod oracle;

pub use karp::KernelStats;

use crate::errors::{Error, Result};
use crate::ratio::Rational;

/// Weight of an unreachable state. Kept far from `i64::MAX` so a single
/// relaxation step cannot overflow.
pub(crate) const INF: i64 = i64::MAX / 2;

/// Sentinel predecessor for states with no incoming relaxation.
pub(crate) const UNSET: u32 = u32::MAX;

/// A finite directed graph with nonnegative integer edge weights and a start
/// node from which every node of interest is reachable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedDigraph {
    n: usize,
    start: u32,
    out: Vec<Vec<(u32, i64)>>,
}

impl WeightedDigraph {
    pub fn new(n: usize, start: u32) -> Self {
        assert!((start as usize) < n, "start node out of range");
        WeightedDigraph {
            n,
            start,
            out: vec![Vec::new(); n],
        }
    }

    pub fn add_edge(&mut self, from: u32, to: u32, weight: i64) {
        assert!((from as usize) < self.n && (to as usize) < self.n);
        assert!(weight >= 0, "edge weights must be nonnegative");
        self.out[from as usize].push((to, weight));
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn start(&self) -> u32 {
        self.start
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    pub fn out_edges(&self, v: u32) -> &[(u32, i64)] {
        &self.out[v as usize]
    }

    pub fn max_weight(&self) -> i64 {
        self.out
            .iter()
            .flat_map(|es| es.iter().map(|&(_, w)| w))
            .max()
            .unwrap_or(0)
    }

    /// In-edge lists, sorted by source index (ties keep insertion order).
    /// The relaxation scans these in order with a strict `<`, which makes
    /// predecessor tie-breaking "lowest node index" and reconstruction
    /// deterministic.
    pub(crate) fn reverse_adjacency(&self) -> Vec<Vec<(u32, i64)>> {
        let mut radj = vec![Vec::new(); self.n];
        for from in 0..self.n {
            for &(to, w) in &self.out[from] {
                radj[to as usize].push((from as u32, w));
            }
        }
        radj
    }

    /// Minimum weight among parallel edges `from -> to`, if any edge exists.
    pub fn min_edge_weight(&self, from: u32, to: u32) -> Option<i64> {
        self.out[from as usize]
            .iter()
            .filter(|&&(t, _)| t == to)
            .map(|&(_, w)| w)
            .min()
    }

    pub fn reachable_from_start(&self) -> usize {
        self.bfs_count(&self.out)
    }

    /// Strong connectivity via one forward and one reverse reachability pass
    /// through the start node.
    pub fn is_strongly_connected(&self) -> bool {
        self.bfs_count(&self.out) == self.n && self.bfs_count(&self.reverse_adjacency()) == self.n
    }

    fn bfs_count(&self, adj: &[Vec<(u32, i64)>]) -> usize {
        let mut seen = vec![false; self.n];
        let mut stack = vec![self.start];
        seen[self.start as usize] = true;
        let mut count = 0;
        while let Some(u) = stack.pop() {
            count += 1;
            for &(v, _) in &adj[u as usize] {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    stack.push(v);
                }
            }
        }
        count
    }

    /// Plain edge-list format: header `n start`, then one `from to weight`
    /// line per edge.
    pub fn to_edge_list_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.start);
        for from in 0..self.n {
            for &(to, w) in &self.out[from] {
                s.push_str(&format!("{from} {to} {w}\n"));
            }
        }
        s
    }

    pub fn from_edge_list_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty edge list".into()))?;
        let mut toks = header.split_whitespace();
        let n: usize = toks
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse("bad node count".into()))?;
        let start: u32 = toks
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse("bad start node".into()))?;
        if start as usize >= n {
            return Err(Error::Parse("start node out of range".into()));
        }
        let mut g = WeightedDigraph::new(n, start);
        for line in lines {
            let mut toks = line.split_whitespace();
            let mut next_num = || -> Result<i64> {
                toks.next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| Error::Parse(format!("bad edge line '{line}'")))
            };
            let (f, t, w) = (next_num()?, next_num()?, next_num()?);
            if f < 0 || t < 0 || f as usize >= n || t as usize >= n || w < 0 {
                return Err(Error::Parse(format!("edge out of range: '{line}'")));
            }
            g.add_edge(f as u32, t as u32, w);
        }
        Ok(g)
    }
}

/// Space/time trade-offs for the kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpaceVariant {
    /// Full `(n+1) x n` weight and predecessor tables; returns a cycle.
    Quadratic,
    /// Two passes over a handful of length-n arrays; returns the mean and
    /// the witness node only.
    Linear,
    /// Checkpoint rows every `⌈√n⌉` steps plus segment-by-segment backward
    /// reconstruction; `O(n^{3/2})` auxiliary entries and returns a cycle.
    Sqrt32,
}

impl SpaceVariant {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "quad" | "quadratic" => Ok(SpaceVariant::Quadratic),
            "linear" => Ok(SpaceVariant::Linear),
            "sqrt" | "sqrt32" => Ok(SpaceVariant::Sqrt32),
            other => Err(Error::Parse(format!(
                "unknown variant '{other}' (expected quad | linear | sqrt)"
            ))),
        }
    }

    pub fn token(&self) -> &'static str {
        match self {
            SpaceVariant::Quadratic => "quad",
            SpaceVariant::Linear => "linear",
            SpaceVariant::Sqrt32 => "sqrt",
        }
    }
}

/// Result of a minimum mean cycle computation.
#[derive(Debug, Clone)]
pub struct MeanCycleResult {
    /// Minimum mean edge weight over all cycles reachable from the start.
    pub alpha: Rational,
    /// A node attaining the outer minimum of the Karp formula.
    pub witness: u32,
    /// A concrete cycle of mean exactly `alpha` (nodes, no repeated
    /// endpoint); absent for the linear-space variant.
    pub cycle: Option<Vec<u32>>,
    /// Instrumentation of the kernel's auxiliary numeric storage.
    pub stats: KernelStats,
}

/// Runs Karp's algorithm. `threads` parallelizes the per-k relaxation over
/// target nodes; results are bit-identical for every thread count.
pub fn karp(graph: &WeightedDigraph, variant: SpaceVariant, threads: usize) -> Result<MeanCycleResult> {
    karp::run(graph, variant, threads)
}

#[cfg(test)]
mod tests;
