//! The three Karp variants and shared relaxation machinery.

use super::{MeanCycleResult, SpaceVariant, WeightedDigraph, INF, UNSET};
use crate::errors::{Error, Result};
use crate::ratio::Rational;
use rayon::prelude::*;

/// Counts live entries of the kernel's auxiliary numeric arrays (weights,
/// predecessors, fraction accumulators). The input graph is not counted.
#[derive(Debug, Clone, Copy, Default)]
pub struct KernelStats {
    pub peak_entries: usize,
    live_entries: usize,
}

impl KernelStats {
    fn alloc(&mut self, entries: usize) {
        self.live_entries += entries;
        self.peak_entries = self.peak_entries.max(self.live_entries);
    }

    fn free(&mut self, entries: usize) {
        self.live_entries -= entries;
    }
}

/// A candidate fraction `num / den` with `den > 0`; `den == 0` means "none".
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Frac {
    num: i64,
    den: i64,
}

impl Frac {
    const NONE: Frac = Frac { num: 0, den: 0 };

    fn is_some(&self) -> bool {
        self.den != 0
    }

    fn less_than(&self, other: &Frac) -> bool {
        debug_assert!(self.is_some() && other.is_some());
        (self.num as i128) * (other.den as i128) < (other.num as i128) * (self.den as i128)
    }

    fn greater_than(&self, other: &Frac) -> bool {
        other.less_than(self)
    }
}

struct Ctx<'g> {
    graph: &'g WeightedDigraph,
    radj: Vec<Vec<(u32, i64)>>,
    n: usize,
    pool: Option<rayon::ThreadPool>,
}

impl<'g> Ctx<'g> {
    fn new(graph: &'g WeightedDigraph, threads: usize) -> Result<Self> {
        let n = graph.node_count();
        if n == 0 {
            return Err(Error::NoCycle);
        }
        let bound = n as i128 * graph.max_weight() as i128;
        if bound >= INF as i128 {
            return Err(Error::WeightOverflow(bound));
        }
        let pool = if threads > 1 {
            Some(
                rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build()
                    .map_err(|e| Error::Parse(format!("thread pool: {e}")))?,
            )
        } else {
            None
        };
        Ok(Ctx {
            graph,
            radj: graph.reverse_adjacency(),
            n,
            pool,
        })
    }

    /// One Karp relaxation `prev -> next`, optionally recording for each
    /// target the predecessor minimizing `F_{k-1}(w) + λ(w, v)`. In-edges are
    /// scanned in ascending source order with a strict `<`, so ties go to the
    /// lowest node index for any thread count.
    fn relax(&self, prev: &[i64], next: &mut [i64], mut preds: Option<&mut [u32]>) {
        let radj = &self.radj;
        let body = |v: usize, next_v: &mut i64, pred_v: Option<&mut u32>| {
            let mut best = INF;
            let mut best_pred = UNSET;
            for &(w, lam) in &radj[v] {
                let pw = prev[w as usize];
                if pw < INF {
                    let cand = pw + lam;
                    if cand < best {
                        best = cand;
                        best_pred = w;
                    }
                }
            }
            *next_v = best;
            if let Some(p) = pred_v {
                *p = best_pred;
            }
        };
        match (&self.pool, &mut preds) {
            (Some(pool), Some(preds)) => pool.install(|| {
                next.par_iter_mut()
                    .zip_eq(preds.par_iter_mut())
                    .enumerate()
                    .for_each(|(v, (next_v, pred_v))| body(v, next_v, Some(pred_v)));
            }),
            (Some(pool), None) => pool.install(|| {
                next.par_iter_mut()
                    .enumerate()
                    .for_each(|(v, next_v)| body(v, next_v, None));
            }),
            (None, Some(preds)) => {
                for v in 0..self.n {
                    let (a, b) = (&mut next[v], &mut preds[v]);
                    body(v, a, Some(b));
                }
            }
            (None, None) => {
                for v in 0..self.n {
                    body(v, &mut next[v], None);
                }
            }
        }
    }

    fn initial_row(&self) -> Vec<i64> {
        let mut row = vec![INF; self.n];
        row[self.graph.start() as usize] = 0;
        row
    }

    fn reset_initial(&self, row: &mut [i64]) {
        row.fill(INF);
        row[self.graph.start() as usize] = 0;
    }
}

pub(super) fn run(
    graph: &WeightedDigraph,
    variant: SpaceVariant,
    threads: usize,
) -> Result<MeanCycleResult> {
    let ctx = Ctx::new(graph, threads)?;
    match variant {
        SpaceVariant::Quadratic => quadratic(&ctx),
        SpaceVariant::Linear => linear(&ctx),
        SpaceVariant::Sqrt32 => sqrt32(&ctx),
    }
}

/// Picks `alpha = min_v max_{0 <= k < n} (F_n(v) - F_k(v)) / (n - k)` from a
/// per-node iterator of maxima. Unreachable states were skipped upstream.
fn select_alpha(per_node_max: &[Frac]) -> Result<(Rational, u32)> {
    let mut best = Frac::NONE;
    let mut witness = UNSET;
    for (v, f) in per_node_max.iter().enumerate() {
        if f.is_some() && (!best.is_some() || f.less_than(&best)) {
            best = *f;
            witness = v as u32;
        }
    }
    if !best.is_some() {
        return Err(Error::NoCycle);
    }
    Ok((Rational::new(best.num, best.den), witness))
}

/// Accumulates `max_k (F_n(v) - F_k(v)) / (n - k)` for one `k`-row.
fn fold_row_maxima(maxima: &mut [Frac], f_n: &[i64], f_k: &[i64], n: usize, k: usize) {
    for v in 0..f_n.len() {
        if f_n[v] >= INF || f_k[v] >= INF {
            continue;
        }
        let cand = Frac {
            num: f_n[v] - f_k[v],
            den: (n - k) as i64,
        };
        if !maxima[v].is_some() || cand.greater_than(&maxima[v]) {
            maxima[v] = cand;
        }
    }
}

fn quadratic(ctx: &Ctx) -> Result<MeanCycleResult> {
    let n = ctx.n;
    let mut stats = KernelStats::default();

    let mut rows: Vec<Vec<i64>> = Vec::with_capacity(n + 1);
    rows.push(ctx.initial_row());
    let mut preds: Vec<Vec<u32>> = Vec::with_capacity(n);
    stats.alloc(n);
    for _ in 1..=n {
        let mut next = vec![INF; n];
        let mut pred = vec![UNSET; n];
        stats.alloc(2 * n);
        ctx.relax(rows.last().unwrap(), &mut next, Some(&mut pred));
        rows.push(next);
        preds.push(pred);
    }

    let mut maxima = vec![Frac::NONE; n];
    stats.alloc(n);
    for k in 0..n {
        fold_row_maxima(&mut maxima, &rows[n], &rows[k], n, k);
    }
    let (alpha, witness) = select_alpha(&maxima)?;

    // length-n minimum-weight path from start to the witness
    let mut path = vec![0u32; n + 1];
    stats.alloc(n + 1);
    path[n] = witness;
    for k in (0..n).rev() {
        let p = preds[k][path[k + 1] as usize];
        debug_assert_ne!(p, UNSET);
        path[k] = p;
    }
    debug_assert_eq!(path[0], ctx.graph.start());

    let cycle = cut_cycle(ctx, &path, alpha, &mut stats)?;
    Ok(MeanCycleResult {
        alpha,
        witness,
        cycle: Some(cycle),
        stats,
    })
}

fn linear(ctx: &Ctx) -> Result<MeanCycleResult> {
    let n = ctx.n;
    let mut stats = KernelStats::default();

    // pass 1: compute F_n with two rolling arrays
    let mut cur = ctx.initial_row();
    let mut next = vec![INF; n];
    stats.alloc(2 * n);
    for _ in 1..=n {
        ctx.relax(&cur, &mut next, None);
        std::mem::swap(&mut cur, &mut next);
    }
    let f_n = cur.clone();
    stats.alloc(n);

    // pass 2: recompute F_k while folding the fraction maxima
    let mut maxima = vec![Frac::NONE; n];
    stats.alloc(2 * n); // a num/den pair per node
    ctx.reset_initial(&mut cur);
    for k in 0..n {
        fold_row_maxima(&mut maxima, &f_n, &cur, n, k);
        ctx.relax(&cur, &mut next, None);
        std::mem::swap(&mut cur, &mut next);
    }

    let (alpha, witness) = select_alpha(&maxima)?;
    Ok(MeanCycleResult {
        alpha,
        witness,
        cycle: None,
        stats,
    })
}

fn sqrt32(ctx: &Ctx) -> Result<MeanCycleResult> {
    let n = ctx.n;
    let mut stats = KernelStats::default();

    // checkpoints 0 = c[0] < c[1] < ... < c[last] = n with gaps <= m
    let m = (n as f64).sqrt().ceil() as usize;
    let mut checkpoints: Vec<usize> = (0..).map(|i| i * m).take_while(|&c| c < n).collect();
    checkpoints.push(n);

    // pass 1: roll F_k, storing checkpoint rows
    let mut bank: Vec<Vec<i64>> = Vec::with_capacity(checkpoints.len());
    let mut cur = ctx.initial_row();
    let mut next = vec![INF; n];
    stats.alloc(2 * n);
    bank.push(cur.clone());
    stats.alloc(n);
    let mut ci = 1;
    for k in 1..=n {
        ctx.relax(&cur, &mut next, None);
        std::mem::swap(&mut cur, &mut next);
        if ci < checkpoints.len() && k == checkpoints[ci] {
            bank.push(cur.clone());
            stats.alloc(n);
            ci += 1;
        }
    }
    let f_n = &bank[checkpoints.len() - 1];

    // pass 2: recompute F_k while folding the fraction maxima
    let mut maxima = vec![Frac::NONE; n];
    stats.alloc(2 * n); // a num/den pair per node
    ctx.reset_initial(&mut cur);
    for k in 0..n {
        fold_row_maxima(&mut maxima, f_n, &cur, n, k);
        ctx.relax(&cur, &mut next, None);
        std::mem::swap(&mut cur, &mut next);
    }
    let (alpha, witness) = select_alpha(&maxima)?;
    stats.free(2 * n); // maxima retired
    drop(maxima);

    // backward reconstruction, one checkpoint segment at a time
    let mut path = vec![UNSET; n + 1];
    stats.alloc(n + 1);
    path[n] = witness;
    let mut pred_rows: Vec<Vec<u32>> = Vec::new();
    for seg in (1..checkpoints.len()).rev() {
        let lo = checkpoints[seg - 1];
        let hi = checkpoints[seg];
        // recompute F_k for lo < k <= hi with predecessors
        cur.copy_from_slice(&bank[seg - 1]);
        pred_rows.clear();
        for _ in lo + 1..=hi {
            let mut pred = vec![UNSET; n];
            stats.alloc(n);
            ctx.relax(&cur, &mut next, Some(&mut pred));
            std::mem::swap(&mut cur, &mut next);
            pred_rows.push(pred);
        }
        // walk the segment backward from the known node at position hi
        for k in (lo + 1..=hi).rev() {
            let here = path[k];
            let p = pred_rows[k - lo - 1][here as usize];
            debug_assert_ne!(p, UNSET, "broken predecessor chain");
            path[k - 1] = p;
        }
        let freed: usize = pred_rows.iter().map(Vec::len).sum();
        stats.free(freed);
        pred_rows.clear();
    }
    debug_assert_eq!(path[0], ctx.graph.start());

    let cycle = cut_cycle(ctx, &path, alpha, &mut stats)?;
    Ok(MeanCycleResult {
        alpha,
        witness,
        cycle: Some(cycle),
        stats,
    })
}

/// A minimum-weight length-n path from the start to the witness contains a
/// minimum-mean cycle as a contiguous subpath; splitting at repeated visits
/// of the same node, the minimum over consecutive same-node pairs attains it.
fn cut_cycle(ctx: &Ctx, path: &[u32], alpha: Rational, stats: &mut KernelStats) -> Result<Vec<u32>> {
    let n = ctx.n;
    let mut prefix = vec![0i64; path.len()];
    let mut last_seen = vec![usize::MAX; n];
    stats.alloc(path.len() + n);
    for i in 1..path.len() {
        let w = ctx
            .graph
            .min_edge_weight(path[i - 1], path[i])
            .expect("reconstructed path uses a real edge");
        prefix[i] = prefix[i - 1] + w;
    }
    for (i, &u) in path.iter().enumerate() {
        let j = last_seen[u as usize];
        if j != usize::MAX {
            let mean = Rational::new(prefix[i] - prefix[j], (i - j) as i64);
            if mean == alpha {
                return Ok(path[j..i].to_vec());
            }
        }
        last_seen[u as usize] = i;
    }
    // unreachable when alpha came from the same graph
    Err(Error::NoCycle)
}
