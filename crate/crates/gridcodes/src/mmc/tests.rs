use super::*;
use crate::mmc::oracle;
use crate::ratio::ratio;

fn all_variants() -> [SpaceVariant; 3] {
    [
        SpaceVariant::Quadratic,
        SpaceVariant::Linear,
        SpaceVariant::Sqrt32,
    ]
}

/// Mean weight of a cycle given as a node list without repeated endpoint.
fn cycle_mean(g: &WeightedDigraph, cycle: &[u32]) -> Rational {
    let mut total = 0i64;
    for i in 0..cycle.len() {
        let from = cycle[i];
        let to = cycle[(i + 1) % cycle.len()];
        total += g.min_edge_weight(from, to).expect("cycle edge exists");
    }
    Rational::new(total, cycle.len() as i64)
}

#[test]
fn single_self_loop() {
    let mut g = WeightedDigraph::new(1, 0);
    g.add_edge(0, 0, 3);
    for v in all_variants() {
        let r = karp(&g, v, 1).unwrap();
        assert_eq!(r.alpha, ratio(3, 1));
        if let Some(c) = &r.cycle {
            assert_eq!(c, &vec![0]);
            assert_eq!(cycle_mean(&g, c), r.alpha);
        }
    }
}

#[test]
fn two_node_cycle() {
    let mut g = WeightedDigraph::new(2, 0);
    g.add_edge(0, 1, 1);
    g.add_edge(1, 0, 2);
    for v in all_variants() {
        let r = karp(&g, v, 1).unwrap();
        assert_eq!(r.alpha, ratio(3, 2));
        if let Some(c) = &r.cycle {
            assert_eq!(c.len(), 2);
            assert_eq!(cycle_mean(&g, c), ratio(3, 2));
        }
    }
}

#[test]
fn triangle_with_chord_two_cycle() {
    // triangle weights 1,1,4 plus a 2-cycle 1<->2 with weights 1,2
    let mut g = WeightedDigraph::new(3, 0);
    g.add_edge(0, 1, 1);
    g.add_edge(1, 2, 1);
    g.add_edge(2, 0, 4);
    g.add_edge(1, 2, 1);
    g.add_edge(2, 1, 2);
    assert_eq!(oracle::min_mean_by_enumeration(&g).unwrap(), ratio(3, 2));
    for v in all_variants() {
        assert_eq!(karp(&g, v, 1).unwrap().alpha, ratio(3, 2));
    }
}

#[test]
fn zero_self_loop_is_minimal() {
    let mut g = WeightedDigraph::new(3, 0);
    g.add_edge(0, 1, 5);
    g.add_edge(1, 2, 1);
    g.add_edge(2, 0, 1);
    g.add_edge(1, 1, 0);
    assert_eq!(oracle::min_mean_by_enumeration(&g).unwrap(), ratio(0, 1));
    for v in all_variants() {
        assert_eq!(karp(&g, v, 1).unwrap().alpha, ratio(0, 1));
    }
}

#[test]
fn no_cycle_detected() {
    let mut g = WeightedDigraph::new(3, 0);
    g.add_edge(0, 1, 1);
    g.add_edge(1, 2, 1);
    for v in all_variants() {
        assert!(matches!(karp(&g, v, 1), Err(Error::NoCycle)));
    }
    assert!(matches!(
        oracle::min_mean_by_enumeration(&g),
        Err(Error::NoCycle)
    ));
}

#[test]
fn thread_counts_bit_identical() {
    let g = random_reachable_graph(9, 23, 0xfeed_beef, true);
    for v in all_variants() {
        let r1 = karp(&g, v, 1).unwrap();
        for threads in [2, 4, 7] {
            let rt = karp(&g, v, threads).unwrap();
            assert_eq!(r1.alpha, rt.alpha);
            assert_eq!(r1.witness, rt.witness);
            assert_eq!(r1.cycle, rt.cycle);
        }
    }
}

#[test]
fn translation_shifts_alpha_exactly() {
    for seed in 0..30u64 {
        let g = random_reachable_graph(7, 16, seed * 77 + 5, true);
        let base = karp(&g, SpaceVariant::Quadratic, 1).unwrap().alpha;
        for c in 1..4i64 {
            let mut shifted = WeightedDigraph::new(g.node_count(), g.start());
            for v in 0..g.node_count() as u32 {
                for &(t, w) in g.out_edges(v) {
                    shifted.add_edge(v, t, w + c);
                }
            }
            let a = karp(&shifted, SpaceVariant::Quadratic, 1).unwrap().alpha;
            assert_eq!(a, base + Rational::from_integer(c));
        }
    }
}

#[test]
fn oracle_lower_bounds_every_simple_cycle() {
    for seed in 0..40u64 {
        let g = random_reachable_graph(8, 18, seed * 31 + 1, true);
        let alpha = karp(&g, SpaceVariant::Linear, 1).unwrap().alpha;
        oracle::for_each_simple_cycle(&g, |nodes, weight| {
            assert!(alpha <= Rational::new(weight, nodes.len() as i64));
        });
    }
}

#[test]
fn linear_variant_memory_is_five_arrays() {
    let g = random_reachable_graph(800, 2400, 42, true);
    let r = karp(&g, SpaceVariant::Linear, 1).unwrap();
    let n = g.node_count();
    assert!(
        r.stats.peak_entries <= 5 * n + 8,
        "linear peak {} exceeds 5n = {}",
        r.stats.peak_entries,
        5 * n
    );
}

#[test]
fn edge_list_round_trip() {
    let g = random_reachable_graph(6, 12, 99, true);
    let text = g.to_edge_list_text();
    let back = WeightedDigraph::from_edge_list_text(&text).unwrap();
    assert_eq!(g, back);
    assert!(WeightedDigraph::from_edge_list_text("").is_err());
    assert!(WeightedDigraph::from_edge_list_text("2 0\n0 5 1\n").is_err());
}

#[test]
fn strongly_connected_check() {
    let mut g = WeightedDigraph::new(3, 0);
    g.add_edge(0, 1, 1);
    g.add_edge(1, 2, 1);
    g.add_edge(2, 0, 1);
    assert!(g.is_strongly_connected());
    let mut h = WeightedDigraph::new(3, 0);
    h.add_edge(0, 1, 1);
    h.add_edge(1, 0, 1);
    h.add_edge(1, 2, 1);
    assert!(!h.is_strongly_connected());
    assert_eq!(h.reachable_from_start(), 3);
}

/// Deterministic random graph: a random arborescence from the start (so all
/// nodes are reachable) plus extra random edges; `force_cycle` adds one back
/// edge to the start.
pub(crate) fn random_reachable_graph(
    n: usize,
    extra_edges: usize,
    seed: u64,
    force_cycle: bool,
) -> WeightedDigraph {
    let mut state = seed.wrapping_mul(0x9e3779b97f4a7c15).max(1);
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let mut g = WeightedDigraph::new(n, 0);
    for v in 1..n as u32 {
        let parent = (next() % v as u64) as u32;
        g.add_edge(parent, v, (next() % 10) as i64);
    }
    for _ in 0..extra_edges {
        let a = (next() % n as u64) as u32;
        let b = (next() % n as u64) as u32;
        if a != b {
            g.add_edge(a, b, (next() % 10) as i64);
        }
    }
    if force_cycle {
        let a = (next() % n as u64) as u32;
        g.add_edge(a, 0, (next() % 10) as i64);
    }
    g
}
