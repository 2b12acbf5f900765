//! Helpers shared by the integration suites: random instances and the
//! naive reference computations the real algorithms are certified against.
//! Everything here is deliberately independent of the library's own
//! search/segmentation/flow code paths.
#![allow(dead_code)] // each test binary uses its own subset

use densify_core::{Graph, Rational, VertexSet};
use rand::rngs::StdRng;
use rand::Rng;

/// Erdős–Rényi graph on `n` labeled vertices with edge probability `p`.
pub fn er_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for w in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u as u32, w as u32));
            }
        }
    }
    Graph::from_unlabeled_edges(n, &edges)
}

pub fn random_subset(rng: &mut StdRng, n: usize, p: f64) -> VertexSet {
    VertexSet::from_ids(n, (0..n).filter(|_| rng.random_bool(p)))
}

/// O(n²) reference for the maximal-average segmentation: from each start,
/// scan every extension and take the best average, largest end on ties.
pub fn naive_maximal_average_intervals(y: &[u64]) -> Vec<usize> {
    let mut breakpoints = Vec::new();
    let mut start = 0usize;
    while start < y.len() {
        let mut best_end = start + 1;
        let mut best: (u128, u128) = (y[start] as u128, 1);
        let mut sum = y[start] as u128;
        for end in start + 2..=y.len() {
            sum += y[end - 1] as u128;
            let len = (end - start) as u128;
            // average >= best average, largest end on ties
            if sum * best.1 >= best.0 * len {
                best = (sum, len);
                best_end = end;
            }
        }
        breakpoints.push(best_end);
        start = best_end;
    }
    breakpoints
}

/// Exhaustive min-cut reference: enumerates every source side, returns the
/// optimal value and the maximal minimizing side. Also checks the side
/// lattice: the union of all minimizing sides must itself minimize.
pub fn enumerate_min_cut(
    nodes: usize,
    s: usize,
    t: usize,
    arcs: &[(usize, usize, u64)],
) -> (u128, Vec<bool>) {
    assert!(nodes <= 20);
    let cut_value = |side: u32| -> u128 {
        arcs.iter()
            .filter(|&&(from, to, _)| side >> from & 1 == 1 && side >> to & 1 == 0)
            .map(|&(_, _, cap)| cap as u128)
            .sum()
    };
    let mut best = u128::MAX;
    let mut union_side = 0u32;
    for free in 0u32..1 << (nodes - 2) {
        // scatter the free bits across the non-terminal nodes
        let mut side = 1u32 << s;
        let mut bit = 0;
        for v in 0..nodes {
            if v != s && v != t {
                if free >> bit & 1 == 1 {
                    side |= 1 << v;
                }
                bit += 1;
            }
        }
        let value = cut_value(side);
        if value < best {
            best = value;
            union_side = side;
        } else if value == best {
            union_side |= side;
        }
    }
    assert_eq!(
        cut_value(union_side),
        best,
        "union of minimizing sides must minimize"
    );
    let side = (0..nodes).map(|v| union_side >> v & 1 == 1).collect();
    (best, side)
}

/// Exhaustive anchored maximizer of `|E(W)| − α·|W|` over
/// `anchor ⊆ W ⊆ universe`, largest W on ties. Usable up to ~20 vertices.
pub fn naive_compact_graph(
    graph: &Graph,
    alpha: Rational,
    anchor: &VertexSet,
    universe: &VertexSet,
) -> VertexSet {
    let free: Vec<usize> = universe.difference(anchor).iter().collect();
    assert!(free.len() <= 20);
    let mut best: Option<(Rational, VertexSet)> = None;
    for mask in 0u32..1 << free.len() {
        let mut w = anchor.clone();
        for (bit, &v) in free.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                w.insert(v);
            }
        }
        let score = Rational::from_int(graph.internal_edge_count(&w) as i128)
            - alpha * Rational::from_int(w.len() as i128);
        let replace = match &best {
            None => true,
            Some((s, b)) => score > *s || (score == *s && w.len() > b.len()),
        };
        if replace {
            best = Some((score, w));
        }
    }
    best.unwrap().1
}
