//! Linear-time factor-2 approximate decomposition: min-degree peeling
//! followed by maximal-average segmentation of the din sequence.
//!
//! Peeling visits vertices in increasing order of remaining degree; `din`
//! counts, for every vertex, its neighbors that precede it in the reverse
//! removal order. Prefix outer densities of that order are exactly block
//! averages of din, so the chain drops out of a pool-adjacent-violators
//! pass over din.

use crate::chain::{Chain, ChainKind};
use crate::graph::Graph;
use crate::rational::Rational;

use std::cmp::Reverse;
use std::collections::BinaryHeap;

/// The peeling order and its per-vertex bookkeeping, all aligned with
/// `order` positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeelOrder {
    /// Vertices in reverse removal order: the last vertex removed comes
    /// first.
    pub order: Vec<u32>,
    /// din of `order[k]`: neighbors at positions before k. Sums to m.
    pub din: Vec<u64>,
    /// Degree each vertex had at the moment it was removed.
    pub removal_degrees: Vec<u32>,
}

/// Operation counts for the peeling queue; stays within n + m pushes.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct PeelStats {
    pub queue_pushes: u64,
    pub queue_pops: u64,
}

/// Iteratively removes a minimum-degree vertex, smallest id on ties.
pub fn peel(graph: &Graph) -> PeelOrder {
    peel_with_stats(graph).0
}

pub fn peel_with_stats(graph: &Graph) -> (PeelOrder, PeelStats) {
    let n = graph.vertex_count();
    let mut stats = PeelStats::default();

    // Lazy min-heap on (degree, id): stale entries are skipped at pop time.
    // A plain bucket array would drop the log factor but cannot break
    // degree ties by smallest id in constant time.
    let mut degree: Vec<u32> = (0..n).map(|v| graph.degree(v) as u32).collect();
    let mut heap: BinaryHeap<Reverse<(u32, u32)>> = (0..n)
        .map(|v| Reverse((degree[v], v as u32)))
        .collect();
    stats.queue_pushes = n as u64;

    let mut removed = vec![false; n];
    let mut removal = Vec::with_capacity(n);
    let mut removal_degree_of = vec![0u32; n];

    while let Some(Reverse((deg, v))) = heap.pop() {
        stats.queue_pops += 1;
        let v = v as usize;
        if removed[v] || degree[v] != deg {
            continue;
        }
        removed[v] = true;
        removal_degree_of[v] = deg;
        removal.push(v as u32);
        for &w in graph.neighbors(v) {
            let w = w as usize;
            if !removed[w] {
                degree[w] -= 1;
                heap.push(Reverse((degree[w], w as u32)));
                stats.queue_pushes += 1;
            }
        }
    }

    let order: Vec<u32> = removal.into_iter().rev().collect();
    let mut position = vec![0u32; n];
    for (k, &v) in order.iter().enumerate() {
        position[v as usize] = k as u32;
    }
    let din: Vec<u64> = order
        .iter()
        .enumerate()
        .map(|(k, &v)| {
            graph
                .neighbors(v as usize)
                .iter()
                .filter(|&&w| (position[w as usize] as usize) < k)
                .count() as u64
        })
        .collect();
    let removal_degrees: Vec<u32> = order
        .iter()
        .map(|&v| removal_degree_of[v as usize])
        .collect();

    // a vertex's remaining degree at removal is exactly its din
    debug_assert!(din
        .iter()
        .zip(&removal_degrees)
        .all(|(&d, &r)| d == r as u64));

    (
        PeelOrder {
            order,
            din,
            removal_degrees,
        },
        stats,
    )
}

/// Splits the sequence into blocks of strictly decreasing averages, each
/// block ending at the farthest index attaining the maximal average of any
/// extension (largest index wins ties). Returns the end index of every
/// block; the last entry is always `y.len()`.
///
/// Pool-adjacent-violators: push each element as its own block, merge while
/// the left average is ≤ the right. Merging on equality is what makes ties
/// resolve toward the largest index.
pub fn maximal_average_intervals(y: &[u64]) -> Vec<usize> {
    struct Block {
        sum: u128,
        len: usize,
    }
    let mut blocks: Vec<Block> = Vec::new();
    for &value in y {
        blocks.push(Block {
            sum: value as u128,
            len: 1,
        });
        while blocks.len() >= 2 {
            let right = &blocks[blocks.len() - 1];
            let left = &blocks[blocks.len() - 2];
            // left.avg <= right.avg, by cross multiplication
            if left.sum * right.len as u128 <= right.sum * left.len as u128 {
                let right = blocks.pop().unwrap();
                let left = blocks.last_mut().unwrap();
                left.sum += right.sum;
                left.len += right.len;
            } else {
                break;
            }
        }
    }
    blocks
        .iter()
        .scan(0usize, |end, b| {
            *end += b.len;
            Some(*end)
        })
        .collect()
}

/// Greedy locally-dense decomposition: peel, segment din, and take the
/// peel-order prefixes at the block boundaries as the chain.
pub fn greedy_ld(graph: &Graph) -> Chain {
    greedy_ld_with_order(graph).0
}

/// Same as [`greedy_ld`], also handing back the peel order it used.
pub fn greedy_ld_with_order(graph: &Graph) -> (Chain, PeelOrder) {
    let n = graph.vertex_count();
    let peel_order = peel(graph);
    if n == 0 {
        return (Chain::trivial(graph, ChainKind::Greedy), peel_order);
    }

    let breakpoints = maximal_average_intervals(&peel_order.din);
    let mut sets = Vec::with_capacity(breakpoints.len() + 1);
    sets.push(graph.empty_set());
    let mut prefix = graph.empty_set();
    let mut next_vertex = 0usize;
    for &end in &breakpoints {
        while next_vertex < end {
            prefix.insert(peel_order.order[next_vertex] as usize);
            next_vertex += 1;
        }
        sets.push(prefix.clone());
    }

    let chain = Chain::from_sets(graph, sets, ChainKind::Greedy);

    // the block averages of din must equal the recomputed outer densities
    let mut start = 0usize;
    for (i, &end) in breakpoints.iter().enumerate() {
        let sum: u128 = peel_order.din[start..end].iter().map(|&d| d as u128).sum();
        let average = Rational::new(sum as i128, (end - start) as i128);
        assert_eq!(
            chain.step_densities()[i],
            average,
            "prefix density identity violated at block {i}"
        );
        start = end;
    }

    (chain, peel_order)
}
