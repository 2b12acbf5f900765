//! Classic k-core decomposition, sharing the peeling order with the greedy
//! decomposition so the two differ only in how they segment it.
//!
//! Core numbers come from Matula–Beck peeling: remove a minimum-degree
//! vertex, assign it the running maximum of removal degrees. Since a
//! vertex's remaining degree at removal equals its din, core numbers are the
//! suffix maxima of din over the reverse removal order, and each k-core is a
//! prefix of that order.

use crate::chain::{Chain, ChainKind};
use crate::graph::Graph;
use crate::greedy::{peel, PeelOrder};

/// The core chain plus per-vertex core numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreResult {
    pub chain: Chain,
    /// `core_number[v]` is the largest k such that v lies in the k-core.
    pub core_number: Vec<u32>,
}

pub fn core_decomposition(graph: &Graph) -> CoreResult {
    core_decomposition_with_order(graph).0
}

/// Same as [`core_decomposition`], also handing back the peel order.
pub fn core_decomposition_with_order(graph: &Graph) -> (CoreResult, PeelOrder) {
    let n = graph.vertex_count();
    let peel_order = peel(graph);
    if n == 0 {
        return (
            CoreResult {
                chain: Chain::trivial(graph, ChainKind::Core),
                core_number: Vec::new(),
            },
            peel_order,
        );
    }

    // suffix maximum of din along the reverse removal order
    let mut core_at = vec![0u32; n];
    let mut running = 0u32;
    for k in (0..n).rev() {
        running = running.max(peel_order.din[k] as u32);
        core_at[k] = running;
    }
    let mut core_number = vec![0u32; n];
    for (k, &v) in peel_order.order.iter().enumerate() {
        core_number[v as usize] = core_at[k];
    }

    // each distinct core value closes one prefix of the order
    let mut sets = vec![graph.empty_set()];
    let mut prefix = graph.empty_set();
    for k in 0..n {
        prefix.insert(peel_order.order[k] as usize);
        if k + 1 == n || core_at[k + 1] < core_at[k] {
            sets.push(prefix.clone());
        }
    }

    (
        CoreResult {
            chain: Chain::from_sets(graph, sets, ChainKind::Core),
            core_number,
        },
        peel_order,
    )
}
