//! Exact locally-dense decomposition via anchored minimum cuts.
//!
//! The search keeps a pair of already-certified sets `X ⊊ Y`, probes the
//! interval with `α = d(Y, X) + 1/n²`, and either certifies the pair as
//! consecutive or discovers a new set strictly between them. All arithmetic
//! stays rational: the 1/n² increment (n always the vertex count of the
//! whole graph) is what separates neighboring candidate densities, so the
//! cut network is built from capacities scaled by the denominator of α.

use crate::chain::{Chain, ChainKind};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::mincut::FlowNetwork;
use crate::rational::Rational;
use crate::vertex_set::VertexSet;

#[cfg(feature = "parallel")]
use std::sync::atomic::{AtomicU64, Ordering};
#[cfg(feature = "parallel")]
use std::sync::Mutex;

/// One anchored maximizer query: find the largest `W` with
/// `anchor ⊆ W ⊆ universe` maximizing `|E(W)| − α·|W|`.
#[derive(Debug, Clone)]
pub struct AlphaQuery {
    pub alpha: Rational,
    pub anchor: VertexSet,
    pub universe: VertexSet,
}

impl AlphaQuery {
    pub fn new(alpha: Rational, anchor: VertexSet, universe: VertexSet) -> Result<AlphaQuery> {
        if alpha.is_negative() {
            return Err(Error::InvalidQuery("alpha must be nonnegative"));
        }
        if anchor.universe() != universe.universe() {
            return Err(Error::UniverseMismatch {
                left: anchor.universe(),
                right: universe.universe(),
            });
        }
        if !anchor.is_strict_subset_of(&universe) {
            return Err(Error::InvalidQuery(
                "anchor must be a strict subset of the universe",
            ));
        }
        Ok(AlphaQuery {
            alpha,
            anchor,
            universe,
        })
    }
}

/// The cut network over the free vertices plus the node ids (in network
/// order) they map back to.
pub struct CutNetwork {
    pub net: FlowNetwork,
    pub vertex_of_node: Vec<u32>,
}

fn checked_cap(value: u128) -> Result<u64> {
    u64::try_from(value).map_err(|_| Error::CapacityOverflow {
        value: value.to_string(),
    })
}

/// Builds the s–t network whose minimum cut solves the query.
///
/// With `α = p/q` in lowest terms, every weight is scaled by `q`: an
/// internal edge of the free part becomes an opposite arc pair of capacity
/// `q`, each free vertex y gets an arc to t of capacity `2p` and an arc from
/// s of capacity `q·(deg(y; free) + 2·deg(y; anchor))`, degrees taken inside
/// the induced subgraph of the universe.
pub fn build_cut_network(graph: &Graph, query: &AlphaQuery) -> Result<CutNetwork> {
    let free = query.universe.difference(&query.anchor);
    let vertex_of_node: Vec<u32> = free.iter().map(|v| v as u32).collect();
    let mut node_of_vertex = vec![u32::MAX; graph.vertex_count()];
    for (i, &v) in vertex_of_node.iter().enumerate() {
        node_of_vertex[v as usize] = i as u32;
    }

    let f = vertex_of_node.len();
    let (s, t) = (f, f + 1);
    let mut net = FlowNetwork::new(f + 2, s, t);

    let p = query.alpha.numerator() as u128;
    let q = query.alpha.denominator() as u128;
    let sink_cap = checked_cap(2 * p)?;
    let edge_cap = checked_cap(q)?;

    for (node, &v) in vertex_of_node.iter().enumerate() {
        let v = v as usize;
        let mut deg_free = 0u128;
        let mut deg_anchor = 0u128;
        for &w in graph.neighbors(v) {
            let w = w as usize;
            if free.contains(w) {
                deg_free += 1;
                // one arc pair per undirected edge
                if node_of_vertex[w] as usize > node {
                    net.add_undirected(node, node_of_vertex[w] as usize, edge_cap);
                }
            } else if query.anchor.contains(w) {
                deg_anchor += 1;
            }
        }
        let source_cap = checked_cap(q * (deg_free + 2 * deg_anchor))?;
        if source_cap > 0 {
            net.add_arc(s, node, source_cap);
        }
        if sink_cap > 0 {
            net.add_arc(node, t, sink_cap);
        }
    }

    Ok(CutNetwork { net, vertex_of_node })
}

/// The largest maximizer of `|E(W)| − α·|W|` over `anchor ⊆ W ⊆ universe`.
pub fn compact_graph(graph: &Graph, query: &AlphaQuery) -> Result<VertexSet> {
    let CutNetwork {
        net,
        vertex_of_node,
    } = build_cut_network(graph, query)?;
    let s = net.source();
    let cut = net.min_cut();

    let mut result = query.anchor.clone();
    for node in cut.source_side.iter() {
        if node != s {
            result.insert(vertex_of_node[node] as usize);
        }
    }
    Ok(result)
}

/// Instrumentation for one decomposition run.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct ExactStats {
    /// Number of anchored min-cut solves; always `2k − 3` for a chain of
    /// total length `k ≥ 2`.
    pub min_cut_calls: u64,
}

struct Interval {
    lo: VertexSet,
    hi: VertexSet,
}

/// One probe of the interval `(lo, hi)`: returns `lo` when the pair is
/// consecutive in the decomposition, otherwise a set strictly between.
fn probe(graph: &Graph, increment: Rational, interval: &Interval) -> VertexSet {
    let alpha = graph
        .outer_density(&interval.hi, &interval.lo)
        .expect("hi strictly contains lo")
        + increment;
    let query = AlphaQuery::new(alpha, interval.lo.clone(), interval.hi.clone())
        .expect("intervals are strictly nested");
    compact_graph(graph, &query).expect("scaled capacities exceed u64")
}

fn exact_ld_impl(graph: &Graph, parallel: bool) -> (Chain, ExactStats) {
    let n = graph.vertex_count();
    if n == 0 {
        return (Chain::trivial(graph, ChainKind::Exact), ExactStats::default());
    }
    // 1/n² with n the vertex count of the whole graph, also in recursive
    // subproblems: the separation bound is proved against the full graph.
    let increment = Rational::new(1, (n as i128) * (n as i128));
    let root = Interval {
        lo: graph.empty_set(),
        hi: graph.full_set(),
    };

    let (mut found, calls) = if parallel {
        run_parallel(graph, increment, root)
    } else {
        run_sequential(graph, increment, root)
    };

    found.push(graph.empty_set());
    found.push(graph.full_set());
    found.sort_by_key(|s| s.len());
    found.dedup();

    (
        Chain::from_sets(graph, found, ChainKind::Exact),
        ExactStats {
            min_cut_calls: calls,
        },
    )
}

fn run_sequential(
    graph: &Graph,
    increment: Rational,
    root: Interval,
) -> (Vec<VertexSet>, u64) {
    let mut found = Vec::new();
    let mut calls = 0u64;
    // explicit work queue: chains can get long, the call stack should not
    let mut work = vec![root];
    while let Some(interval) = work.pop() {
        calls += 1;
        let z = probe(graph, increment, &interval);
        if z != interval.lo {
            debug_assert!(interval.lo.is_strict_subset_of(&z));
            debug_assert!(z.is_strict_subset_of(&interval.hi));
            work.push(Interval {
                lo: interval.lo,
                hi: z.clone(),
            });
            work.push(Interval {
                lo: z.clone(),
                hi: interval.hi,
            });
            found.push(z);
        }
    }
    (found, calls)
}

#[cfg(feature = "parallel")]
fn run_parallel(graph: &Graph, increment: Rational, root: Interval) -> (Vec<VertexSet>, u64) {
    let found = Mutex::new(Vec::new());
    let calls = AtomicU64::new(0);

    fn task<'scope>(
        scope: &rayon::Scope<'scope>,
        graph: &'scope Graph,
        increment: Rational,
        interval: Interval,
        found: &'scope Mutex<Vec<VertexSet>>,
        calls: &'scope AtomicU64,
    ) {
        calls.fetch_add(1, Ordering::Relaxed);
        let z = probe(graph, increment, &interval);
        if z != interval.lo {
            found.lock().unwrap().push(z.clone());
            let lower = Interval {
                lo: interval.lo,
                hi: z.clone(),
            };
            let upper = Interval {
                lo: z,
                hi: interval.hi,
            };
            scope.spawn(move |s| task(s, graph, increment, lower, found, calls));
            scope.spawn(move |s| task(s, graph, increment, upper, found, calls));
        }
    }

    rayon::scope(|s| task(s, graph, increment, root, &found, &calls));

    (found.into_inner().unwrap(), calls.into_inner())
}

#[cfg(not(feature = "parallel"))]
fn run_parallel(graph: &Graph, increment: Rational, root: Interval) -> (Vec<VertexSet>, u64) {
    run_sequential(graph, increment, root)
}

/// Exact locally-dense decomposition of the graph.
///
/// Independent search intervals are solved concurrently when the `parallel`
/// feature is enabled; the result is identical either way.
pub fn exact_ld(graph: &Graph) -> Chain {
    exact_ld_with_stats(graph).0
}

pub fn exact_ld_with_stats(graph: &Graph) -> (Chain, ExactStats) {
    exact_ld_impl(graph, cfg!(feature = "parallel"))
}

/// Single-threaded variant, independent of the `parallel` feature. Exists
/// so benchmarks can compare the two schedulers on one build.
pub fn exact_ld_seq(graph: &Graph) -> Chain {
    exact_ld_seq_with_stats(graph).0
}

pub fn exact_ld_seq_with_stats(graph: &Graph) -> (Chain, ExactStats) {
    exact_ld_impl(graph, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{g1, g2, load_edge_list};

    fn query(g: &Graph, alpha: Rational, anchor: VertexSet) -> AlphaQuery {
        AlphaQuery::new(alpha, anchor, g.full_set()).unwrap()
    }

    #[test]
    fn network_capacities_match_construction() {
        let g = g1();
        let q = query(&g, Rational::new(3, 2), g.empty_set());
        let cut_net = build_cut_network(&g, &q).unwrap();
        assert_eq!(cut_net.net.node_count(), 8); // 6 free + s + t
        // p/q = 3/2: every sink arc 2p = 6, b (degree 4) source arc q*4 = 8,
        // internal arcs q = 2
        let b_node = cut_net
            .vertex_of_node
            .iter()
            .position(|&v| g.label(v as usize) == "b")
            .unwrap();
        let mut cut = cut_net.net.min_cut();
        let mut b_source_cap = None;
        let mut sink_caps = Vec::new();
        let mut internal_caps = Vec::new();
        for (from, to, cap, _) in cut.arc_flows() {
            if cap == 0 {
                continue; // reverse halves of directed arcs
            }
            if from == 6 {
                if to == b_node {
                    b_source_cap = Some(cap);
                }
            } else if to == 7 {
                sink_caps.push(cap);
            } else if from < 6 && to < 6 {
                internal_caps.push(cap);
            }
        }
        assert_eq!(b_source_cap, Some(8));
        assert_eq!(sink_caps, vec![6; 6]);
        assert_eq!(internal_caps.len(), 18); // 9 undirected edges, both halves
        assert!(internal_caps.iter().all(|&c| c == 2));
    }

    #[test]
    fn anchored_source_capacity() {
        let g = g1();
        let anchor = g.set_of(&["a", "b", "c", "d"]);
        let q = query(&g, Rational::ONE, anchor);
        let cut_net = build_cut_network(&g, &q).unwrap();
        // free part is {e, f}; w(e) = deg(e;{e,f}) + 2 deg(e;X) = 1 + 4 = 5
        let e_node = cut_net
            .vertex_of_node
            .iter()
            .position(|&v| g.label(v as usize) == "e")
            .unwrap();
        let s = cut_net.net.source();
        let mut cut = cut_net.net.min_cut();
        let e_cap = cut
            .arc_flows()
            .into_iter()
            .find(|&(from, to, cap, _)| from == s && to == e_node && cap > 0)
            .map(|(_, _, cap, _)| cap);
        assert_eq!(e_cap, Some(5));
    }

    #[test]
    fn compact_graph_examples() {
        let g = g1();
        let b1 = g.set_of(&["a", "b", "c", "d", "e"]);

        let w = compact_graph(&g, &query(&g, Rational::new(31, 20), g.empty_set())).unwrap();
        assert_eq!(w, b1);

        let w = compact_graph(&g, &query(&g, Rational::from_int(2), g.empty_set())).unwrap();
        assert!(w.is_empty());

        // alpha = 0 maximizes |E(W)| and ties go to the largest W
        let w = compact_graph(&g, &query(&g, Rational::ZERO, g.empty_set())).unwrap();
        assert_eq!(w, g.full_set());
    }

    #[test]
    fn exact_chain_on_toy_graphs() {
        let g = g1();
        let chain = exact_ld(&g);
        assert_eq!(
            chain.sets(),
            &[
                g.empty_set(),
                g.set_of(&["a", "b", "c", "d", "e"]),
                g.full_set()
            ]
        );
        assert_eq!(
            chain.step_densities(),
            &[Rational::new(8, 5), Rational::new(1, 1)]
        );

        let g = g2();
        let chain = exact_ld(&g);
        assert_eq!(
            chain.sets(),
            &[
                g.empty_set(),
                g.set_of(&["a", "b", "c", "d", "e"]),
                g.full_set()
            ]
        );
        assert_eq!(
            chain.step_densities(),
            &[Rational::new(7, 5), Rational::new(4, 3)]
        );
    }

    #[test]
    fn edgeless_graph() {
        let (g, _) = load_edge_list("# empty\n".as_bytes()).unwrap();
        assert_eq!(g.vertex_count(), 0);
        let chain = exact_ld(&g);
        assert_eq!(chain.total_len(), 1);

        let g = Graph::from_unlabeled_edges(3, &[]);
        let chain = exact_ld(&g);
        assert_eq!(chain.sets(), &[g.empty_set(), g.full_set()]);
        assert_eq!(chain.step_densities(), &[Rational::ZERO]);
    }

    #[test]
    fn call_count_is_2k_minus_3() {
        let (chain, stats) = exact_ld_with_stats(&g1());
        assert_eq!(chain.total_len(), 3);
        assert_eq!(stats.min_cut_calls, 3);

        let g = Graph::from_unlabeled_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let (chain, stats) = exact_ld_with_stats(&g); // K4: single level
        assert_eq!(chain.total_len(), 2);
        assert_eq!(stats.min_cut_calls, 1);
    }

    #[test]
    fn sequential_and_default_agree() {
        let g = g2();
        assert_eq!(exact_ld(&g), exact_ld_seq(&g));
    }

    #[test]
    fn disjoint_cliques_stack_by_density() {
        // disjoint K3..K8: the chain peels in strictly one clique per
        // level, densest first
        let mut edges = Vec::new();
        let mut start = 0u32;
        let mut sizes = Vec::new();
        for k in 3..=8u32 {
            for u in 0..k {
                for w in u + 1..k {
                    edges.push((start + u, start + w));
                }
            }
            sizes.push(k as usize);
            start += k;
        }
        let g = Graph::from_unlabeled_edges(start as usize, &edges);
        let (chain, stats) = exact_ld_with_stats(&g);
        // ∅ then six levels, one clique joined per step, ending at V
        assert_eq!(chain.total_len(), 7);
        let mut expected_size = 0usize;
        for (i, k) in (3..=8usize).rev().enumerate() {
            expected_size += k;
            assert_eq!(chain.sets()[i + 1].len(), expected_size);
            assert_eq!(
                chain.step_densities()[i],
                Rational::new((k * (k - 1) / 2) as i128, k as i128)
            );
        }
        assert_eq!(stats.min_cut_calls, 2 * 7 - 3);
        assert_eq!(chain, exact_ld_seq(&g));
    }

    #[test]
    fn tied_densest_subgraphs_merge() {
        // two disjoint K4s tie at density 3/2; the largest maximizer wins,
        // so the first chain set is their union, not either clique
        let mut edges = Vec::new();
        for base in [0u32, 4] {
            for u in 0..4 {
                for w in u + 1..4 {
                    edges.push((base + u, base + w));
                }
            }
        }
        let g = Graph::from_unlabeled_edges(9, &edges); // vertex 8 isolated
        let chain = exact_ld(&g);
        assert_eq!(chain.sets()[1].len(), 8);
        assert_eq!(
            chain.step_densities(),
            &[Rational::new(3, 2), Rational::ZERO]
        );
    }

    #[test]
    fn alpha_query_validation() {
        let g = g1();
        assert!(AlphaQuery::new(Rational::new(-1, 2), g.empty_set(), g.full_set()).is_err());
        assert!(AlphaQuery::new(Rational::ONE, g.full_set(), g.full_set()).is_err());
        assert!(AlphaQuery::new(Rational::ONE, g.empty_set(), g.full_set()).is_ok());
    }
}
