//! Brute-force reference implementations for small graphs, used to certify
//! the real algorithms. Everything here is exponential and refuses to run
//! past hard size caps.

use crate::chain::{Chain, ChainKind};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Largest graph `brute_densest` will enumerate.
pub const DENSEST_CAP: usize = 20;
/// Largest graph the chain oracle and the local-density check accept.
pub const CHAIN_CAP: usize = 14;

/// Bitmask view of a small graph.
struct MaskGraph {
    n: usize,
    adj: Vec<u32>,
}

impl MaskGraph {
    fn new(graph: &Graph) -> MaskGraph {
        let n = graph.vertex_count();
        let adj = (0..n)
            .map(|v| {
                graph
                    .neighbors(v)
                    .iter()
                    .fold(0u32, |mask, &w| mask | 1 << w)
            })
            .collect();
        MaskGraph { n, adj }
    }

    fn edge_count(&self, mask: u32) -> u64 {
        let mut twice = 0u64;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            twice += (self.adj[v] & mask).count_ones() as u64;
        }
        twice / 2
    }

    /// Edges from `x` into `y`; the masks must be disjoint.
    fn cross(&self, x: u32, y: u32) -> u64 {
        debug_assert_eq!(x & y, 0);
        let mut count = 0u64;
        let mut rest = x;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            count += (self.adj[v] & y).count_ones() as u64;
        }
        count
    }

    /// Outer density numerator/denominator of disjoint `x` against `y`.
    fn outer(&self, x: u32, y: u32) -> (u64, u64) {
        (self.edge_count(x) + self.cross(x, y), x.count_ones() as u64)
    }

    fn to_set(&self, mask: u32) -> VertexSet {
        VertexSet::from_ids(self.n, (0..self.n).filter(|&v| mask >> v & 1 == 1))
    }
}

fn frac_less(a: (u64, u64), b: (u64, u64)) -> bool {
    (a.0 as u128) * (b.1 as u128) < (b.0 as u128) * (a.1 as u128)
}

/// Candidate ordering for maximizers: higher density first, then larger
/// set, then smaller mask for determinism.
fn better(cand: (u64, u64, u32), best: (u64, u64, u32)) -> bool {
    let (cd, bd) = ((cand.0, cand.1), (best.0, best.1));
    if frac_less(bd, cd) {
        return true;
    }
    if frac_less(cd, bd) {
        return false;
    }
    cand.1 > best.1 || (cand.1 == best.1 && cand.2 < best.2)
}

/// The densest subgraph by exhaustive enumeration, largest on ties.
pub fn brute_densest(graph: &Graph) -> Result<VertexSet> {
    let n = graph.vertex_count();
    if n > DENSEST_CAP {
        return Err(Error::GraphTooLarge { n, cap: DENSEST_CAP });
    }
    if n == 0 {
        return Err(Error::EmptyVertexSet);
    }
    let mg = MaskGraph::new(graph);
    let score = |mask: u32| (mg.edge_count(mask), mask.count_ones() as u64, mask);

    #[cfg(feature = "parallel")]
    let best = (1u32..1 << n)
        .into_par_iter()
        .map(score)
        .reduce_with(|a, b| if better(b, a) { b } else { a })
        .unwrap();
    #[cfg(not(feature = "parallel"))]
    let best = (1u32..1 << n)
        .map(score)
        .reduce(|a, b| if better(b, a) { b } else { a })
        .unwrap();

    Ok(mg.to_set(best.2))
}

/// The exact locally-dense chain by repeatedly taking the densest strict
/// superset: `B_i = argmax_{W ⊋ B_{i−1}} d(W, B_{i−1})`, largest W on ties.
pub fn brute_locally_dense_chain(graph: &Graph) -> Result<Chain> {
    let n = graph.vertex_count();
    if n > CHAIN_CAP {
        return Err(Error::GraphTooLarge { n, cap: CHAIN_CAP });
    }
    if n == 0 {
        return Ok(Chain::trivial(graph, ChainKind::Exact));
    }
    let mg = MaskGraph::new(graph);
    let full: u32 = (1 << n) - 1;

    let mut sets = vec![graph.empty_set()];
    let mut current = 0u32;
    while current != full {
        let comp = full & !current;
        // every strict superset is current | s for a nonempty submask s
        let mut best: Option<(u64, u64, u32)> = None;
        let mut s = comp;
        while s != 0 {
            let (num, den) = mg.outer(s, current);
            let cand = (num, den, current | s);
            // size and mask orderings on the union track those on s
            if best.is_none_or(|b| better(cand, b)) {
                best = Some(cand);
            }
            s = (s - 1) & comp;
        }
        current = best.unwrap().2;
        sets.push(mg.to_set(current));
    }

    Ok(Chain::from_sets(graph, sets, ChainKind::Exact))
}

/// Exhaustive check of the local-density definition: `w` is locally dense
/// when no nonempty `X ⊆ w` and nonempty `Y` disjoint from `w` satisfy
/// `d(X, w∖X) ≤ d(Y, w)`. Equivalently the cheapest removal from `w` still
/// beats the best addition. `X = w` is allowed, with `d(w, ∅) = |E(w)|/|w|`.
pub fn is_locally_dense(graph: &Graph, w: &VertexSet) -> Result<bool> {
    let n = graph.vertex_count();
    if n > CHAIN_CAP {
        return Err(Error::GraphTooLarge { n, cap: CHAIN_CAP });
    }
    let mg = MaskGraph::new(graph);
    let w_mask = w.iter().fold(0u32, |m, v| m | 1 << v);
    let full: u32 = (1 << n) - 1;
    let comp = full & !w_mask;
    if w_mask == 0 || comp == 0 {
        // no nonempty X inside, or no nonempty Y outside
        return Ok(true);
    }

    let mut min_inside: Option<(u64, u64)> = None;
    let mut x = w_mask;
    while x != 0 {
        let d = mg.outer(x, w_mask & !x);
        if min_inside.is_none_or(|m| frac_less(d, m)) {
            min_inside = Some(d);
        }
        x = (x - 1) & w_mask;
    }

    let mut max_outside: Option<(u64, u64)> = None;
    let mut y = comp;
    while y != 0 {
        let d = mg.outer(y, w_mask);
        if max_outside.is_none_or(|m| frac_less(m, d)) {
            max_outside = Some(d);
        }
        y = (y - 1) & comp;
    }

    let min_inside = min_inside.unwrap();
    let max_outside = max_outside.unwrap();
    // locally dense iff min_inside > max_outside
    Ok(frac_less(max_outside, min_inside))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{g1, g2, Graph};
    use crate::rational::Rational;

    #[test]
    fn densest_subgraph_examples() {
        let g = g1();
        let best = brute_densest(&g).unwrap();
        assert_eq!(best, g.set_of(&["a", "b", "c", "d", "e"]));
        assert_eq!(g.density(&best).unwrap(), Rational::new(8, 5));

        let g = g2();
        let best = brute_densest(&g).unwrap();
        assert_eq!(best, g.set_of(&["a", "b", "c", "d", "e"]));
        assert_eq!(g.density(&best).unwrap(), Rational::new(7, 5));

        let triangle = Graph::from_unlabeled_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        let best = brute_densest(&triangle).unwrap();
        assert_eq!(best, triangle.full_set());
        assert_eq!(triangle.density(&best).unwrap(), Rational::ONE);
    }

    #[test]
    fn chain_examples() {
        let g = g1();
        let chain = brute_locally_dense_chain(&g).unwrap();
        assert_eq!(
            chain.sets(),
            &[
                g.empty_set(),
                g.set_of(&["a", "b", "c", "d", "e"]),
                g.full_set()
            ]
        );

        let g = g2();
        let chain = brute_locally_dense_chain(&g).unwrap();
        assert_eq!(
            chain.sets(),
            &[
                g.empty_set(),
                g.set_of(&["a", "b", "c", "d", "e"]),
                g.full_set()
            ]
        );

        let k4 = Graph::from_unlabeled_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let chain = brute_locally_dense_chain(&k4).unwrap();
        assert_eq!(chain.sets(), &[k4.empty_set(), k4.full_set()]);
    }

    #[test]
    fn local_density_check() {
        let g = g1();
        assert!(!is_locally_dense(&g, &g.set_of(&["a", "b", "c", "d"])).unwrap());
        assert!(is_locally_dense(&g, &g.set_of(&["a", "b", "c", "d", "e"])).unwrap());
        assert!(is_locally_dense(&g, &g.full_set()).unwrap());
        assert!(is_locally_dense(&g, &g.empty_set()).unwrap());
    }

    #[test]
    fn size_caps_are_enforced() {
        let big = Graph::from_unlabeled_edges(21, &[]);
        assert_eq!(
            brute_densest(&big),
            Err(Error::GraphTooLarge { n: 21, cap: 20 })
        );
        let mid = Graph::from_unlabeled_edges(15, &[]);
        assert!(brute_locally_dense_chain(&mid).is_err());
        assert!(is_locally_dense(&mid, &mid.full_set()).is_err());
    }

    #[test]
    fn chain_members_are_exactly_the_locally_dense_sets() {
        let g = g1();
        let chain = brute_locally_dense_chain(&g).unwrap();
        for set in chain.sets() {
            assert!(is_locally_dense(&g, set).unwrap());
        }
        // and nothing else passes
        let n = g.vertex_count();
        let chain_masks: Vec<u32> = chain
            .sets()
            .iter()
            .map(|s| s.iter().fold(0u32, |m, v| m | 1 << v))
            .collect();
        for mask in 0u32..1 << n {
            let set = VertexSet::from_ids(n, (0..n).filter(|&v| mask >> v & 1 == 1));
            let dense = is_locally_dense(&g, &set).unwrap();
            assert_eq!(dense, chain_masks.contains(&mask), "mask {mask:#b}");
        }
    }
}
