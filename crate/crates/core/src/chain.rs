//! Nested chains of vertex sets with their per-step outer densities.

use crate::graph::Graph;
use crate::rational::Rational;
use crate::vertex_set::VertexSet;

/// Which algorithm produced a chain. Exact and greedy chains have strictly
/// decreasing step densities; core chains need not (that non-monotonicity is
/// the whole reason the other two exist).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainKind {
    Exact,
    Greedy,
    Core,
}

impl ChainKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ChainKind::Exact => "exact",
            ChainKind::Greedy => "greedy",
            ChainKind::Core => "core",
        }
    }
}

/// A nested sequence `∅ = B₀ ⊊ B₁ ⊊ … ⊊ B_k = V` with the outer density
/// `d(Bᵢ, Bᵢ₋₁)` attached to every step.
///
/// For the empty graph the chain degenerates to the single set `∅ = V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    kind: ChainKind,
    sets: Vec<VertexSet>,
    step_densities: Vec<Rational>,
}

impl Chain {
    /// Assembles and validates a chain from its sets, in ascending size
    /// order including both endpoints. Step densities are recomputed from
    /// the graph, never taken on trust from the caller.
    ///
    /// Panics if the sets do not form a strictly nested chain from ∅ to V,
    /// or if a non-core chain fails to have strictly decreasing densities.
    pub fn from_sets(graph: &Graph, sets: Vec<VertexSet>, kind: ChainKind) -> Chain {
        let n = graph.vertex_count();
        assert!(!sets.is_empty(), "chain needs at least one set");
        assert!(sets[0].is_empty(), "chain must start at the empty set");
        assert_eq!(sets.last().unwrap().len(), n, "chain must end at V");
        for pair in sets.windows(2) {
            assert!(
                pair[0].is_strict_subset_of(&pair[1]),
                "chain sets must be strictly nested"
            );
        }
        let step_densities: Vec<Rational> = sets
            .windows(2)
            .map(|pair| graph.outer_density(&pair[1], &pair[0]).unwrap())
            .collect();
        if kind != ChainKind::Core {
            assert!(
                step_densities.windows(2).all(|p| p[0] > p[1]),
                "step densities must strictly decrease for {} chains",
                kind.as_str()
            );
        }
        Chain {
            kind,
            sets,
            step_densities,
        }
    }

    /// The degenerate chain of the 0-vertex graph, where `∅ = V`.
    pub fn trivial(graph: &Graph, kind: ChainKind) -> Chain {
        assert_eq!(graph.vertex_count(), 0);
        Chain {
            kind,
            sets: vec![VertexSet::empty(0)],
            step_densities: Vec::new(),
        }
    }

    pub fn kind(&self) -> ChainKind {
        self.kind
    }

    /// All sets including the ∅ and V endpoints, ascending.
    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    /// One density per step, aligned with `sets()[1..]`.
    pub fn step_densities(&self) -> &[Rational] {
        &self.step_densities
    }

    pub fn universe_size(&self) -> usize {
        self.sets.last().unwrap().universe()
    }

    /// Chain length counting both endpoints.
    pub fn total_len(&self) -> usize {
        self.sets.len()
    }

    /// Number of nonempty sets, i.e. excluding ∅ but counting V.
    /// This is the count the evaluation tables report.
    pub fn nonempty_len(&self) -> usize {
        self.sets.len() - 1
    }

    /// Sizes of the nonempty sets, ascending.
    pub fn sizes(&self) -> Vec<usize> {
        self.sets[1..].iter().map(|s| s.len()).collect()
    }

    /// Assigns every vertex the 1-based index of the smallest chain set
    /// containing it; the innermost (densest) set is level 1.
    pub fn level_assignment(&self) -> Vec<usize> {
        let n = self.universe_size();
        let mut level = vec![0usize; n];
        for (j, set) in self.sets.iter().enumerate().skip(1) {
            for v in set.iter() {
                if level[v] == 0 {
                    level[v] = j;
                }
            }
        }
        level
    }
}
