//! Locally-dense graph decomposition.
//!
//! Decomposes an undirected graph into its nested chain of locally-dense
//! subgraphs: each chain member is the densest extension of the previous
//! one, so unlike k-cores the inner sets are always at least as dense as
//! the outer ones.
//!
//! Three decompositions are provided over one immutable [`Graph`]:
//!
//! * [`exact_ld`] — the exact chain, found by probing density thresholds
//!   with anchored minimum cuts ([`mincut`] holds the push-relabel solver);
//! * [`greedy_ld`] — a linear-time factor-2 approximation built from
//!   min-degree peeling and maximal-average segmentation;
//! * [`core_decomposition`] — the classic k-core chain, also a factor-2
//!   approximation but with no density monotonicity.
//!
//! The [`metrics`] module scores decompositions against each other (profile
//! functions, minimum profile ratio, Kendall-τ-b), and [`oracle`] carries
//! exponential reference implementations for certifying results on small
//! graphs.
//!
//! All densities are exact rationals; nothing is ever compared through
//! floating point. With the default `parallel` feature the exact search
//! solves independent chain intervals on a rayon pool; disabling the
//! feature leaves a fully sequential build.

pub mod chain;
pub mod core_decomp;
pub mod error;
pub mod exact;
pub mod graph;
pub mod greedy;
pub mod metrics;
pub mod mincut;
pub mod oracle;
pub mod rational;
pub mod vertex_set;

pub use chain::{Chain, ChainKind};
pub use core_decomp::{core_decomposition, core_decomposition_with_order, CoreResult};
pub use error::{Error, Result};
pub use exact::{
    build_cut_network, compact_graph, exact_ld, exact_ld_seq, exact_ld_seq_with_stats,
    exact_ld_with_stats, AlphaQuery, ExactStats,
};
pub use graph::{load_edge_list, Graph, IngestStats};
pub use greedy::{
    greedy_ld, greedy_ld_with_order, maximal_average_intervals, peel, peel_with_stats, PeelOrder,
    PeelStats,
};
pub use metrics::{kendall_tau_b, profile, profile_ratio, Profile, ProfileRatio};
pub use mincut::{FlowNetwork, MinCut};
pub use rational::Rational;
pub use vertex_set::VertexSet;
