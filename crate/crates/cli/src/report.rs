//! Machine-readable report types and their JSON/TSV rendering.
//!
//! Densities appear both as exact lowest-terms fraction strings and as
//! decimal renderings; the decimals are presentation only, the fractions
//! round-trip losslessly. Chain sets are listed innermost first with member
//! labels sorted lexicographically.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use densify_core::{Chain, Graph, Profile, ProfileRatio, Rational};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RationalRepr {
    /// Exact value in lowest terms, e.g. `"8/5"` or `"2"`.
    pub fraction: String,
    pub decimal: f64,
}

impl From<Rational> for RationalRepr {
    fn from(r: Rational) -> Self {
        RationalRepr {
            fraction: r.to_string(),
            decimal: r.to_f64(),
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct GraphStats {
    pub n: usize,
    pub m: usize,
}

impl GraphStats {
    pub fn of(graph: &Graph) -> GraphStats {
        GraphStats {
            n: graph.vertex_count(),
            m: graph.edge_count(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChainSetRepr {
    /// 1-based level, innermost (densest) set first.
    pub index: usize,
    pub size: usize,
    pub step_density: RationalRepr,
    /// All member labels, sorted lexicographically.
    pub labels: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub schema_version: u32,
    pub algorithm: String,
    pub graph: GraphStats,
    pub wall_clock_ms: f64,
    /// Chain length counting the ∅ and V endpoints.
    pub total_chain_length: usize,
    /// Number of nonempty sets (the counting convention of the tables).
    pub nonempty_set_count: usize,
    pub sets: Vec<ChainSetRepr>,
}

fn chain_sets(graph: &Graph, chain: &Chain) -> Vec<ChainSetRepr> {
    chain
        .sets()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, set)| {
            let mut labels: Vec<String> =
                set.iter().map(|v| graph.label(v).to_string()).collect();
            labels.sort_unstable();
            ChainSetRepr {
                index: i,
                size: set.len(),
                step_density: chain.step_densities()[i - 1].into(),
                labels,
            }
        })
        .collect()
}

impl DecompositionReport {
    pub fn new(graph: &Graph, chain: &Chain, algorithm: &str, wall_clock_ms: f64) -> Self {
        DecompositionReport {
            schema_version: SCHEMA_VERSION,
            algorithm: algorithm.to_string(),
            graph: GraphStats::of(graph),
            wall_clock_ms,
            total_chain_length: chain.total_len(),
            nonempty_set_count: chain.nonempty_len(),
            sets: chain_sets(graph, chain),
        }
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# algorithm\t{}", self.algorithm);
        let _ = writeln!(out, "# graph\tn={}\tm={}", self.graph.n, self.graph.m);
        let _ = writeln!(
            out,
            "# chain\tnonempty={}\ttotal={}",
            self.nonempty_set_count, self.total_chain_length
        );
        let _ = writeln!(out, "# index\tsize\tstep_density\tfraction\tlabels");
        for set in &self.sets {
            let _ = writeln!(
                out,
                "{}\t{}\t{:.6}\t{}\t{}",
                set.index,
                set.size,
                set.step_density.decimal,
                set.step_density.fraction,
                set.labels.join(" ")
            );
        }
        out
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RatioRepr {
    /// `"inf"` when the reference profile vanishes where the candidate
    /// does not.
    pub fraction: String,
    /// Rounded half-up to two places, the table formatting.
    pub decimal: String,
}

impl From<ProfileRatio> for RatioRepr {
    fn from(r: ProfileRatio) -> Self {
        match r {
            ProfileRatio::Finite(r) => RatioRepr {
                fraction: r.to_string(),
                decimal: r.to_decimal_string(2),
            },
            ProfileRatio::PlusInfinity => RatioRepr {
                fraction: "inf".to_string(),
                decimal: "inf".to_string(),
            },
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PairReport {
    pub a: String,
    pub b: String,
    /// None when τ_b is undefined (all vertices tied in one assignment).
    pub kendall_tau_b: Option<f64>,
    pub profile_ratio: RatioRepr,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChainSummary {
    pub algorithm: String,
    pub wall_clock_ms: f64,
    pub total_chain_length: usize,
    pub nonempty_set_count: usize,
    pub sizes: Vec<usize>,
    pub step_densities: Vec<RationalRepr>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProfileRepr {
    pub fractions: Vec<String>,
    pub decimals: Vec<f64>,
}

impl From<&Profile> for ProfileRepr {
    fn from(p: &Profile) -> Self {
        ProfileRepr {
            fractions: p.values().iter().map(|v| v.to_string()).collect(),
            decimals: p.values().iter().map(|v| v.to_f64()).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CompareReport {
    pub schema_version: u32,
    pub graph: GraphStats,
    pub algorithms: Vec<String>,
    pub chains: Vec<ChainSummary>,
    pub pairs: Vec<PairReport>,
    /// Per-index profile vectors, one per distinct algorithm.
    pub profiles: BTreeMap<String, ProfileRepr>,
}

impl CompareReport {
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# graph\tn={}\tm={}", self.graph.n, self.graph.m);
        let _ = writeln!(out, "# chain\talgorithm\tnonempty\ttotal\tsizes");
        for c in &self.chains {
            let sizes: Vec<String> = c.sizes.iter().map(|s| s.to_string()).collect();
            let _ = writeln!(
                out,
                "chain\t{}\t{}\t{}\t{}",
                c.algorithm,
                c.nonempty_set_count,
                c.total_chain_length,
                sizes.join(" ")
            );
        }
        let _ = writeln!(out, "# pair\ta\tb\ttau_b\tratio\tratio_fraction");
        for p in &self.pairs {
            let tau = p
                .kendall_tau_b
                .map_or("undefined".to_string(), |t| format!("{t:.12}"));
            let _ = writeln!(
                out,
                "pair\t{}\t{}\t{}\t{}\t{}",
                p.a, p.b, tau, p.profile_ratio.decimal, p.profile_ratio.fraction
            );
        }
        let algos: Vec<&String> = self.profiles.keys().collect();
        let header: Vec<String> = algos.iter().map(|a| a.to_string()).collect();
        let _ = writeln!(out, "# profile\ti\t{}", header.join("\t"));
        let n = self.graph.n;
        for i in 0..n {
            let row: Vec<String> = algos
                .iter()
                .map(|a| format!("{:.6}", self.profiles[*a].decimals[i]))
                .collect();
            let _ = writeln!(out, "profile\t{}\t{}", i + 1, row.join("\t"));
        }
        out
    }
}

/// `(i, prof(i))` rows for plotting.
pub fn profile_tsv(profile: &Profile) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# i\tprofile\tfraction");
    for (i, v) in profile.values().iter().enumerate() {
        let _ = writeln!(out, "{}\t{:.6}\t{}", i + 1, v.to_f64(), v);
    }
    out
}
