//! Simple undirected graphs with dense integer ids and the density
//! arithmetic everything else is built on.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::vertex_set::VertexSet;

/// An immutable simple undirected graph.
///
/// Vertex ids are `0..n` in label first-appearance order; neighbor lists are
/// sorted ascending and each edge appears in both endpoint lists. Self-loops
/// and duplicate edges are rejected at construction.
#[derive(Debug)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<Vec<u32>>,
    m: usize,
}

/// What ingestion saw while reading an edge list.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct IngestStats {
    pub lines_read: usize,
    pub comment_lines: usize,
    pub loops_dropped: usize,
    pub duplicates_collapsed: usize,
}

impl Graph {
    /// Builds a graph from deduplicated edges over `0..n`.
    /// Panics if an edge is a self-loop, out of range, or repeated.
    pub fn from_edges(labels: Vec<String>, edges: &[(u32, u32)]) -> Graph {
        let n = labels.len();
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
        for &(u, w) in edges {
            assert!(u != w, "self-loop at {u}");
            assert!((u as usize) < n && (w as usize) < n, "edge endpoint out of range");
            adj[u as usize].push(w);
            adj[w as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            debug_assert!(list.windows(2).all(|p| p[0] < p[1]), "duplicate edge");
        }
        Graph {
            labels,
            adj,
            m: edges.len(),
        }
    }

    /// Convenience constructor with numeric labels `"0".."n"`.
    pub fn from_unlabeled_edges(n: usize, edges: &[(u32, u32)]) -> Graph {
        Graph::from_edges((0..n).map(|v| v.to_string()).collect(), edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Looks a vertex up by its original label.
    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Test/CLI convenience: the set of the given labels.
    /// Panics on an unknown label.
    pub fn set_of(&self, labels: &[&str]) -> VertexSet {
        VertexSet::from_ids(
            self.vertex_count(),
            labels.iter().map(|l| {
                self.vertex(l)
                    .unwrap_or_else(|| panic!("unknown label {l:?}"))
            }),
        )
    }

    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::empty(self.vertex_count())
    }

    /// Number of edges with both endpoints in `x`.
    pub fn internal_edge_count(&self, x: &VertexSet) -> u64 {
        self.check_universe(x);
        let mut count = 0u64;
        for v in x.iter() {
            count += self.adj[v]
                .iter()
                .filter(|&&w| (w as usize) > v && x.contains(w as usize))
                .count() as u64;
        }
        count
    }

    fn check_universe(&self, s: &VertexSet) {
        assert_eq!(
            s.universe(),
            self.vertex_count(),
            "vertex set belongs to a different graph"
        );
    }

    /// Edges with one endpoint in `x` and the other in `y`; the sets must be
    /// disjoint.
    pub fn cross_edge_count(&self, x: &VertexSet, y: &VertexSet) -> Result<u64> {
        self.check_universe(x);
        self.check_universe(y);
        if !x.is_disjoint_from(y) {
            return Err(Error::OverlappingSets);
        }
        let mut count = 0u64;
        for v in x.iter() {
            count += self.adj[v]
                .iter()
                .filter(|&&w| y.contains(w as usize))
                .count() as u64;
        }
        Ok(count)
    }

    /// Edges with one endpoint in `x` and the other in `x ∪ y`:
    /// `|E(x)| + cross(x, y)`. The sets must be disjoint.
    pub fn marginal_edge_count(&self, x: &VertexSet, y: &VertexSet) -> Result<u64> {
        Ok(self.internal_edge_count(x) + self.cross_edge_count(x, y)?)
    }

    /// Density `|E(x)| / |x|` of a nonempty set.
    pub fn density(&self, x: &VertexSet) -> Result<Rational> {
        if x.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        Ok(Rational::new(
            self.internal_edge_count(x) as i128,
            x.len() as i128,
        ))
    }

    /// Outer density of `x` with respect to `y`, defined on the overlap-free
    /// part: `|∂E(x∖y, y)| / |x∖y|`. Errors when `x ⊆ y`.
    pub fn outer_density(&self, x: &VertexSet, y: &VertexSet) -> Result<Rational> {
        let fresh = x.difference(y);
        if fresh.is_empty() {
            return Err(Error::SubsetViolation);
        }
        let marginal = self.marginal_edge_count(&fresh, y)?;
        Ok(Rational::new(marginal as i128, fresh.len() as i128))
    }

    /// Writes the graph back out as an edge list, one `"u w"` line per edge
    /// with ids resolved to labels. Reloading the output reproduces the same
    /// graph up to vertex renumbering.
    pub fn write_edge_list<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        for v in 0..self.vertex_count() {
            for &w in &self.adj[v] {
                if (w as usize) > v {
                    writeln!(out, "{} {}", self.labels[v], self.labels[w as usize])?;
                }
            }
        }
        Ok(())
    }

    /// Canonical JSON form: `{"n":…,"m":…,"labels":[…],"edges":[[u,w],…]}`
    /// with `u < w` and edges sorted lexicographically. Field order and
    /// edge order are fixed, so equal graphs serialize to equal bytes.
    pub fn canonical_json(&self) -> String {
        #[derive(serde::Serialize)]
        struct Canonical<'a> {
            n: usize,
            m: usize,
            labels: &'a [String],
            edges: Vec<(u32, u32)>,
        }
        let mut edges = Vec::with_capacity(self.m);
        for v in 0..self.vertex_count() {
            for &w in &self.adj[v] {
                if (w as usize) > v {
                    edges.push((v as u32, w));
                }
            }
        }
        edges.sort_unstable();
        serde_json::to_string(&Canonical {
            n: self.vertex_count(),
            m: self.m,
            labels: &self.labels,
            edges,
        })
        .expect("graph serialization cannot fail")
    }
}

/// Reads a whitespace-separated edge list.
///
/// Each data line holds exactly two labels; `#`-prefixed lines are comments
/// and blank lines are skipped. Labels get dense ids in first-appearance
/// order. Self-loops are dropped and parallel edges collapse to one, with
/// counts reported in the stats.
pub fn load_edge_list<R: BufRead>(reader: R) -> Result<(Graph, IngestStats)> {
    let mut stats = IngestStats::default();
    let mut labels: Vec<String> = Vec::new();
    let mut index: std::collections::HashMap<String, u32> = std::collections::HashMap::new();
    let mut raw_edges: Vec<(u32, u32)> = Vec::new();

    let intern = |tok: &str, labels: &mut Vec<String>,
                  index: &mut std::collections::HashMap<String, u32>| {
        *index.entry(tok.to_string()).or_insert_with(|| {
            labels.push(tok.to_string());
            (labels.len() - 1) as u32
        })
    };

    for (lineno, line) in reader.lines().enumerate() {
        let line = line.map_err(|_| Error::MalformedLine {
            line: lineno + 1,
            tokens: 0,
        })?;
        stats.lines_read += 1;
        if line.starts_with('#') {
            stats.comment_lines += 1;
            continue;
        }
        let mut tokens = line.split_whitespace();
        let (Some(a), Some(b)) = (tokens.next(), tokens.next()) else {
            if line.trim().is_empty() {
                continue;
            }
            return Err(Error::MalformedLine {
                line: lineno + 1,
                tokens: 1,
            });
        };
        let extra = tokens.count();
        if extra > 0 {
            return Err(Error::MalformedLine {
                line: lineno + 1,
                tokens: 2 + extra,
            });
        }
        let u = intern(a, &mut labels, &mut index);
        let w = intern(b, &mut labels, &mut index);
        if u == w {
            stats.loops_dropped += 1;
            continue;
        }
        raw_edges.push((u.min(w), u.max(w)));
    }

    raw_edges.sort_unstable();
    let before = raw_edges.len();
    raw_edges.dedup();
    stats.duplicates_collapsed = before - raw_edges.len();

    Ok((Graph::from_edges(labels, &raw_edges), stats))
}

/// Edge list of the paper-style toy graph with a 3-core denser than nothing
/// around it: 6 vertices, 9 edges.
#[cfg(test)]
pub(crate) const G1_EDGES: &str = "a b\na c\na d\nb c\nb d\nc d\nb e\nd e\ne f\n";

/// Edge list of the toy graph whose single 2-core is the whole graph while a
/// proper subgraph is denser: 8 vertices, 11 edges.
#[cfg(test)]
pub(crate) const G2_EDGES: &str = "a b\na c\nb c\nb d\nc d\nc e\nd e\nc h\ng h\nf h\nf g\n";

#[cfg(test)]
pub(crate) fn g1() -> Graph {
    load_edge_list(G1_EDGES.as_bytes()).unwrap().0
}

#[cfg(test)]
pub(crate) fn g2() -> Graph {
    load_edge_list(G2_EDGES.as_bytes()).unwrap().0
}
