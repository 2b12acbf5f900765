//! Exact integer maximum-flow / minimum s–t cut solver.
//!
//! Highest-label push-relabel with the gap heuristic and periodic global
//! relabeling. The cut itself needs only the first phase: once no active
//! node sits below height n, the sink excess equals the max-flow value and
//! no residual arc enters the set of nodes that can still reach the sink,
//! so the maximal min-cut source side can be read off directly. Excess
//! trapped at lifted nodes is drained back to the source lazily, only when
//! a caller asks for the explicit flow.

use std::collections::VecDeque;

use crate::vertex_set::VertexSet;

#[derive(Debug, Clone)]
struct Arc {
    to: u32,
    rev: u32,
    cap: u64,
    orig: u64,
}

/// A single-use s–t network with nonnegative integer capacities.
///
/// Undirected unit edges of the original graph enter as a pair of opposite
/// arcs sharing one `Arc` pair. Capacities are `u64`; callers building
/// networks from scaled rationals must range-check before adding arcs.
pub struct FlowNetwork {
    adj: Vec<Vec<Arc>>,
    source: usize,
    sink: usize,
}

/// Result of a min-cut solve.
///
/// `source_side` is the *maximal* minimizing source side: the complement of
/// the nodes that can reach the sink in the residual network.
pub struct MinCut {
    pub value: u128,
    pub source_side: VertexSet,
    net: FlowNetwork,
    excess_drained: bool,
}

impl FlowNetwork {
    pub fn new(nodes: usize, source: usize, sink: usize) -> FlowNetwork {
        assert!(source < nodes && sink < nodes && source != sink);
        FlowNetwork {
            adj: vec![Vec::new(); nodes],
            source,
            sink,
        }
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    /// Directed arc `from -> to` with the given capacity (zero reverse).
    pub fn add_arc(&mut self, from: usize, to: usize, cap: u64) {
        self.add_pair(from, to, cap, 0);
    }

    /// Opposite arc pair with capacity `cap` in both directions.
    pub fn add_undirected(&mut self, a: usize, b: usize, cap: u64) {
        self.add_pair(a, b, cap, cap);
    }

    fn add_pair(&mut self, a: usize, b: usize, cap_ab: u64, cap_ba: u64) {
        assert!(a < self.adj.len() && b < self.adj.len() && a != b);
        // a residual capacity can grow to the sum of both directions
        assert!(
            cap_ab.checked_add(cap_ba).is_some(),
            "arc pair capacities overflow u64"
        );
        let rev_a = self.adj[b].len() as u32;
        let rev_b = self.adj[a].len() as u32;
        self.adj[a].push(Arc {
            to: b as u32,
            rev: rev_a,
            cap: cap_ab,
            orig: cap_ab,
        });
        self.adj[b].push(Arc {
            to: a as u32,
            rev: rev_b,
            cap: cap_ba,
            orig: cap_ba,
        });
    }

    /// Solves for the max flow and returns the cut value together with the
    /// maximal minimizing source side. Consumes the network: an instance is
    /// single-use.
    pub fn min_cut(mut self) -> MinCut {
        let (s, t) = (self.source, self.sink);
        let n = self.adj.len();

        let mut excess = vec![0u128; n];
        // saturate every source arc
        for i in 0..self.adj[s].len() {
            let cap = self.adj[s][i].cap;
            if cap > 0 {
                let to = self.adj[s][i].to as usize;
                let rev = self.adj[s][i].rev as usize;
                self.adj[s][i].cap = 0;
                self.adj[to][rev].cap += cap;
                excess[to] += cap as u128;
            }
        }

        Solver::new(&mut self.adj, &mut excess, t, s).run();
        let value = excess[t];

        // nodes that can still reach t: reverse BFS over residual arcs
        let mut reaches_sink = vec![false; n];
        reaches_sink[t] = true;
        let mut queue = VecDeque::from([t]);
        while let Some(u) = queue.pop_front() {
            for a in &self.adj[u] {
                let v = a.to as usize;
                if !reaches_sink[v] && self.adj[v][a.rev as usize].cap > 0 {
                    reaches_sink[v] = true;
                    queue.push_back(v);
                }
            }
        }
        debug_assert!(!reaches_sink[s], "source must not reach sink at optimum");
        let source_side = VertexSet::from_ids(n, (0..n).filter(|&v| !reaches_sink[v]));

        MinCut {
            value,
            source_side,
            net: self,
            excess_drained: false,
        }
    }
}

impl MinCut {
    /// Net flow per stored arc as `(from, to, capacity, flow)`; the two
    /// halves of an arc pair mirror each other with opposite signs.
    ///
    /// The first call converts the internal preflow into a genuine flow by
    /// routing leftover excess back to the source, so the returned flows
    /// satisfy conservation at every interior node and push exactly `value`
    /// out of the source.
    pub fn arc_flows(&mut self) -> Vec<(usize, usize, u64, i128)> {
        if !self.excess_drained {
            self.drain_excess();
            self.excess_drained = true;
        }
        let mut out = Vec::new();
        for (v, arcs) in self.net.adj.iter().enumerate() {
            for a in arcs {
                out.push((v, a.to as usize, a.orig, a.orig as i128 - a.cap as i128));
            }
        }
        out
    }

    /// Second phase: push excess stranded by the cut phase back toward the
    /// source. Every excess node can reach the source in the residual
    /// network, so this drains completely.
    fn drain_excess(&mut self) {
        let n = self.net.adj.len();
        let (s, t) = (self.net.source, self.net.sink);
        // recover per-node excess from the arc deltas
        let mut excess = vec![0u128; n];
        for (v, arcs) in self.net.adj.iter().enumerate() {
            if v == s || v == t {
                continue;
            }
            let mut delta = 0i128;
            for a in arcs {
                delta += a.cap as i128 - a.orig as i128;
            }
            debug_assert!(delta >= 0, "negative excess at interior node {v}");
            excess[v] = delta as u128;
        }
        Solver::new(&mut self.net.adj, &mut excess, s, t).run();
        debug_assert!((0..n).all(|v| v == s || v == t || excess[v] == 0));
    }
}

/// One push-relabel pass: move all excess toward `root`, never selecting
/// `root` or `frozen` and keeping `frozen` pinned at height n. Runs until
/// no active node remains below height n.
struct Solver<'a> {
    adj: &'a mut Vec<Vec<Arc>>,
    excess: &'a mut Vec<u128>,
    root: usize,
    frozen: usize,
    n: usize,
    height: Vec<usize>,
    cur: Vec<usize>,
    count: Vec<usize>,
    buckets: Vec<Vec<u32>>,
    in_bucket: Vec<bool>,
    highest: usize,
    relabels_since: usize,
}

impl<'a> Solver<'a> {
    fn new(
        adj: &'a mut Vec<Vec<Arc>>,
        excess: &'a mut Vec<u128>,
        root: usize,
        frozen: usize,
    ) -> Solver<'a> {
        let n = adj.len();
        Solver {
            adj,
            excess,
            root,
            frozen,
            n,
            height: vec![0; n],
            cur: vec![0; n],
            count: vec![0; n + 1],
            buckets: vec![Vec::new(); n + 1],
            in_bucket: vec![false; n],
            highest: 0,
            relabels_since: 0,
        }
    }

    /// Exact residual distances to the root; the frozen node and anything
    /// unreachable sit at n.
    fn global_relabel(&mut self) {
        self.relabels_since = 0;
        self.height.iter_mut().for_each(|h| *h = self.n);
        self.height[self.root] = 0;
        let mut queue = VecDeque::from([self.root]);
        while let Some(u) = queue.pop_front() {
            for a in &self.adj[u] {
                let v = a.to as usize;
                // residual capacity of v -> u lives on the partner arc
                if v != self.frozen
                    && self.height[v] == self.n
                    && self.adj[v][a.rev as usize].cap > 0
                {
                    self.height[v] = self.height[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        self.height[self.frozen] = self.n;
        self.cur.iter_mut().for_each(|c| *c = 0);

        self.count.iter_mut().for_each(|c| *c = 0);
        self.buckets.iter_mut().for_each(|b| b.clear());
        self.in_bucket.iter_mut().for_each(|b| *b = false);
        self.highest = 0;
        for v in 0..self.n {
            if self.height[v] < self.n {
                self.count[self.height[v]] += 1;
            }
            self.activate(v);
        }
    }

    fn activate(&mut self, v: usize) {
        if v != self.root
            && v != self.frozen
            && self.excess[v] > 0
            && self.height[v] < self.n
            && !self.in_bucket[v]
        {
            self.in_bucket[v] = true;
            self.buckets[self.height[v]].push(v as u32);
            self.highest = self.highest.max(self.height[v]);
        }
    }

    fn pop_highest(&mut self) -> Option<usize> {
        loop {
            if let Some(&v) = self.buckets[self.highest].last() {
                let v = v as usize;
                self.buckets[self.highest].pop();
                self.in_bucket[v] = false;
                if self.excess[v] > 0 && self.height[v] < self.n {
                    return Some(v);
                }
            } else if self.highest == 0 {
                return None;
            } else {
                self.highest -= 1;
            }
        }
    }

    fn discharge(&mut self, v: usize) {
        while self.excess[v] > 0 && self.height[v] < self.n {
            if self.cur[v] == self.adj[v].len() {
                self.relabel(v);
                continue;
            }
            let (to, cap) = {
                let a = &self.adj[v][self.cur[v]];
                (a.to as usize, a.cap)
            };
            if cap > 0 && self.height[v] == self.height[to] + 1 {
                let delta = self.excess[v].min(cap as u128) as u64;
                let rev = self.adj[v][self.cur[v]].rev as usize;
                self.adj[v][self.cur[v]].cap -= delta;
                self.adj[to][rev].cap += delta;
                self.excess[v] -= delta as u128;
                self.excess[to] += delta as u128;
                self.activate(to);
            } else {
                self.cur[v] += 1;
            }
        }
    }

    fn relabel(&mut self, v: usize) {
        let old_h = self.height[v];
        let new_h = self.adj[v]
            .iter()
            .filter(|a| a.cap > 0)
            .map(|a| self.height[a.to as usize] + 1)
            .min()
            .unwrap_or(self.n);
        self.cur[v] = 0;
        self.count[old_h] -= 1;
        self.height[v] = new_h;
        if new_h < self.n {
            self.count[new_h] += 1;
        }
        self.relabels_since += 1;
        if self.count[old_h] == 0 {
            // gap: heights above old_h but below n are cut off from the root
            for w in 0..self.n {
                if w != self.frozen && self.height[w] > old_h && self.height[w] < self.n {
                    self.count[self.height[w]] -= 1;
                    self.height[w] = self.n;
                }
            }
        }
    }

    fn run(&mut self) {
        self.global_relabel();
        while let Some(v) = self.pop_highest() {
            self.discharge(v);
            if self.relabels_since >= 4 * self.n {
                self.global_relabel();
            }
        }
    }
}
