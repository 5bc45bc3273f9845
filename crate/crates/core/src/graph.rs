//! Simple undirected graphs on at most 64 vertices.
//!
//! Vertices are dense indices `0..n`; every neighbourhood is one `u64`
//! bitset, which keeps the exhaustive searches elsewhere in the crate cheap.
//! Graphs are immutable: every "mutator" returns a fresh graph.

use num_rational::Ratio;
use thiserror::Error;

/// Hard cap on the vertex count; adjacency rows are single machine words.
///
/// Inputs with more vertices are rejected with [`GraphError::TooManyVertices`].
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has {n} vertices, more than the supported maximum {MAX_VERTICES}")]
    TooManyVertices { n: usize },
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("loop edge at vertex {v}")]
    LoopEdge { v: usize },
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("edge {u}-{v} not present in the graph")]
    MissingEdge { u: usize, v: usize },
    #[error("edge {u}-{v} already present in the graph")]
    EdgeAlreadyPresent { u: usize, v: usize },
    #[error("operation requires at least {min} vertices, graph has {n}")]
    TooFewVertices { n: usize, min: usize },
}

/// Immutable simple graph with vertex set `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    m: usize,
}

/// Iterate the set bits of a mask as vertex indices, ascending.
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Mask with the lowest `n` bits set.
pub fn full_mask(n: usize) -> u64 {
    debug_assert!(n <= MAX_VERTICES);
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Graph {
    /// Builds a graph from an explicit edge list.
    ///
    /// Rejects loops, duplicate edges, out-of-range endpoints and
    /// vertex counts above [`MAX_VERTICES`].
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let mut adj = vec![0u64; n];
        let mut m = 0;
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::LoopEdge { v });
            }
            if adj[u] & (1 << v) != 0 {
                return Err(GraphError::DuplicateEdge {
                    u: u.min(v),
                    v: u.max(v),
                });
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
            m += 1;
        }
        Ok(Graph { n, adj, m })
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Self::new(n, &[])
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let full = full_mask(n);
        let adj = (0..n).map(|v| full & !(1 << v)).collect();
        Ok(Graph {
            n,
            adj,
            m: n * n.saturating_sub(1) / 2,
        })
    }

    /// Cycle `C_n` on vertices `0..n` in order (requires n >= 3).
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::TooFewVertices { n, min: 3 });
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::new(n, &edges)
    }

    /// Path `P_n` on vertices `0..n` in order.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::new(n, &edges)
    }

    /// Star `K_{1,k}` with centre 0 and leaves `1..=k`.
    pub fn star(k: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
        Self::new(k + 1, &edges)
    }

    /// Complete bipartite graph `K_{a,b}`, sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self, GraphError> {
        let mut edges = Vec::with_capacity(a * b);
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        Self::new(a + b, &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    /// Bitset of all vertices.
    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    /// Neighbourhood of `v` as a bitset. Panics if `v` is out of range.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        assert!(v < self.n, "vertex {v} out of range (n = {})", self.n);
        self.adj[v]
    }

    /// Degree of `v`. Panics if `v` is out of range.
    pub fn degree(&self, v: usize) -> usize {
        self.neighbor_mask(v).count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1 << v) != 0
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.neighbor_mask(v))
    }

    /// Edges as `(u, v)` with `u < v`, ascending lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in bits(self.adj[u] & !full_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).max()
    }

    /// True when every vertex has at least one neighbour.
    pub fn is_isolate_free(&self) -> bool {
        self.adj.iter().all(|&row| row != 0)
    }

    /// Minimum edge-degree: min over edges `xy` of `deg(x) + deg(y) - 2`.
    /// `None` on edgeless graphs.
    pub fn min_edge_degree(&self) -> Option<usize> {
        self.edges()
            .iter()
            .map(|&(u, v)| self.degree(u) + self.degree(v) - 2)
            .min()
    }

    /// Degree statistics; `None` for the empty graph (no degrees to summarise).
    pub fn degree_summary(&self) -> Option<DegreeSummary> {
        if self.n == 0 {
            return None;
        }
        Some(DegreeSummary {
            min_degree: self.min_degree().unwrap(),
            max_degree: self.max_degree().unwrap(),
            average_degree: Ratio::new(2 * self.m as i64, self.n as i64),
            min_edge_degree: self.min_edge_degree(),
        })
    }

    /// Average degree `2m/n` as an exact rational. `None` for the empty graph.
    pub fn average_degree(&self) -> Option<Ratio<i64>> {
        if self.n == 0 {
            None
        } else {
            Some(Ratio::new(2 * self.m as i64, self.n as i64))
        }
    }

    /// Vertices reachable from `start` inside the induced subgraph on `allowed`.
    ///
    /// `start` must be a member of `allowed`.
    pub fn reachable(&self, start: usize, allowed: u64) -> u64 {
        debug_assert!(allowed & (1 << start) != 0);
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= self.adj[v] & allowed;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// Standard connectivity; the empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reachable(0, self.vertex_mask()) == self.vertex_mask()
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut remaining = self.vertex_mask();
        let mut out = Vec::new();
        while remaining != 0 {
            let start = remaining.trailing_zeros() as usize;
            let comp = self.reachable(start, remaining);
            out.push(bits(comp).collect());
            remaining &= !comp;
        }
        out
    }

    /// New graph with the edges in `to_remove` deleted; the vertex set is kept.
    ///
    /// Every listed edge must be present (either orientation); repeats are fine.
    pub fn remove_edges(&self, to_remove: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = self.clone();
        for &(u, v) in to_remove {
            if u >= g.n {
                return Err(GraphError::VertexOutOfRange { v: u, n: g.n });
            }
            if v >= g.n {
                return Err(GraphError::VertexOutOfRange { v, n: g.n });
            }
            if g.adj[u] & (1 << v) == 0 {
                // Tolerate listing the same edge twice only if it was present once.
                if self.has_edge(u, v) {
                    continue;
                }
                return Err(GraphError::MissingEdge {
                    u: u.min(v),
                    v: u.max(v),
                });
            }
            g.adj[u] &= !(1 << v);
            g.adj[v] &= !(1 << u);
            g.m -= 1;
        }
        Ok(g)
    }

    /// New graph with the listed edges added; loops and existing edges are errors.
    pub fn add_edges(&self, to_add: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = self.clone();
        for &(u, v) in to_add {
            if u >= g.n {
                return Err(GraphError::VertexOutOfRange { v: u, n: g.n });
            }
            if v >= g.n {
                return Err(GraphError::VertexOutOfRange { v, n: g.n });
            }
            if u == v {
                return Err(GraphError::LoopEdge { v });
            }
            if g.adj[u] & (1 << v) != 0 {
                return Err(GraphError::EdgeAlreadyPresent {
                    u: u.min(v),
                    v: u.max(v),
                });
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
            g.m += 1;
        }
        Ok(g)
    }

    /// Induced subgraph on `vertices` (treated as a set), relabelled to
    /// `0..k`. Returns the graph and the label map `new index -> old vertex`.
    pub fn induced(&self, vertices: &[usize]) -> Result<(Self, Vec<usize>), GraphError> {
        let mut sel = 0u64;
        for &v in vertices {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { v, n: self.n });
            }
            sel |= 1 << v;
        }
        let map: Vec<usize> = bits(sel).collect();
        let mut g = Graph {
            n: map.len(),
            adj: vec![0; map.len()],
            m: 0,
        };
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1 << j;
                    g.adj[j] |= 1 << i;
                    g.m += 1;
                }
            }
        }
        Ok((g, map))
    }

    /// Girth: length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for root in 0..self.n {
            // BFS from root; a non-tree edge closing at depths d(u), d(w)
            // witnesses a cycle through root of length d(u) + d(w) + 1.
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            let mut queue = std::collections::VecDeque::new();
            dist[root] = 0;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    // Cycles through deeper vertices can only be longer.
                    if 2 * dist[u] + 1 >= b {
                        break;
                    }
                }
                for w in self.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        if best.is_none_or(|b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }

    pub fn has_triangle(&self) -> bool {
        self.edges()
            .iter()
            .any(|&(u, v)| self.adj[u] & self.adj[v] != 0)
    }

    /// True iff the graph is a star `K_{1,k}` for some `k >= 0`
    /// (the one-vertex graph is `K_{1,0}`).
    pub fn is_star(&self) -> bool {
        self.n >= 1 && self.m == self.n - 1 && self.max_degree() == Some(self.n - 1)
    }

    /// Exact edge connectivity via unit-capacity max-flow from vertex 0 to
    /// every other vertex. Errors on graphs with fewer than two vertices.
    pub fn edge_connectivity(&self) -> Result<usize, GraphError> {
        if self.n < 2 {
            return Err(GraphError::TooFewVertices {
                n: self.n,
                min: 2,
            });
        }
        if !self.is_connected() {
            return Ok(0);
        }
        let mut best = self.m;
        for t in 1..self.n {
            best = best.min(self.max_flow(0, t));
            if best == 0 {
                break;
            }
        }
        Ok(best)
    }

    fn max_flow(&self, s: usize, t: usize) -> usize {
        // Residual capacities; each undirected edge is two unit arcs.
        let mut cap = vec![vec![0u8; self.n]; self.n];
        for (u, v) in self.edges() {
            cap[u][v] = 1;
            cap[v][u] = 1;
        }
        let mut flow = 0;
        loop {
            let mut pred = vec![usize::MAX; self.n];
            pred[s] = s;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                if u == t {
                    break;
                }
                for v in 0..self.n {
                    if pred[v] == usize::MAX && cap[u][v] > 0 {
                        pred[v] = u;
                        queue.push_back(v);
                    }
                }
            }
            if pred[t] == usize::MAX {
                return flow;
            }
            let mut v = t;
            while v != s {
                let u = pred[v];
                cap[u][v] -= 1;
                cap[v][u] += 1;
                v = u;
            }
            flow += 1;
        }
    }

    /// True iff the graph embeds in the sphere.
    pub fn is_planar(&self) -> bool {
        crate::planar::is_planar(self)
    }

    /// Over ordered paths `x-y-z` on three distinct vertices satisfying
    /// `constraint`, returns one minimising `deg(x)+deg(y)+deg(z)`,
    /// tie-broken by lexicographically smallest `(x, y, z)`.
    pub fn min_path3_degree_sum<F>(&self, constraint: F) -> Option<([usize; 3], usize)>
    where
        F: Fn(usize, usize, usize) -> bool,
    {
        let mut best: Option<([usize; 3], usize)> = None;
        for x in 0..self.n {
            for y in self.neighbors(x) {
                for z in self.neighbors(y) {
                    if z == x || !constraint(x, y, z) {
                        continue;
                    }
                    let sum = self.degree(x) + self.degree(y) + self.degree(z);
                    if best.is_none_or(|(_, s)| sum < s) {
                        best = Some(([x, y, z], sum));
                    }
                }
            }
        }
        best
    }

    /// True iff some path `u-v-w` has `deg(u) <= i`, `deg(v) <= j`,
    /// `deg(w) <= k` (both orientations considered).
    pub fn has_path3_of_type(&self, i: usize, j: usize, k: usize) -> bool {
        self.find_path3_of_type(i, j, k).is_some()
    }

    /// Like [`Self::has_path3_of_type`] but returns the first witness in
    /// lexicographic `(u, v, w)` order.
    pub fn find_path3_of_type(&self, i: usize, j: usize, k: usize) -> Option<[usize; 3]> {
        for u in 0..self.n {
            if self.degree(u) > i {
                continue;
            }
            for v in self.neighbors(u) {
                if self.degree(v) > j {
                    continue;
                }
                for w in self.neighbors(v) {
                    if w != u && self.degree(w) <= k {
                        return Some([u, v, w]);
                    }
                }
            }
        }
        None
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Degree statistics of a graph, exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSummary {
    pub min_degree: usize,
    pub max_degree: usize,
    /// `2m/n`, exact.
    pub average_degree: Ratio<i64>,
    /// `min over edges xy of deg(x)+deg(y)-2`; `None` when there is no edge.
    pub min_edge_degree: Option<usize>,
}
