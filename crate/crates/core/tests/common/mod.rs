//! Shared test fixtures and independent oracles.
//!
//! Everything here recomputes values straight from the definitions on
//! adjacency lists, with its own subset enumeration, so it shares no code
//! path with the library's bitset predicates or lexicographic search.

#![allow(dead_code)] // each test binary uses a subset of these helpers

use domsurf::graph::Graph;
use domsurf::invariants::ParameterKind;

pub fn petersen() -> Graph {
    Graph::new(
        10,
        &[
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
        ],
    )
    .unwrap()
}

pub fn icosahedron() -> Graph {
    let mut edges = vec![];
    for v in 1..=5 {
        edges.push((0, v));
    }
    for i in 1..=5 {
        edges.push((i, if i == 5 { 1 } else { i + 1 }));
    }
    for i in 6..=10 {
        edges.push((i, if i == 10 { 6 } else { i + 1 }));
    }
    for v in 6..=10 {
        edges.push((11, v));
    }
    for i in 0..5 {
        edges.push((1 + i, 6 + i));
        edges.push((1 + i, 6 + (i + 1) % 5));
    }
    Graph::new(12, &edges).unwrap()
}

/// Octahedron = K_{2,2,2}, a maximal planar graph (m = 3n - 6).
pub fn octahedron() -> Graph {
    let mut edges = vec![];
    for u in 0..6 {
        for v in u + 1..6 {
            if v != u + 3 && u != v + 3 {
                edges.push((u, v));
            }
        }
    }
    Graph::new(6, &edges).unwrap()
}

pub fn adjacency_lists(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.vertex_count()).map(|v| g.neighbors(v).collect()).collect()
}

fn connected_over(adj: &[Vec<usize>], alive: &[bool]) -> bool {
    let Some(start) = alive.iter().position(|&a| a) else {
        return true;
    };
    let mut seen = vec![false; adj.len()];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if alive[w] && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    alive.iter().zip(&seen).all(|(&a, &s)| !a || s)
}

fn dominating(adj: &[Vec<usize>], sel: &[bool]) -> bool {
    sel.iter()
        .enumerate()
        .all(|(v, &inside)| inside || adj[v].iter().any(|&w| sel[w]))
}

fn total_dominating(adj: &[Vec<usize>], sel: &[bool]) -> bool {
    (0..adj.len()).all(|v| adj[v].iter().any(|&w| sel[w]))
}

fn connected_dominating(adj: &[Vec<usize>], sel: &[bool]) -> bool {
    dominating(adj, sel) && connected_over(adj, sel)
}

fn weakly_connected_dominating(adj: &[Vec<usize>], sel: &[bool]) -> bool {
    if !sel.iter().any(|&s| s) {
        return false;
    }
    // Connectivity of the spanning subgraph keeping edges meeting the set.
    let n = adj.len();
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut stack = vec![0usize];
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if (sel[u] || sel[w]) && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn restrained_dominating(adj: &[Vec<usize>], sel: &[bool]) -> bool {
    dominating(adj, sel)
        && sel
            .iter()
            .enumerate()
            .all(|(v, &inside)| inside || adj[v].iter().any(|&w| !sel[w]))
}

fn total_restrained_dominating(adj: &[Vec<usize>], sel: &[bool]) -> bool {
    total_dominating(adj, sel)
        && sel
            .iter()
            .enumerate()
            .all(|(v, &inside)| inside || adj[v].iter().any(|&w| !sel[w]))
}

/// Smallest valid vertex set for a set-valued parameter, by scanning all
/// 2^n selections; `None` when no selection at all is valid.
fn oracle_min_set(g: &Graph, valid: impl Fn(&[Vec<usize>], &[bool]) -> bool) -> Option<usize> {
    let n = g.vertex_count();
    let adj = adjacency_lists(g);
    let mut best: Option<usize> = None;
    for mask in 0u64..(1u64 << n) {
        let sel: Vec<bool> = (0..n).map(|v| mask & (1 << v) != 0).collect();
        let size = mask.count_ones() as usize;
        if best.is_some_and(|b| size >= b) {
            continue;
        }
        if valid(&adj, &sel) {
            best = Some(size);
        }
    }
    best
}

/// Minimum Roman dominating function weight over all 3^n labellings.
fn oracle_roman(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    let adj = adjacency_lists(g);
    let mut best: Option<usize> = None;
    let mut labels = vec![0u8; n];
    loop {
        let valid = (0..n).all(|v| labels[v] != 0 || adj[v].iter().any(|&w| labels[w] == 2));
        if valid {
            let weight = labels.iter().map(|&l| l as usize).sum();
            if best.is_none_or(|b| weight < b) {
                best = Some(weight);
            }
        }
        // next labelling in base 3
        let mut i = 0;
        loop {
            if i == n {
                return best;
            }
            if labels[i] == 2 {
                labels[i] = 0;
                i += 1;
            } else {
                labels[i] += 1;
                break;
            }
        }
    }
}

/// Recursive enumeration of k-subsets of `0..items`; `f` returns true to
/// accept (which stops the walk). Returns whether anything was accepted.
fn any_subset(items: usize, k: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    fn rec(
        items: usize,
        k: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        if chosen.len() == k {
            return f(chosen);
        }
        for next in start..items {
            if items - next < k - chosen.len() {
                break;
            }
            chosen.push(next);
            if rec(items, k, next + 1, chosen, f) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    rec(items, k, 0, &mut Vec::new(), f)
}

/// λ′ by the direct definition: smallest edge set whose removal disconnects
/// the graph without isolating a vertex.
pub fn oracle_lambda_prime(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    let edges = g.edges();
    let m = edges.len();
    let adj = adjacency_lists(g);
    for k in 0..=m {
        let found = any_subset(m, k, &mut |subset| {
            let mut removed = vec![vec![false; n]; n];
            for &i in subset {
                let (u, v) = edges[i];
                removed[u][v] = true;
                removed[v][u] = true;
            }
            let degree_ok = (0..n).all(|v| adj[v].iter().any(|&w| !removed[v][w]));
            if !degree_ok {
                return false;
            }
            // connectivity of the reduced graph
            let mut seen = vec![false; n];
            seen[0] = true;
            let mut stack = vec![0usize];
            while let Some(u) = stack.pop() {
                for &w in &adj[u] {
                    if !removed[u][w] && !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            seen.into_iter().any(|s| !s)
        });
        if found {
            return Some(k);
        }
    }
    None
}

/// Edge connectivity by direct edge-subset enumeration.
pub fn oracle_edge_connectivity(g: &Graph) -> usize {
    let n = g.vertex_count();
    assert!(n >= 2);
    let edges = g.edges();
    let adj = adjacency_lists(g);
    for k in 0..=edges.len() {
        let found = any_subset(edges.len(), k, &mut |subset| {
            let mut removed = vec![vec![false; n]; n];
            for &i in subset {
                let (u, v) = edges[i];
                removed[u][v] = true;
                removed[v][u] = true;
            }
            let mut seen = vec![false; n];
            seen[0] = true;
            let mut stack = vec![0usize];
            while let Some(u) = stack.pop() {
                for &w in &adj[u] {
                    if !removed[u][w] && !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            seen.into_iter().any(|s| !s)
        });
        if found {
            return k;
        }
    }
    unreachable!("removing all edges disconnects any graph with n >= 2")
}

/// Girth via: shortest cycle through edge (u,v) = 1 + shortest u-v path in
/// the graph minus that edge.
pub fn oracle_girth(g: &Graph) -> Option<usize> {
    let adj = adjacency_lists(g);
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    for (u, v) in g.edges() {
        let mut dist = vec![usize::MAX; n];
        dist[u] = 0;
        let mut queue = std::collections::VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if (x, y) == (u, v) || (x, y) == (v, u) {
                    continue;
                }
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        if dist[v] != usize::MAX {
            let cycle = dist[v] + 1;
            if best.is_none_or(|b| cycle < b) {
                best = Some(cycle);
            }
        }
    }
    best
}

/// Exact parameter value straight from the definitions; `None` when no
/// witness of any size exists (the not-applicable cases).
pub fn oracle_parameter(g: &Graph, kind: ParameterKind) -> Option<usize> {
    match kind {
        ParameterKind::Domination => oracle_min_set(g, dominating),
        ParameterKind::Total => oracle_min_set(g, total_dominating),
        ParameterKind::Connected => oracle_min_set(g, connected_dominating),
        ParameterKind::WeaklyConnected => oracle_min_set(g, weakly_connected_dominating),
        ParameterKind::Restrained => oracle_min_set(g, restrained_dominating),
        ParameterKind::TotalRestrained => oracle_min_set(g, total_restrained_dominating),
        ParameterKind::Roman => oracle_roman(g),
        ParameterKind::RestrictedEdgeConn => oracle_lambda_prime(g),
    }
}

/// Planarity by Wagner's criterion: no K_5 minor and no K_{3,3} minor.
/// Exponential; callers keep n small.
pub fn oracle_planar(g: &Graph) -> bool {
    assert!(g.vertex_count() <= 7, "minor oracle is too slow beyond n = 7");
    !has_minor(g, 5, &|a, b| a != b) && !has_minor(g, 6, &|a, b| a / 3 != b / 3)
}

/// Searches for a minor with `classes` branch sets where classes `a`, `b`
/// must be adjacent whenever `need_edge(a, b)`.
fn has_minor(g: &Graph, classes: usize, need_edge: &dyn Fn(usize, usize) -> bool) -> bool {
    let n = g.vertex_count();
    let adj = adjacency_lists(g);
    let base = classes + 1; // last value = unassigned
    let total = (base as u64).pow(n as u32);
    'outer: for code in 0..total {
        let mut assignment = vec![classes; n];
        let mut c = code;
        for slot in assignment.iter_mut() {
            *slot = (c % base as u64) as usize;
            c /= base as u64;
        }
        // each class non-empty and connected
        for class in 0..classes {
            let alive: Vec<bool> = (0..n).map(|v| assignment[v] == class).collect();
            if !alive.iter().any(|&a| a) || !connected_over(&adj, &alive) {
                continue 'outer;
            }
        }
        // required adjacencies between branch sets
        for a in 0..classes {
            for b in a + 1..classes {
                if !need_edge(a, b) {
                    continue;
                }
                let touching = (0..n).any(|v| {
                    assignment[v] == a && adj[v].iter().any(|&w| assignment[w] == b)
                });
                if !touching {
                    continue 'outer;
                }
            }
        }
        return true;
    }
    false
}

/// Deterministic xorshift for seeded test corpora that must not depend on
/// the library's sampling.
pub struct TestRng(pub u64);

impl TestRng {
    pub fn next(&mut self) -> u64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        self.0
    }

    pub fn below(&mut self, bound: u64) -> u64 {
        self.next() % bound
    }

    pub fn graph(&mut self, n: usize, percent: u64) -> Graph {
        let mut edges = vec![];
        for u in 0..n {
            for v in u + 1..n {
                if self.below(100) < percent {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, &edges).unwrap()
    }
}
