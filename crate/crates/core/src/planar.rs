//! Planarity testing.
//!
//! A graph is planar iff each biconnected block is planar, so blocks are
//! extracted first. Each block is tested by growing a plane subgraph from a
//! cycle: repeatedly pick a bridge fragment admissible in the fewest faces
//! and draw one of its paths into such a face, splitting it. A fragment with
//! no admissible face certifies non-planarity.

use std::collections::VecDeque;

use crate::graph::{bits, full_mask, Graph};

pub(crate) fn is_planar(g: &Graph) -> bool {
    // K_5 subdivisions need 10 edges, K_{3,3} subdivisions need 9.
    if g.vertex_count() <= 4 || g.edge_count() <= 8 {
        return true;
    }
    blocks(g).into_iter().all(|block| {
        let (b, _) = g.induced(&block).unwrap();
        planar_biconnected(&b)
    })
}

/// Vertex sets of the biconnected components.
fn blocks(g: &Graph) -> Vec<Vec<usize>> {
    struct State<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        blocks: Vec<Vec<usize>>,
    }

    fn dfs(s: &mut State, u: usize, parent: usize) {
        s.time += 1;
        s.disc[u] = s.time;
        s.low[u] = s.time;
        for v in s.g.neighbors(u) {
            if s.disc[v] == 0 {
                s.stack.push((u, v));
                dfs(s, v, u);
                s.low[u] = s.low[u].min(s.low[v]);
                if s.low[v] >= s.disc[u] {
                    let mut verts = 0u64;
                    loop {
                        let (x, y) = s.stack.pop().unwrap();
                        verts |= (1 << x) | (1 << y);
                        if (x, y) == (u, v) {
                            break;
                        }
                    }
                    s.blocks.push(bits(verts).collect());
                }
            } else if v != parent && s.disc[v] < s.disc[u] {
                s.stack.push((u, v));
                s.low[u] = s.low[u].min(s.disc[v]);
            }
        }
    }

    let mut s = State {
        g,
        disc: vec![0; g.vertex_count()],
        low: vec![0; g.vertex_count()],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    for v in 0..g.vertex_count() {
        if s.disc[v] == 0 {
            dfs(&mut s, v, usize::MAX);
        }
    }
    s.blocks
}

/// A bridge of the plane subgraph H: either a chord of H or a component of
/// G - V(H) together with its edges into H.
struct Fragment {
    attachments: u64,
    interior: u64,
    chord: Option<(usize, usize)>,
}

impl Fragment {
    /// A path between two distinct attachment vertices whose interior lies
    /// inside the fragment.
    fn alpha_path(&self, g: &Graph) -> Vec<usize> {
        if let Some((u, v)) = self.chord {
            return vec![u, v];
        }
        let a = self.attachments.trailing_zeros() as usize;
        let targets = self.attachments & !(1u64 << a);
        let mut parent = vec![usize::MAX; g.vertex_count()];
        let mut seen = 1u64 << a;
        let mut queue = VecDeque::new();
        for w in bits(g.neighbor_mask(a) & self.interior) {
            parent[w] = a;
            seen |= 1 << w;
            queue.push_back(w);
        }
        while let Some(u) = queue.pop_front() {
            for w in bits(g.neighbor_mask(u) & (self.interior | targets) & !seen) {
                parent[w] = u;
                seen |= 1 << w;
                if targets & (1 << w) != 0 {
                    let mut path = vec![w];
                    let mut x = u;
                    loop {
                        path.push(x);
                        if x == a {
                            break;
                        }
                        x = parent[x];
                    }
                    path.reverse();
                    return path;
                }
                queue.push_back(w);
            }
        }
        unreachable!("fragment of a biconnected graph has two attachments")
    }
}

fn fragments(g: &Graph, hadj: &[u64], hverts: u64) -> Vec<Fragment> {
    let mut out = Vec::new();
    for u in bits(hverts) {
        for v in bits(g.neighbor_mask(u) & hverts & !hadj[u]) {
            if v > u {
                out.push(Fragment {
                    attachments: (1 << u) | (1 << v),
                    interior: 0,
                    chord: Some((u, v)),
                });
            }
        }
    }
    let mut remaining = full_mask(g.vertex_count()) & !hverts;
    while remaining != 0 {
        let start = remaining.trailing_zeros() as usize;
        let comp = g.reachable(start, remaining);
        let mut attachments = 0u64;
        for v in bits(comp) {
            attachments |= g.neighbor_mask(v) & hverts;
        }
        out.push(Fragment {
            attachments,
            interior: comp,
            chord: None,
        });
        remaining &= !comp;
    }
    out
}

/// Splits a face boundary cycle along a path joining two boundary vertices.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let u = path[0];
    let w = *path.last().unwrap();
    let i = face.iter().position(|&x| x == u).unwrap();
    let j = face.iter().position(|&x| x == w).unwrap();
    let len = face.len();
    let mut arc1 = Vec::new();
    let mut k = i;
    loop {
        arc1.push(face[k]);
        if k == j {
            break;
        }
        k = (k + 1) % len;
    }
    let mut arc2 = Vec::new();
    let mut k = j;
    loop {
        arc2.push(face[k]);
        if k == i {
            break;
        }
        k = (k + 1) % len;
    }
    let interior = &path[1..path.len() - 1];
    arc1.extend(interior.iter().rev());
    arc2.extend(interior.iter());
    (arc1, arc2)
}

/// Some cycle of a biconnected graph with at least one cycle.
fn find_cycle(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut disc = vec![0usize; n];
    let mut time = 0;
    let mut stack = vec![(0usize, usize::MAX)];
    while let Some((u, p)) = stack.pop() {
        if disc[u] != 0 {
            continue;
        }
        time += 1;
        disc[u] = time;
        parent[u] = p;
        for v in g.neighbors(u) {
            if disc[v] == 0 {
                stack.push((v, u));
            } else if v != p && disc[v] < disc[u] {
                let mut cycle = vec![u];
                let mut x = u;
                while x != v {
                    x = parent[x];
                    cycle.push(x);
                }
                return cycle;
            }
        }
    }
    unreachable!("biconnected graph with m >= n contains a cycle")
}

fn mask_of(vertices: &[usize]) -> u64 {
    vertices.iter().fold(0u64, |m, &v| m | (1 << v))
}

fn planar_biconnected(g: &Graph) -> bool {
    let n = g.vertex_count();
    let m = g.edge_count();
    if m <= 8 {
        return true;
    }
    if m > 3 * n - 6 {
        return false;
    }

    let cycle = find_cycle(g);
    let mut hadj = vec![0u64; n];
    let mut hverts = 0u64;
    for i in 0..cycle.len() {
        let (u, v) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        hadj[u] |= 1 << v;
        hadj[v] |= 1 << u;
        hverts |= 1 << u;
    }
    let mut h_edges = cycle.len();
    let mut faces: Vec<Vec<usize>> =
        vec![cycle.clone(), cycle.iter().rev().copied().collect()];

    while h_edges < m {
        let frags = fragments(g, &hadj, hverts);
        debug_assert!(!frags.is_empty());

        let mut choice: Option<(usize, usize)> = None;
        let mut best = usize::MAX;
        for (fi, frag) in frags.iter().enumerate() {
            let mut count = 0;
            let mut admissible = usize::MAX;
            for (fj, face) in faces.iter().enumerate() {
                if frag.attachments & !mask_of(face) == 0 {
                    count += 1;
                    admissible = fj;
                }
            }
            if count == 0 {
                return false;
            }
            if count < best {
                best = count;
                choice = Some((fi, admissible));
                if count == 1 {
                    break;
                }
            }
        }

        let (fi, face_idx) = choice.unwrap();
        let path = frags[fi].alpha_path(g);
        for win in path.windows(2) {
            hadj[win[0]] |= 1 << win[1];
            hadj[win[1]] |= 1 << win[0];
            h_edges += 1;
        }
        for &v in &path {
            hverts |= 1 << v;
        }
        let face = faces.swap_remove(face_idx);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
    }
    true
}
