//! Vertex connectivity via unit-vertex-capacity maximum flow.

use std::collections::VecDeque;

use crate::graph::Graph;

const INF: u32 = u32::MAX / 2;

/// Residual network with paired forward/backward arcs.
struct FlowNetwork {
    head: Vec<usize>,
    to: Vec<usize>,
    cap: Vec<u32>,
    next: Vec<usize>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        Self {
            head: vec![usize::MAX; nodes],
            to: Vec::new(),
            cap: Vec::new(),
            next: Vec::new(),
        }
    }

    fn add_arc(&mut self, u: usize, v: usize, c: u32) {
        for (a, b, c) in [(u, v, c), (v, u, 0)] {
            self.to.push(b);
            self.cap.push(c);
            self.next.push(self.head[a]);
            self.head[a] = self.to.len() - 1;
        }
    }

    /// Edmonds-Karp, stopping once `limit` units have been pushed.
    fn max_flow(&mut self, s: usize, t: usize, limit: u32) -> u32 {
        let nodes = self.head.len();
        let mut flow = 0;
        let mut via = vec![usize::MAX; nodes];
        let mut queue = VecDeque::new();
        while flow < limit {
            via.fill(usize::MAX);
            queue.clear();
            queue.push_back(s);
            let mut found = false;
            'bfs: while let Some(u) = queue.pop_front() {
                let mut a = self.head[u];
                while a != usize::MAX {
                    let w = self.to[a];
                    if self.cap[a] > 0 && w != s && via[w] == usize::MAX {
                        via[w] = a;
                        if w == t {
                            found = true;
                            break 'bfs;
                        }
                        queue.push_back(w);
                    }
                    a = self.next[a];
                }
            }
            if !found {
                break;
            }
            // Internal vertex arcs have capacity 1, so each path carries one unit.
            let mut v = t;
            while v != s {
                let a = via[v];
                self.cap[a] -= 1;
                self.cap[a ^ 1] += 1;
                v = self.to[a ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

/// Maximum number of internally vertex-disjoint `s`-`t` paths, capped at `limit`.
/// `s` and `t` must be distinct and non-adjacent.
pub fn local_vertex_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    debug_assert!(s != t && !g.has_edge(s, t));
    let n = g.n();
    // vertex v splits into v_in = 2v and v_out = 2v + 1
    let mut net = FlowNetwork::new(2 * n);
    for v in 0..n {
        let c = if v == s || v == t { INF } else { 1 };
        net.add_arc(2 * v, 2 * v + 1, c);
    }
    for (u, v) in g.edges() {
        net.add_arc(2 * u + 1, 2 * v, INF);
        net.add_arc(2 * v + 1, 2 * u, INF);
    }
    net.max_flow(2 * s + 1, 2 * t, limit.min(INF as usize) as u32) as usize
}

/// κ(G): the minimum number of vertices whose removal disconnects the graph
/// or leaves a single vertex.
///
/// `κ(K_n) = n - 1`, disconnected graphs give 0. Otherwise the minimum of
/// local connectivities over non-adjacent pairs `(v_i, v_j)`, `i < j`, with
/// `i` ranging only up to the current best value: a minimum separator of
/// size κ misses one of `v_0..=v_κ`, and the smallest such vertex has a
/// separated partner of larger index.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if n <= 1 {
        return 0;
    }
    if !g.is_connected() {
        return 0;
    }
    if g.is_complete() {
        return n - 1;
    }
    let mut best = g.min_degree();
    let mut i = 0;
    while i <= best && i < n {
        for j in i + 1..n {
            if !g.has_edge(i, j) {
                best = best.min(local_vertex_connectivity(g, i, j, best));
            }
        }
        i += 1;
    }
    best
}
