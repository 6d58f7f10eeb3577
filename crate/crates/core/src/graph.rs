//! Simple undirected graphs in canonical form and the structural queries the
//! mc bounds consume.

use std::collections::VecDeque;
use std::fmt;

use crate::dsu::DisjointSet;
use crate::error::{Error, Result};

/// Largest vertex count accepted by any constructor.
pub const MAX_VERTICES: usize = 1 << 20;
/// Largest edge count accepted by any constructor.
pub const MAX_EDGES: usize = 1 << 28;

/// An immutable simple undirected graph on vertices `0..n`.
///
/// Edges are stored as pairs `(u, v)` with `u < v`, sorted lexicographically
/// without duplicates. Edge indices used throughout the crate (colorings,
/// spanning trees) refer to this canonical order. A CSR adjacency with
/// ascending neighbor lists is built once at construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
    offsets: Vec<usize>,
    adj: Vec<u32>,
}

/// Eccentricity maximum over all vertex pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("inf"),
        }
    }
}

fn check_size(n: usize, m: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::TooLarge(format!("{n} vertices exceeds {MAX_VERTICES}")));
    }
    if m > MAX_EDGES {
        return Err(Error::TooLarge(format!("{m} edges exceeds {MAX_EDGES}")));
    }
    Ok(())
}

impl Graph {
    /// Builds a graph from an edge list that must already be canonical.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        check_size(n, edges.len())?;
        let mut prev: Option<(usize, usize)> = None;
        for (index, &(u, v)) in edges.iter().enumerate() {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u > v || prev.is_some_and(|p| p >= (u, v)) {
                return Err(Error::NotCanonical { index, u, v });
            }
            prev = Some((u, v));
        }
        let edges = edges.into_iter().map(|(u, v)| (u as u32, v as u32)).collect();
        Ok(Self::from_canonical(n, edges))
    }

    /// Builds a graph from arbitrary pairs: orientation is normalized and
    /// duplicates are merged. Self-loops and out-of-range endpoints are errors.
    pub fn from_edges<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut edges = Vec::new();
        for (u, v) in pairs {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        edges.dedup();
        Self::new(n, edges)
    }

    /// Caller guarantees canonical form and size limits.
    pub(crate) fn from_canonical(n: usize, edges: Vec<(u32, u32)>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|&(u, v)| u < v && (v as usize) < n));
        let mut offsets = vec![0usize; n + 1];
        for &(u, v) in &edges {
            offsets[u as usize + 1] += 1;
            offsets[v as usize + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut adj = vec![0u32; 2 * edges.len()];
        // Edges arrive in lexicographic order, so every list ends up ascending:
        // smaller neighbors (from (w, x)) are pushed before larger ones (from (x, w)).
        for &(u, v) in &edges {
            adj[fill[u as usize]] = v;
            fill[u as usize] += 1;
            adj[fill[v as usize]] = u;
            fill[v as usize] += 1;
        }
        Self { n, edges, offsets, adj }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_canonical(n, Vec::new())
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                edges.push((u, v));
            }
        }
        Self::from_canonical(n, edges)
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let edges = (1..n as u32).map(|v| (v - 1, v)).collect();
        Self::from_canonical(n, edges)
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!("cycle needs n >= 3, got {n}")));
        }
        Self::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    /// Star with center 0 and `n - 1` leaves.
    pub fn star(n: usize) -> Self {
        let edges = (1..n as u32).map(|v| (0, v)).collect();
        Self::from_canonical(n, edges)
    }

    /// The Petersen graph: outer 5-cycle on 0..5, inner pentagram on 5..10.
    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
        Self::from_edges(10, outer.chain(spokes).chain(inner)).expect("static edge list")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(|&(u, v)| (u as usize, v as usize))
    }

    pub fn edge(&self, index: usize) -> (usize, usize) {
        let (u, v) = self.edges[index];
        (u as usize, v as usize)
    }

    /// Position of edge `{u, v}` in canonical order.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v) as u32, u.max(v) as u32);
        self.edges.binary_search(&key).ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u >= self.n || v >= self.n || u == v {
            return false;
        }
        self.neighbors(u).binary_search(&(v as u32)).is_ok()
    }

    /// Ascending neighbor list of `v`. Panics if `v >= n`.
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(self.offsets[v + 1] - self.offsets[v])
    }

    fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.offsets.windows(2).map(|w| w[1] - w[0])
    }

    /// δ(G); 0 for the graph on zero vertices.
    pub fn min_degree(&self) -> usize {
        self.degrees().min().unwrap_or(0)
    }

    /// Δ(G); 0 for the graph on zero vertices.
    pub fn max_degree(&self) -> usize {
        self.degrees().max().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Adds the edge `{u, v}`; returns a clone if it is already present.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        Self::from_edges(self.n, self.edges().chain(std::iter::once((u, v))))
    }

    fn union_find(&self) -> DisjointSet {
        let mut dsu = DisjointSet::new(self.n);
        for &(u, v) in &self.edges {
            dsu.union(u as usize, v as usize);
        }
        dsu
    }

    /// The one-vertex graph is connected; the zero-vertex graph is too.
    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.union_find().sets() == 1
    }

    /// Vertex sets of the connected components, each ascending, ordered by
    /// smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut dsu = self.union_find();
        let mut slot = vec![usize::MAX; self.n];
        let mut components: Vec<Vec<usize>> = Vec::with_capacity(dsu.sets());
        for v in 0..self.n {
            let root = dsu.find(v);
            if slot[root] == usize::MAX {
                slot[root] = components.len();
                components.push(Vec::new());
            }
            components[slot[root]].push(v);
        }
        components
    }

    /// Breadth-first spanning tree from vertex 0, visiting neighbors in
    /// ascending order. Returns ascending canonical edge indices.
    pub fn spanning_tree(&self) -> Result<Vec<usize>> {
        if !self.is_connected() {
            return Err(Error::NotConnected);
        }
        let mut tree = Vec::with_capacity(self.n.saturating_sub(1));
        if self.n == 0 {
            return Ok(tree);
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &w in self.neighbors(u) {
                let w = w as usize;
                if !seen[w] {
                    seen[w] = true;
                    tree.push(self.edge_index(u, w).expect("adjacent"));
                    queue.push_back(w);
                }
            }
        }
        tree.sort_unstable();
        Ok(tree)
    }

    fn bfs_eccentricity(&self, source: usize, dist: &mut [usize], queue: &mut VecDeque<usize>) -> Diameter {
        dist.fill(usize::MAX);
        dist[source] = 0;
        queue.clear();
        queue.push_back(source);
        let (mut reached, mut far) = (1, 0);
        while let Some(u) = queue.pop_front() {
            for &w in self.neighbors(u) {
                let w = w as usize;
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    far = dist[w];
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        if reached < self.n {
            Diameter::Infinite
        } else {
            Diameter::Finite(far)
        }
    }

    /// Largest shortest-path distance; `Infinite` for disconnected graphs.
    pub fn diameter(&self) -> Diameter {
        let mut dist = vec![0; self.n];
        let mut queue = VecDeque::new();
        let mut best = Diameter::Finite(0);
        for s in 0..self.n {
            let e = self.bfs_eccentricity(s, &mut dist, &mut queue);
            if e == Diameter::Infinite {
                return e;
            }
            best = best.max(e);
        }
        best
    }

    /// Articulation points (ascending), found with an iterative low-link DFS.
    /// Works per component, so it is meaningful on disconnected graphs too.
    pub fn cut_vertices(&self) -> Vec<usize> {
        const UNSEEN: usize = usize::MAX;
        let n = self.n;
        let mut order = vec![UNSEEN; n];
        let mut low = vec![0usize; n];
        let mut is_cut = vec![false; n];
        let mut clock = 0;
        // (vertex, parent, next neighbor position)
        let mut stack: Vec<(usize, usize, usize)> = Vec::new();
        for root in 0..n {
            if order[root] != UNSEEN {
                continue;
            }
            order[root] = clock;
            low[root] = clock;
            clock += 1;
            let mut root_children = 0;
            stack.push((root, UNSEEN, 0));
            while let Some(top) = stack.last_mut() {
                let (v, parent, pos) = *top;
                let nbrs = self.neighbors(v);
                if pos < nbrs.len() {
                    top.2 += 1;
                    let w = nbrs[pos] as usize;
                    if order[w] == UNSEEN {
                        order[w] = clock;
                        low[w] = clock;
                        clock += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((w, v, 0));
                    } else if w != parent {
                        low[v] = low[v].min(order[w]);
                    }
                } else {
                    stack.pop();
                    if parent != UNSEEN {
                        low[parent] = low[parent].min(low[v]);
                        if parent != root && low[v] >= order[parent] {
                            is_cut[parent] = true;
                        }
                    }
                }
            }
            if root_children > 1 {
                is_cut[root] = true;
            }
        }
        (0..n).filter(|&v| is_cut[v]).collect()
    }

    pub fn has_cut_vertex(&self) -> bool {
        !self.cut_vertices().is_empty()
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges.iter().all(|&(u, v)| {
            let (a, b) = (self.neighbors(u as usize), self.neighbors(v as usize));
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => return false,
                }
            }
            true
        })
    }

    /// κ(G). See [`crate::flow::vertex_connectivity`].
    pub fn vertex_connectivity(&self) -> usize {
        crate::flow::vertex_connectivity(self)
    }

    pub fn complement(&self) -> Result<Self> {
        let total = self.n * self.n.saturating_sub(1) / 2;
        check_size(self.n, total - self.m())?;
        let mut edges = Vec::with_capacity(total - self.m());
        for u in 0..self.n {
            let nbrs = self.neighbors(u);
            let mut k = nbrs.partition_point(|&w| (w as usize) <= u);
            for v in u + 1..self.n {
                if k < nbrs.len() && nbrs[k] as usize == v {
                    k += 1;
                } else {
                    edges.push((u as u32, v as u32));
                }
            }
        }
        Ok(Self::from_canonical(self.n, edges))
    }

    /// Exact χ(G) for graphs with at most `cap` vertices.
    pub fn chromatic_number(&self, cap: usize) -> Result<usize> {
        crate::chromatic::chromatic_number(self, cap)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}
