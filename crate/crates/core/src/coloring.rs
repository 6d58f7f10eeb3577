//! Edge colorings and the monochromatic-connection check.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A total labeling of a graph's edges, aligned with canonical edge order.
///
/// Labels are `0..k` and label `j` first appears before label `j + 1`, so two
/// colorings with the same color classes compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    labels: Vec<usize>,
    colors: usize,
}

impl EdgeColoring {
    /// Accepts labels that are already in canonical first-occurrence form.
    pub fn new(labels: Vec<usize>) -> Result<Self> {
        let mut next = 0;
        for (i, &l) in labels.iter().enumerate() {
            if l > next {
                return Err(Error::InvalidColoring(format!(
                    "edge #{i} uses label {l} before label {next} appears"
                )));
            }
            if l == next {
                next += 1;
            }
        }
        Ok(Self { labels, colors: next })
    }

    /// Relabels arbitrary labels by order of first appearance.
    pub fn from_labels<I: IntoIterator<Item = usize>>(labels: I) -> Self {
        let mut map = std::collections::HashMap::new();
        let labels: Vec<usize> = labels
            .into_iter()
            .map(|l| {
                let k = map.len();
                *map.entry(l).or_insert(k)
            })
            .collect();
        Self {
            colors: map.len(),
            labels,
        }
    }

    /// One color for every edge.
    pub fn monochrome(m: usize) -> Self {
        Self {
            labels: vec![0; m],
            colors: usize::from(m > 0),
        }
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, edge: usize) -> usize {
        self.labels[edge]
    }

    /// Number of distinct colors, `k`.
    pub fn num_colors(&self) -> usize {
        self.colors
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Edge indices of each color class.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.colors];
        for (e, &l) in self.labels.iter().enumerate() {
            classes[l].push(e);
        }
        classes
    }
}

/// The coloring that gives every spanning-tree edge color 0 and every other
/// edge its own fresh color, for `m - n + 2` colors in total.
///
/// Uses [`Graph::spanning_tree`]. Non-tree edges receive fresh colors in
/// canonical order; the result is relabeled canonically.
pub fn spanning_tree_coloring(g: &Graph) -> Result<EdgeColoring> {
    let tree = g.spanning_tree()?;
    let mut in_tree = vec![false; g.m()];
    for e in tree {
        in_tree[e] = true;
    }
    let mut fresh = 0;
    let raw = in_tree.iter().map(|&t| {
        if t {
            0
        } else {
            fresh += 1;
            fresh
        }
    });
    Ok(EdgeColoring::from_labels(raw.collect::<Vec<_>>()))
}

/// Lower-triangle pair bitset.
struct PairSet {
    bits: Vec<u64>,
    covered: usize,
}

impl PairSet {
    fn new(n: usize) -> Self {
        let pairs = n * n.saturating_sub(1) / 2;
        Self {
            bits: vec![0; pairs.div_ceil(64)],
            covered: 0,
        }
    }

    #[inline]
    fn index(u: usize, v: usize) -> usize {
        // u < v
        v * (v - 1) / 2 + u
    }

    #[inline]
    fn insert(&mut self, u: usize, v: usize) {
        let i = Self::index(u, v);
        let (word, bit) = (i / 64, 1u64 << (i % 64));
        if self.bits[word] & bit == 0 {
            self.bits[word] |= bit;
            self.covered += 1;
        }
    }

    #[inline]
    fn contains(&self, u: usize, v: usize) -> bool {
        let i = Self::index(u, v);
        self.bits[i / 64] & (1u64 << (i % 64)) != 0
    }
}

fn check_alignment(g: &Graph, c: &EdgeColoring) -> Result<()> {
    if c.len() != g.m() {
        return Err(Error::ColoringMismatch {
            expected: g.m(),
            found: c.len(),
        });
    }
    Ok(())
}

/// First vertex pair `(u, v)`, `u < v`, in lexicographic order that no
/// color class joins, or `None` when `c` is an MC-coloring.
///
/// Each color class is split into components with a union-find restricted to
/// the vertices it touches, and every pair inside a component is marked. The
/// cost is the sum over classes of squared component sizes.
pub fn first_uncovered_pair(g: &Graph, c: &EdgeColoring) -> Result<Option<(usize, usize)>> {
    check_alignment(g, c)?;
    let n = g.n();
    let total = n * n.saturating_sub(1) / 2;
    if total == 0 {
        return Ok(None);
    }
    let mut covered = PairSet::new(n);
    let mut parent: Vec<usize> = (0..n).collect();
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); n];

    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }

    for class in c.classes() {
        let mut touched: Vec<usize> = Vec::with_capacity(2 * class.len());
        for &e in &class {
            let (u, v) = g.edge(e);
            touched.extend([u, v]);
        }
        touched.sort_unstable();
        touched.dedup();
        for &e in &class {
            let (u, v) = g.edge(e);
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru.max(rv)] = ru.min(rv);
            }
        }
        for &v in &touched {
            let r = find(&mut parent, v);
            members[r].push(v);
        }
        for &v in &touched {
            let comp = std::mem::take(&mut members[v]);
            if comp.len() == n {
                return Ok(None);
            }
            for (i, &a) in comp.iter().enumerate() {
                for &b in &comp[i + 1..] {
                    covered.insert(a, b);
                }
            }
        }
        for &v in &touched {
            parent[v] = v;
        }
        if covered.covered == total {
            return Ok(None);
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            if !covered.contains(u, v) {
                return Ok(Some((u, v)));
            }
        }
    }
    unreachable!("coverage count below total implies an uncovered pair")
}

/// True iff every pair of vertices is joined by a monochromatic path.
pub fn verify_mc_coloring(g: &Graph, c: &EdgeColoring) -> Result<bool> {
    Ok(first_uncovered_pair(g, c)?.is_none())
}
