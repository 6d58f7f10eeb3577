//! Exact mc(G) for graphs with few edges.
//!
//! Color classes are unordered, so colorings are enumerated as set
//! partitions of the edge set written as restricted growth strings:
//! `a[0] = 0` and `a[i] <= 1 + max(a[0..i])`. The number of leaves is the
//! Bell number of `m`, which is why the cap is on edges rather than vertices.

use crate::bounds::{mc_lower_bound, mc_upper_bound};
use crate::chromatic::DEFAULT_CHI_CAP;
use crate::coloring::{verify_mc_coloring, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default edge cap for the exact search (Bell(12) = 4,213,597 partitions).
pub const DEFAULT_EXACT_CAP: usize = 12;

/// Result of an exact search: mc(G) and one coloring attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMc {
    pub value: usize,
    pub witness: Option<EdgeColoring>,
}

/// mc(G) by exhaustive partition search; 0 for disconnected graphs.
pub fn exact_mc_small(g: &Graph, cap: usize) -> Result<usize> {
    Ok(exact_mc_search(g, cap, true)?.value)
}

/// Full search. With `prune`, the search starts from the spanning-tree lower
/// bound, skips prefixes that cannot beat the incumbent, and stops as soon as
/// the incumbent meets the upper bound. Without it every partition is checked.
pub fn exact_mc_search(g: &Graph, cap: usize, prune: bool) -> Result<ExactMc> {
    let m = g.m();
    if m > cap {
        return Err(Error::ExactCapExceeded { m, cap });
    }
    if !g.is_connected() || g.n() <= 1 {
        return Ok(ExactMc {
            value: 0,
            witness: None,
        });
    }
    let mut search = Search::new(g);
    if prune {
        search.best = mc_lower_bound(g);
        search.witness = Some(crate::coloring::spanning_tree_coloring(g)?.labels().to_vec());
        search.stop_at = mc_upper_bound(g, DEFAULT_CHI_CAP)?.value;
    }
    search.prune = prune;
    search.run();
    Ok(ExactMc {
        value: search.best,
        witness: search
            .witness
            .map(|w| EdgeColoring::new(w).expect("restricted growth string")),
    })
}

struct Search<'g> {
    g: &'g Graph,
    labels: Vec<usize>,
    best: usize,
    witness: Option<Vec<usize>>,
    stop_at: usize,
    prune: bool,
    done: bool,
    small: Option<SmallChecker>,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph) -> Self {
        Self {
            g,
            labels: vec![0; g.m()],
            best: 0,
            witness: None,
            stop_at: usize::MAX,
            prune: false,
            done: false,
            small: SmallChecker::new(g),
        }
    }

    fn run(&mut self) {
        if self.best >= self.stop_at {
            return;
        }
        if self.g.m() == 0 {
            return;
        }
        self.extend(0, 0);
    }

    fn extend(&mut self, i: usize, used: usize) {
        if self.done {
            return;
        }
        let m = self.g.m();
        if i == m {
            if used > self.best && self.is_mc(used) {
                self.best = used;
                self.witness = Some(self.labels.clone());
                if self.best >= self.stop_at {
                    self.done = true;
                }
            }
            return;
        }
        if self.prune && used + (m - i) <= self.best {
            return;
        }
        // Fresh labels first: high-count partitions are found early.
        for l in (0..=used.min(m)).rev() {
            self.labels[i] = l;
            self.extend(i + 1, used.max(l + 1));
            if self.done {
                return;
            }
        }
    }

    fn is_mc(&mut self, k: usize) -> bool {
        match &mut self.small {
            Some(c) => c.check(&self.labels, k),
            None => {
                let c = EdgeColoring::new(self.labels.clone()).expect("restricted growth string");
                verify_mc_coloring(self.g, &c).expect("aligned")
            }
        }
    }
}

/// Bitmask verifier for graphs on at most 64 vertices.
struct SmallChecker {
    n: usize,
    edges: Vec<(u8, u8)>,
    parent: [u8; 64],
    full: u64,
}

impl SmallChecker {
    fn new(g: &Graph) -> Option<Self> {
        if g.n() > 64 {
            return None;
        }
        Some(Self {
            n: g.n(),
            edges: g.edges().map(|(u, v)| (u as u8, v as u8)).collect(),
            parent: [0; 64],
            full: if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 },
        })
    }

    fn find(&mut self, mut x: u8) -> u8 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    fn check(&mut self, labels: &[usize], k: usize) -> bool {
        let n = self.n;
        let mut covered = [0u64; 64];
        for (v, row) in covered.iter_mut().enumerate().take(n) {
            *row = 1u64 << v;
        }
        let mut comp = [0u64; 64];
        for class in 0..k {
            let mut touched = 0u64;
            for (e, &(u, v)) in self.edges.iter().enumerate() {
                if labels[e] == class {
                    touched |= (1u64 << u) | (1u64 << v);
                }
            }
            let mut t = touched;
            while t != 0 {
                let v = t.trailing_zeros() as usize;
                self.parent[v] = v as u8;
                t &= t - 1;
            }
            // indexed: `find` needs `&mut self` while the edges are read
            #[allow(clippy::needless_range_loop)]
            for e in 0..self.edges.len() {
                if labels[e] == class {
                    let (u, v) = self.edges[e];
                    let (ru, rv) = (self.find(u), self.find(v));
                    if ru != rv {
                        self.parent[ru.max(rv) as usize] = ru.min(rv);
                    }
                }
            }
            let mut t = touched;
            while t != 0 {
                let v = t.trailing_zeros() as u8;
                let r = self.find(v);
                comp[r as usize] |= 1u64 << v;
                t &= t - 1;
            }
            let mut t = touched;
            while t != 0 {
                let v = t.trailing_zeros() as usize;
                let r = self.find(v as u8) as usize;
                covered[v] |= comp[r];
                t &= t - 1;
            }
            let mut t = touched;
            while t != 0 {
                comp[t.trailing_zeros() as usize] = 0;
                t &= t - 1;
            }
        }
        covered[..n].iter().all(|&row| row == self.full)
    }
}
