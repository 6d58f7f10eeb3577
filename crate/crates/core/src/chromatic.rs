//! Exact chromatic number for small graphs.
//!
//! Branching search over DSATUR-ordered vertices, bracketed by a greedy
//! clique (lower bound) and a DSATUR coloring (upper bound).

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default vertex cap for exact χ.
pub const DEFAULT_CHI_CAP: usize = 16;
/// Largest cap accepted; saturation sets are 64-bit masks.
pub const MAX_CHI_CAP: usize = 64;

pub fn chromatic_number(g: &Graph, cap: usize) -> Result<usize> {
    let n = g.n();
    if cap > MAX_CHI_CAP {
        return Err(Error::InvalidArgument(format!(
            "chromatic cap {cap} exceeds {MAX_CHI_CAP}"
        )));
    }
    if n > cap {
        return Err(Error::ChromaticCapExceeded { n, cap });
    }
    if n == 0 {
        return Ok(0);
    }
    if g.m() == 0 {
        return Ok(1);
    }
    let lower = greedy_clique(g);
    let upper = dsatur_colors(g);
    for k in lower..upper {
        if colorable(g, k) {
            return Ok(k);
        }
    }
    Ok(upper)
}

/// Size of a clique grown greedily from each vertex in turn.
fn greedy_clique(g: &Graph) -> usize {
    let mut best = 1;
    for start in 0..g.n() {
        let mut clique = vec![start];
        let mut candidates: Vec<usize> = g.neighbors(start).iter().map(|&w| w as usize).collect();
        while let Some(&pick) = candidates
            .iter()
            .max_by_key(|&&c| candidates.iter().filter(|&&d| g.has_edge(c, d)).count())
        {
            clique.push(pick);
            candidates.retain(|&c| c != pick && g.has_edge(c, pick));
        }
        best = best.max(clique.len());
    }
    best
}

fn saturation(g: &Graph, color: &[usize], v: usize) -> usize {
    let mut seen = 0u64;
    for &w in g.neighbors(v) {
        let c = color[w as usize];
        if c != usize::MAX {
            seen |= 1 << c;
        }
    }
    seen.count_ones() as usize
}

fn pick_vertex(g: &Graph, color: &[usize]) -> Option<usize> {
    (0..g.n())
        .filter(|&v| color[v] == usize::MAX)
        .max_by_key(|&v| (saturation(g, color, v), g.neighbors(v).len(), std::cmp::Reverse(v)))
}

fn dsatur_colors(g: &Graph) -> usize {
    let mut color = vec![usize::MAX; g.n()];
    let mut used = 0;
    while let Some(v) = pick_vertex(g, &color) {
        let c = (0..)
            .find(|&c| g.neighbors(v).iter().all(|&w| color[w as usize] != c))
            .unwrap();
        color[v] = c;
        used = used.max(c + 1);
    }
    used
}

fn colorable(g: &Graph, k: usize) -> bool {
    fn extend(g: &Graph, k: usize, color: &mut [usize], used: usize) -> bool {
        let Some(v) = pick_vertex(g, color) else {
            return true;
        };
        // A fresh color is interchangeable with any other fresh one.
        for c in 0..(used + 1).min(k) {
            if g.neighbors(v).iter().all(|&w| color[w as usize] != c) {
                color[v] = c;
                if extend(g, k, color, used.max(c + 1)) {
                    return true;
                }
                color[v] = usize::MAX;
            }
        }
        false
    }
    let mut color = vec![usize::MAX; g.n()];
    extend(g, k, &mut color, 0)
}
