//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the algorithms under test beyond `Graph` construction.

#![allow(dead_code)]

use mclab::Graph;

/// Every labeled simple graph on `n` vertices, in bitmask order over the
/// pairs `(0,1), (0,2), ..., (n-2,n-1)`.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let total = 1u64 << pairs.len();
    (0..total).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::new(n, edges).unwrap()
    })
}

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let mut a = vec![vec![false; g.n()]; g.n()];
    for (u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

/// Reachability from `s` over the edges whose index passes `keep`, skipping
/// vertices in `removed`.
pub fn reach(g: &Graph, s: usize, removed: &[bool], keep: impl Fn(usize) -> bool) -> Vec<bool> {
    let mut seen = vec![false; g.n()];
    seen[s] = true;
    let mut stack = vec![s];
    while let Some(x) = stack.pop() {
        for (i, (u, v)) in g.edges().enumerate() {
            if !keep(i) || removed[u] || removed[v] {
                continue;
            }
            let y = if u == x {
                v
            } else if v == x {
                u
            } else {
                continue;
            };
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}

pub fn connected_without(g: &Graph, removed: &[bool]) -> bool {
    let Some(s) = (0..g.n()).find(|&v| !removed[v]) else {
        return true;
    };
    let seen = reach(g, s, removed, |_| true);
    (0..g.n()).all(|v| removed[v] || seen[v])
}

pub fn connected(g: &Graph) -> bool {
    connected_without(g, &vec![false; g.n()])
}

/// Smallest vertex set whose removal disconnects the graph; `n - 1` for
/// complete graphs, 0 for disconnected ones.
pub fn kappa(g: &Graph) -> usize {
    let n = g.n();
    if n <= 1 {
        return 0;
    }
    let mut best = n - 1;
    for mask in 0u32..(1 << n) {
        let k = mask.count_ones() as usize;
        if k >= best || k > n - 2 {
            continue;
        }
        let removed: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
        if !connected_without(g, &removed) {
            best = k;
        }
    }
    best
}

/// Floyd-Warshall eccentricity maximum; `None` when disconnected.
pub fn diameter(g: &Graph) -> Option<usize> {
    let n = g.n();
    let inf = usize::MAX / 4;
    let a = adjacency(g);
    let mut d: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        0
                    } else if a[i][j] {
                        1
                    } else {
                        inf
                    }
                })
                .collect()
        })
        .collect();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    let worst = d.iter().flatten().copied().max().unwrap_or(0);
    (worst < inf).then_some(worst)
}

/// Vertices whose removal increases the number of components.
pub fn cut_vertices(g: &Graph) -> Vec<usize> {
    let comps = |removed: &[bool]| {
        let mut seen = removed.to_vec();
        let mut c = 0;
        for s in 0..g.n() {
            if !seen[s] {
                c += 1;
                for (v, r) in reach(g, s, removed, |_| true).into_iter().enumerate() {
                    seen[v] |= r;
                }
            }
        }
        c
    };
    let base = comps(&vec![false; g.n()]);
    (0..g.n())
        .filter(|&v| {
            let mut removed = vec![false; g.n()];
            removed[v] = true;
            comps(&removed) > base
        })
        .collect()
}

pub fn has_triangle(g: &Graph) -> bool {
    let a = adjacency(g);
    let n = g.n();
    (0..n).any(|i| (i + 1..n).any(|j| a[i][j] && (j + 1..n).any(|k| a[i][k] && a[j][k])))
}

/// Smallest k admitting a proper coloring, by trying all k^n assignments.
pub fn chromatic(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    for k in 1..=n {
        let total = k.pow(n as u32);
        for code in 0..total {
            let mut c = vec![0; n];
            let mut x = code;
            for slot in c.iter_mut() {
                *slot = x % k;
                x /= k;
            }
            if g.edges().all(|(u, v)| c[u] != c[v]) {
                return k;
            }
        }
    }
    n
}

/// True when every pair of vertices is joined inside one color class.
pub fn is_mc(g: &Graph, labels: &[usize]) -> bool {
    let n = g.n();
    let none = vec![false; n];
    let colors = labels.iter().copied().max().map_or(0, |c| c + 1);
    let mut joined = vec![vec![false; n]; n];
    for c in 0..colors {
        for (s, row) in joined.iter_mut().enumerate() {
            let seen = reach(g, s, &none, |i| labels[i] == c);
            for (cell, hit) in row.iter_mut().zip(seen) {
                *cell |= hit;
            }
        }
    }
    (0..n).all(|s| (0..n).all(|t| s == t || joined[s][t]))
}

/// mc(G) by walking every set partition of the edges as a restricted growth
/// string. Exponential; meant for m <= 10.
pub fn mc_brute(g: &Graph) -> usize {
    if !connected(g) {
        return 0;
    }
    let m = g.m();
    if m == 0 {
        return 0;
    }
    let mut a = vec![0usize; m];
    let mut best = 0;
    loop {
        let blocks = a.iter().max().unwrap() + 1;
        if blocks > best && is_mc(g, &a) {
            best = blocks;
        }
        // next restricted growth string
        let mut i = m - 1;
        loop {
            let prefix_max = a[..i].iter().copied().max().unwrap_or(0);
            if i > 0 && a[i] <= prefix_max {
                a[i] += 1;
                a[i + 1..].iter_mut().for_each(|x| *x = 0);
                break;
            }
            if i <= 1 {
                return best;
            }
            i -= 1;
        }
    }
}

/// Empirical `Pr[X < (1 - delta) mu]` and `Pr[X > (1 + delta) mu]` for
/// `X ~ Bin(trials, mu / trials)` over `draws` samples from one stream.
pub fn binomial_tails(mu: f64, delta: f64, trials: u64, draws: usize, seed: u64) -> (f64, f64) {
    use rand_distr::{Binomial, Distribution};
    let dist = Binomial::new(trials, mu / trials as f64).unwrap();
    let mut rng = mclab::RngSeed::new(seed, 0).rng();
    let (mut low, mut high) = (0usize, 0usize);
    for _ in 0..draws {
        let x = dist.sample(&mut rng) as f64;
        if x < (1.0 - delta) * mu {
            low += 1;
        }
        if x > (1.0 + delta) * mu {
            high += 1;
        }
    }
    (low as f64 / draws as f64, high as f64 / draws as f64)
}
