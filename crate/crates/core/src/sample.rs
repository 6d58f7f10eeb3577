//! Seeded G(n, p) sampling.
//!
//! Two kernels produce the same distribution:
//!
//! * [`Kernel::Dense`] walks all `C(n, 2)` pairs in canonical order and keeps
//!   a pair when `next_u64() >> 11 < floor(p * 2^53)`. This is the reference.
//! * [`Kernel::Sparse`] jumps between kept pairs with geometric gaps
//!   `floor(ln(U) / ln(1 - p))`, `U` uniform on `(0, 1]`, over the linear
//!   pair index `k` (pair `(u, v)` with `u < v` has index
//!   `u*n - u*(u+1)/2 + (v - u - 1)`).
//!
//! [`sample_gnp`] uses the sparse kernel for `p < 0.1`.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_EDGES, MAX_VERTICES};
use crate::rng::RngSeed;

/// Probability below which [`sample_gnp`] switches to the sparse kernel.
pub const SPARSE_KERNEL_BELOW: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kernel {
    Dense,
    Sparse,
}

impl Kernel {
    pub fn for_probability(p: f64) -> Self {
        if p < SPARSE_KERNEL_BELOW {
            Kernel::Sparse
        } else {
            Kernel::Dense
        }
    }
}

fn check_args(n: usize, p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("G(n, p) needs n >= 1".into()));
    }
    if n > MAX_VERTICES {
        return Err(Error::TooLarge(format!("{n} vertices exceeds {MAX_VERTICES}")));
    }
    Ok(())
}

/// Samples G(n, p) with the kernel chosen by [`Kernel::for_probability`].
pub fn sample_gnp(n: usize, p: f64, seed: RngSeed) -> Result<Graph> {
    sample_gnp_with(n, p, seed, Kernel::for_probability(p))
}

pub fn sample_gnp_with(n: usize, p: f64, seed: RngSeed, kernel: Kernel) -> Result<Graph> {
    check_args(n, p)?;
    let edges = match kernel {
        Kernel::Dense => dense_edges(n, p, seed)?,
        Kernel::Sparse => sparse_edges(n, p, seed)?,
    };
    Ok(Graph::from_canonical(n, edges))
}

fn too_many() -> Error {
    Error::TooLarge(format!("sample exceeds {MAX_EDGES} edges"))
}

fn dense_edges(n: usize, p: f64, seed: RngSeed) -> Result<Vec<(u32, u32)>> {
    let mut rng = seed.rng();
    let cutoff = (p * (1u64 << 53) as f64) as u64;
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if (rng.next() >> 11) < cutoff {
                if edges.len() == MAX_EDGES {
                    return Err(too_many());
                }
                edges.push((u, v));
            }
        }
    }
    Ok(edges)
}

fn sparse_edges(n: usize, p: f64, seed: RngSeed) -> Result<Vec<(u32, u32)>> {
    let mut edges = Vec::new();
    if p == 0.0 || n < 2 {
        return Ok(edges);
    }
    let total = (n as u64) * (n as u64 - 1) / 2;
    let log_q = (-p).ln_1p();
    let mut rng = seed.rng();

    // Current row u covers pair indices [row_start, row_start + row_len).
    let (mut u, mut row_start, mut row_len) = (0u64, 0u64, n as u64 - 1);
    let mut next = 0u64;
    loop {
        let gap = (rng.next_unit_open0().ln() / log_q).floor();
        // ln(U) / ln(1 - p) is +inf when p = 1 rounds ln_1p to -inf; treat NaN the same
        if gap.is_nan() || gap >= (total - next) as f64 {
            break;
        }
        let k = next + gap as u64;
        if k >= total {
            break;
        }
        while k >= row_start + row_len {
            row_start += row_len;
            row_len -= 1;
            u += 1;
        }
        let v = u + 1 + (k - row_start);
        if edges.len() == MAX_EDGES {
            return Err(too_many());
        }
        edges.push((u as u32, v as u32));
        next = k + 1;
        if next >= total {
            break;
        }
    }
    Ok(edges)
}
