//! Seeded G(n, p) sampling with both kernels.
//!
//! Run: cargo run --example sample_graph

use mclab::sample::{sample_gnp_with, Kernel};
use mclab::{sample_gnp, RngSeed};

fn main() -> mclab::Result<()> {
    let seed = RngSeed::new(42, 0);
    for (n, p) in [(20, 0.3), (1000, 0.01), (100_000, 1e-4)] {
        let g = sample_gnp(n, p, seed)?;
        let expected = p * (n * (n - 1) / 2) as f64;
        println!(
            "G({n}, {p}): m = {} (expected {expected:.0}), connected = {}, components = {}",
            g.m(),
            g.is_connected(),
            g.connected_components().len()
        );
    }

    // same seed, same graph; the kernel only changes how the coins are drawn
    let dense = sample_gnp_with(500, 0.05, seed, Kernel::Dense)?;
    let sparse = sample_gnp_with(500, 0.05, seed, Kernel::Sparse)?;
    println!(
        "n = 500, p = 0.05: dense kernel m = {}, sparse kernel m = {}",
        dense.m(),
        sparse.m()
    );
    assert_eq!(sample_gnp(500, 0.05, seed)?, sparse);
    Ok(())
}
