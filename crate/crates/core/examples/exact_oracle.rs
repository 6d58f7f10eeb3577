//! Exhaustive mc(G) over edge partitions, with and without pruning.
//!
//! Run: cargo run --release --example exact_oracle

use std::time::Instant;

use mclab::exact::exact_mc_search;
use mclab::Graph;

fn main() -> mclab::Result<()> {
    let wheel = Graph::from_edges(6, (1..6).map(|v| (0, v)).chain((1..6).map(|v| (v, v % 5 + 1))))?;
    for (name, g) in [
        ("K4", Graph::complete(4)),
        ("wheel W5", wheel),
        ("K5", Graph::complete(5)),
    ] {
        for prune in [true, false] {
            let start = Instant::now();
            let r = exact_mc_search(&g, 12, prune)?;
            println!(
                "{name:<9} m = {:>2}  prune = {prune:<5}  mc = {:>2}  ({:.1} ms)",
                g.m(),
                r.value,
                start.elapsed().as_secs_f64() * 1e3
            );
            if let (true, Some(w)) = (prune, &r.witness) {
                println!("          witness labels {:?}", w.labels());
            }
        }
    }
    match exact_mc_search(&Graph::complete(6), 12, true) {
        Err(e) => println!("K6: {e}"),
        Ok(r) => println!("K6: {}", r.value),
    }
    Ok(())
}
