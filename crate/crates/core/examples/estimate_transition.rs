//! Locate the 50% crossing of Pr[mc >= f] by bisection on the multiplier.
//!
//! Run: cargo run --release --example estimate_transition

use mclab::sweep::estimate_transition;
use mclab::ThresholdSpec;

fn main() -> mclab::Result<()> {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    let cases = [
        ("dense, f = n ln n", ThresholdSpec::nlogn(1.0)?, (1.0, 5.0)),
        ("sparse, f = n", ThresholdSpec::power(1.0)?, (0.5, 3.0)),
    ];
    for (name, spec, bracket) in cases {
        for n in [500, 2000] {
            let (lo, hi) = estimate_transition(&spec, n, 100, bracket, 0.05, 7, workers)?;
            println!("{name:<18} n = {n:>4}: crossing in [{lo:.3}, {hi:.3}] x p(n)");
        }
    }
    Ok(())
}
