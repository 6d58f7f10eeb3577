//! Empirical connectivity of G(n, (ln n + a)/n) against exp(-exp(-a)).
//!
//! Run: cargo run --release --example connectivity_threshold

use mclab::sweep::connectivity_experiment;

fn main() -> mclab::Result<()> {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    println!("{:>6} {:>10} {:>10}", "a", "empirical", "limit");
    for a in [-2.0, -1.0, 0.0, 1.0, 2.0] {
        let r = connectivity_experiment(5000, a, 400, 1, workers)?;
        println!("{a:>6} {:>10.4} {:>10.4}", r.frac_connected(), r.limit);
    }
    Ok(())
}
