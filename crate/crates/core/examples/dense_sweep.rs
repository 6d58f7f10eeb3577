//! A Monte Carlo sweep across the dense threshold for f(n) = n ln n.
//!
//! Run: cargo run --release --example dense_sweep

use mclab::config::default_multipliers;
use mclab::sweep::{sweep, SweepConfig};
use mclab::ThresholdSpec;

fn main() -> mclab::Result<()> {
    let spec = ThresholdSpec::nlogn(1.0)?;
    let mut multipliers = default_multipliers(spec.regime());
    multipliers.insert(2, 1.5);
    let config = SweepConfig {
        spec,
        n_list: vec![500, 2000],
        multipliers,
        trials: 100,
        master_seed: 2024,
        exact_cap: None,
        workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    let report = sweep(&config)?;
    print!("{}", report.to_csv());
    println!();
    for r in &report.rows {
        let s = r.sources;
        println!(
            "n = {:>4} x{:<3}: target {:>6}, sources: lower {:>3}, upper {:>3}, disconnected {:>3}",
            r.n, r.multiplier, r.target, s.lower_bound, s.upper_bound, s.disconnected
        );
    }
    Ok(())
}
