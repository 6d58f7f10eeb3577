//! Threshold functions and the Chernoff tails used in the proofs.
//!
//! Run: cargo run --example threshold_formulas

use mclab::threshold::{chernoff_lower_tail, chernoff_upper_tail, threshold_p, Regime};
use mclab::ThresholdSpec;

fn main() -> mclab::Result<()> {
    let specs = [
        ("f = n ln n", ThresholdSpec::nlogn(1.0)?),
        ("f = 2 n ln n", ThresholdSpec::nlogn(2.0)?),
        ("f = sqrt n", ThresholdSpec::power(0.5)?),
        ("f = 3", ThresholdSpec::constant(3.0)?),
    ];
    for (name, spec) in &specs {
        print!("{name:<14}");
        for n in [100, 1000, 10_000] {
            print!("  p({n}) = {:.6e}", threshold_p(spec, n)?);
        }
        let c = spec.regime().upper_multiplier();
        let tag = if matches!(spec.regime(), Regime::Sparse) {
            "sparse"
        } else {
            "dense"
        };
        println!("  [{tag}, C = {c}]");
    }
    println!(
        "n = 10 is below the formula domain: {}",
        threshold_p(&specs[0].1, 10).unwrap_err()
    );

    println!();
    for (mu, delta) in [(8.0, 0.5), (20.0, 0.3), (50.0, 0.2), (10.0, 1.0)] {
        // the lower tail needs delta < 1
        let lower = match chernoff_lower_tail(mu, delta) {
            Ok(b) => format!("{b:.6}"),
            Err(_) => "n/a".into(),
        };
        println!(
            "mu = {mu:>4}, delta = {delta}: Pr[X < (1-d)mu] <= {lower}, Pr[X > (1+d)mu] <= {:.6}",
            chernoff_upper_tail(mu, delta)?
        );
    }
    Ok(())
}
