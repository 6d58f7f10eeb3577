//! Lower and upper bounds on mc(G), with the certificates that produced them.
//!
//! Run: cargo run --example bounds_ladder

use mclab::{analyze, AnalyzeOptions, Graph};

fn main() -> mclab::Result<()> {
    let opts = AnalyzeOptions::default();
    let k4_minus = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])?;
    let graphs = [
        ("path P5", Graph::path(5)),
        ("cycle C5", Graph::cycle(5)?),
        ("K4 minus an edge", k4_minus),
        ("complete K6", Graph::complete(6)),
        ("Petersen", Graph::petersen()),
        ("two disjoint edges", Graph::from_edges(4, [(0, 1), (2, 3)])?),
    ];
    println!(
        "{:<20} {:>5} {:>5} {:>6}  certificates",
        "graph", "lower", "upper", "exact"
    );
    for (name, g) in &graphs {
        let b = analyze(g, &opts)?;
        let exact = b.exact.map_or("?".to_string(), |e| e.to_string());
        let tags: Vec<_> = b.certificates.iter().map(|c| c.tag()).collect();
        println!(
            "{name:<20} {:>5} {:>5} {exact:>6}  {}",
            b.lower,
            b.upper,
            tags.join(" ")
        );
    }
    Ok(())
}
