//! Build the spanning-tree MC-coloring and check it, then break it.
//!
//! Run: cargo run --example mc_coloring

use mclab::coloring::first_uncovered_pair;
use mclab::{spanning_tree_coloring, verify_mc_coloring, EdgeColoring, Graph};

fn main() -> mclab::Result<()> {
    let g = Graph::petersen();
    let c = spanning_tree_coloring(&g)?;
    println!("Petersen: n = {}, m = {}, colors = {}", g.n(), g.m(), c.num_colors());
    for (k, class) in c.classes().iter().enumerate() {
        let edges: Vec<_> = class.iter().map(|&i| g.edge(i)).collect();
        println!("  color {k}: {edges:?}");
    }
    assert!(verify_mc_coloring(&g, &c)?);

    // give every edge of C4 its own color: opposite corners lose their path
    let c4 = Graph::cycle(4)?;
    let rainbow = EdgeColoring::from_labels(0..c4.m());
    println!(
        "C4 rainbow coloring: first uncovered pair = {:?}",
        first_uncovered_pair(&c4, &rainbow)?
    );
    Ok(())
}
