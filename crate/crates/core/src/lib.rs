//! Monochromatic-connection colorings and sharp thresholds in G(n, p).
//!
//! An edge coloring of a connected graph is an *MC-coloring* when every pair
//! of vertices is joined by a path whose edges share one color; `mc(G)` is
//! the largest number of colors such a coloring can use (0 when G is
//! disconnected). This crate provides:
//!
//! * [`graph`] and [`sample`]: canonical simple graphs, seeded G(n, p)
//!   sampling, and the structural queries the bounds need (connectivity,
//!   degrees, diameter, cut vertices, κ, χ).
//! * [`coloring`], [`bounds`], [`exact`]: the spanning-tree construction,
//!   the MC verifier, the lower/upper bound ladder with certificates, and an
//!   exhaustive oracle for graphs with few edges.
//! * [`threshold`] and [`sweep`]: threshold functions p(n) for the property
//!   `mc(G(n, p)) >= f(n)`, Chernoff tails, and seeded Monte Carlo sweeps
//!   that decide each sample through the bounds.
//! * [`config`], [`io`], [`cli`]: file formats and the `mclab` binary.
//!
//! ```
//! use mclab::{graph::Graph, coloring, bounds};
//!
//! let g = Graph::petersen();
//! let c = coloring::spanning_tree_coloring(&g).unwrap();
//! assert_eq!(c.num_colors(), 15 - 10 + 2);
//! assert!(coloring::verify_mc_coloring(&g, &c).unwrap());
//!
//! let b = bounds::analyze(&g, &Default::default()).unwrap();
//! assert_eq!(b.exact, Some(7));
//! ```

pub mod bounds;
pub mod chromatic;
pub mod cli;
pub mod coloring;
pub mod config;
pub mod dsu;
pub mod error;
pub mod exact;
pub mod flow;
pub mod graph;
pub mod io;
pub mod rng;
pub mod sample;
pub mod sweep;
pub mod threshold;

pub use bounds::{analyze, AnalyzeOptions, Certificate, McBounds};
pub use coloring::{spanning_tree_coloring, verify_mc_coloring, EdgeColoring};
pub use error::{Error, Result};
pub use graph::Graph;
pub use rng::RngSeed;
pub use sample::sample_gnp;
pub use threshold::ThresholdSpec;
