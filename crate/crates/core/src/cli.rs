//! The `mclab` command line.
//!
//! Exit codes: 0 success, 1 semantic negative (an invalid coloring), 2 usage,
//! input, or configuration error.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::bounds::{analyze, AnalyzeOptions, McBounds};
use crate::chromatic::DEFAULT_CHI_CAP;
use crate::coloring::{first_uncovered_pair, spanning_tree_coloring};
use crate::config::{build_spec, ExperimentConfig};
use crate::error::{Error, Result};
use crate::exact::DEFAULT_EXACT_CAP;
use crate::graph::Graph;
use crate::io::{format_coloring, format_edge_list, read_coloring, read_edge_list};
use crate::rng::RngSeed;
use crate::sample::sample_gnp;
use crate::sweep::{format_sig, sweep, SweepReport};
use crate::threshold::{connectivity_prob_limit, implied_a, threshold_p, Regime};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "mclab",
    version,
    about = "Monochromatic-connection colorings and G(n,p) threshold experiments"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample G(n, p) and write it as an edge list.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        /// Master seed (required; there is no clock-based default).
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        stream: u64,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print certified bounds on mc(G) for an edge-list file.
    Analyze {
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_EXACT_CAP)]
        exact_cap: usize,
        #[arg(long, default_value_t = DEFAULT_CHI_CAP)]
        chi_cap: usize,
        /// Never run the exhaustive search.
        #[arg(long)]
        no_search: bool,
    },
    /// Check that a coloring file is an MC-coloring of a graph.
    Verify { graph: PathBuf, coloring: PathBuf },
    /// Write the spanning-tree MC-coloring (m - n + 2 colors) of a graph.
    Color {
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a Monte Carlo sweep described by a config file.
    Sweep {
        config: PathBuf,
        /// Worker threads; overrides the config file.
        #[arg(long, env = "MCLAB_WORKERS")]
        workers: Option<usize>,
        /// CSV output path; overrides the config file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Evaluate the threshold function p(n).
    Threshold {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        n: usize,
        /// Report the connectivity limit at multiplier * p(n) (sparse only).
        #[arg(long, default_value_t = 1.0)]
        multiplier: f64,
    },
}

#[derive(Debug, Args)]
pub struct SpecArgs {
    /// constant | power | nlogn | custom
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub param: Option<f64>,
    /// n:value pairs for the custom family
    #[arg(long)]
    pub table: Option<String>,
    /// dense | sparse
    #[arg(long)]
    pub regime: Option<String>,
    #[arg(long)]
    pub ell: Option<f64>,
}

/// Runs a parsed command, writing normal output to `out` and diagnostics to
/// `err`; returns the process exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Gen {
            n,
            p,
            seed,
            stream,
            out: path,
        } => cmd_gen(n, p, RngSeed::new(seed, stream), path.as_deref(), out),
        Command::Analyze {
            graph,
            exact_cap,
            chi_cap,
            no_search,
        } => {
            let opts = AnalyzeOptions {
                chi_cap,
                exact_cap,
                search: !no_search,
            };
            cmd_analyze(&graph, &opts, out)
        }
        Command::Verify { graph, coloring } => cmd_verify(&graph, &coloring, out),
        Command::Color { graph, out: path } => cmd_color(&graph, path.as_deref(), out),
        Command::Sweep {
            config,
            workers,
            output,
        } => cmd_sweep(&config, workers, output, out),
        Command::Threshold { spec, n, multiplier } => cmd_threshold(&spec, n, multiplier, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn emit(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| {
            Error::Io(std::io::Error::new(
                e.kind(),
                format!("cannot write {}: {e}", p.display()),
            ))
        })?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

pub fn cmd_gen(n: usize, p: f64, seed: RngSeed, path: Option<&Path>, out: &mut dyn Write) -> Result<i32> {
    let g = sample_gnp(n, p, seed)?;
    emit(path, &format_edge_list(&g), out)?;
    Ok(EXIT_OK)
}

/// `key: value` lines for a bounds record.
pub fn format_bounds(g: &Graph, b: &McBounds) -> String {
    let exact = b.exact.map_or_else(|| "unknown".to_string(), |e| e.to_string());
    let tags: Vec<&str> = b.certificates.iter().map(|c| c.tag()).collect();
    format!(
        "n: {}\nm: {}\nconnected: {}\nlower: {}\nupper: {}\nexact: {}\ncertificates: {}\n",
        g.n(),
        g.m(),
        g.is_connected(),
        b.lower,
        b.upper,
        exact,
        tags.join(",")
    )
}

pub fn cmd_analyze(graph: &Path, opts: &AnalyzeOptions, out: &mut dyn Write) -> Result<i32> {
    let g = read_edge_list(graph)?;
    let b = analyze(&g, opts)?;
    out.write_all(format_bounds(&g, &b).as_bytes())?;
    Ok(EXIT_OK)
}

pub fn cmd_verify(graph: &Path, coloring: &Path, out: &mut dyn Write) -> Result<i32> {
    let g = read_edge_list(graph)?;
    let c = read_coloring(coloring)?.into_coloring(&g)?;
    match first_uncovered_pair(&g, &c)? {
        None => {
            writeln!(out, "valid: {} colors", c.num_colors())?;
            Ok(EXIT_OK)
        }
        Some((u, v)) => {
            writeln!(out, "invalid: no monochromatic path between {u} and {v}")?;
            Ok(EXIT_NEGATIVE)
        }
    }
}

pub fn cmd_color(graph: &Path, path: Option<&Path>, out: &mut dyn Write) -> Result<i32> {
    let g = read_edge_list(graph)?;
    let c = spanning_tree_coloring(&g)?;
    emit(path, &format_coloring(&c), out)?;
    Ok(EXIT_OK)
}

/// `<output>.json` next to the CSV.
pub fn sidecar_path(csv: &Path) -> PathBuf {
    csv.with_extension("json")
}

#[derive(Serialize)]
struct Sidecar<'a> {
    master_seed: u64,
    config: String,
    csv: String,
    report: &'a SweepReport,
}

pub fn cmd_sweep(
    config_path: &Path,
    workers: Option<usize>,
    output: Option<PathBuf>,
    out: &mut dyn Write,
) -> Result<i32> {
    let mut config = ExperimentConfig::from_path(config_path)?;
    if let Some(w) = workers {
        config.sweep.workers = w;
    }
    if let Some(o) = output {
        config.output = o;
    }
    config.sweep.validate()?;
    let report = sweep(&config.sweep)?;
    let csv = report.to_csv();
    emit(Some(&config.output), &csv, out)?;
    let sidecar = Sidecar {
        master_seed: config.sweep.master_seed,
        config: config.to_text(),
        csv: config.output.display().to_string(),
        report: &report,
    };
    let json = serde_json::to_string_pretty(&sidecar).expect("plain data serializes");
    let json_path = sidecar_path(&config.output);
    emit(Some(&json_path), &(json + "\n"), out)?;
    writeln!(
        out,
        "wrote {} rows to {} ({} failed, details in {})",
        report.rows.len(),
        config.output.display(),
        report.failed.len(),
        json_path.display()
    )?;
    Ok(EXIT_OK)
}

pub fn cmd_threshold(spec: &SpecArgs, n: usize, multiplier: f64, out: &mut dyn Write) -> Result<i32> {
    let spec = build_spec(
        &spec.family,
        spec.param,
        spec.table.as_deref(),
        spec.regime.as_deref(),
        spec.ell,
    )?;
    if !(multiplier.is_finite() && multiplier > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "multiplier must be positive, got {multiplier}"
        )));
    }
    let p = threshold_p(&spec, n)?;
    writeln!(out, "regime: {}", spec.regime())?;
    writeln!(out, "f: {}", format_sig(spec.f(n)?, 9))?;
    writeln!(out, "p: {}", format_sig(p, 6))?;
    if spec.regime() == Regime::Sparse {
        let scaled = (multiplier * p).clamp(0.0, 1.0);
        let a = implied_a(n, scaled);
        writeln!(out, "a: {}", format_sig(a, 6))?;
        writeln!(
            out,
            "connectivity_limit: {}",
            format_sig(connectivity_prob_limit(a)?, 6)
        )?;
    }
    Ok(EXIT_OK)
}
