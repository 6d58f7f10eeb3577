//! Monte Carlo sweeps over `(n, multiplier)` grids.
//!
//! Trial `t` of grid row `r` draws from `RngSeed::for_row_trial(master, r, t)`,
//! where rows are numbered n-major, multiplier-minor. Trials may run on
//! several workers; outcomes are collected in trial order and counted, so the
//! report does not depend on scheduling.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::RngSeed;
use crate::sample::sample_gnp;
use crate::threshold::{
    connectivity_prob_limit, implied_a, run_trial_with, threshold_p, Decision, DecisionSource, ThresholdSpec,
    TrialOutcome,
};

/// CSV header for sweep reports.
pub const SWEEP_CSV_HEADER: &str = "n,multiplier,p,trials,yes,no,unknown,frac_yes";
/// CSV header for connectivity reports.
pub const CONNECTIVITY_CSV_HEADER: &str = "n,a,p,trials,connected,frac_connected,limit";

/// Formats `x` in plain decimal notation with `digits` significant digits.
pub fn format_sig(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { "0".into() } else { format!("{x}") };
    }
    let digits = digits.max(1) as i32;
    let mut exp = x.abs().log10().floor() as i32;
    // rounding can carry into the next decade, e.g. 9.9999999995
    let scaled = (x.abs() / 10f64.powi(exp - digits + 1)).round();
    if scaled >= 10f64.powi(digits) {
        exp += 1;
    }
    let decimals = (digits - 1 - exp).max(0) as usize;
    format!("{x:.decimals$}")
}

/// Runs `trials` independent streams of `f` on the given worker count and
/// returns the results in stream order.
pub(crate) fn run_parallel<T, F>(workers: usize, trials: usize, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(usize) -> Result<T> + Sync + Send,
{
    if workers <= 1 {
        return (0..trials).map(f).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("cannot start {workers} workers: {e}")))?;
    pool.install(|| (0..trials).into_par_iter().map(f).collect())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub spec: ThresholdSpec,
    pub n_list: Vec<usize>,
    pub multipliers: Vec<f64>,
    pub trials: usize,
    pub master_seed: u64,
    /// Edge cap for the exhaustive fallback; `None` decides with bounds only.
    pub exact_cap: Option<usize>,
    pub workers: usize,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |field: &str, message: String| Error::Config {
            field: field.into(),
            message,
        };
        if self.trials == 0 {
            return Err(bad("trials", "must be at least 1".into()));
        }
        if self.trials > u32::MAX as usize {
            return Err(bad("trials", format!("must be at most {}", u32::MAX)));
        }
        if self.n_list.is_empty() {
            return Err(bad("n_list", "must not be empty".into()));
        }
        if self.n_list.contains(&0) {
            return Err(bad("n_list", "entries must be positive".into()));
        }
        if self.multipliers.is_empty() {
            return Err(bad("multipliers", "must not be empty".into()));
        }
        if let Some(m) = self.multipliers.iter().find(|m| !(m.is_finite() && **m > 0.0)) {
            return Err(bad("multipliers", format!("entries must be positive, got {m}")));
        }
        if self.workers == 0 {
            return Err(bad("workers", "must be at least 1".into()));
        }
        Ok(())
    }
}

/// Decision-source counts for one row.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceTally {
    pub disconnected: usize,
    pub lower_bound: usize,
    pub upper_bound: usize,
    pub exact_small: usize,
}

impl SourceTally {
    fn add(&mut self, s: DecisionSource) {
        match s {
            DecisionSource::Disconnected => self.disconnected += 1,
            DecisionSource::LowerBound => self.lower_bound += 1,
            DecisionSource::UpperBound => self.upper_bound += 1,
            DecisionSource::ExactSmall => self.exact_small += 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub n: usize,
    pub multiplier: f64,
    pub p: f64,
    pub trials: usize,
    pub yes: usize,
    pub no: usize,
    pub unknown: usize,
    pub target: u64,
    /// `multiplier * p(n)` exceeded 1 and was clamped.
    pub clamped: bool,
    pub sources: SourceTally,
}

impl SweepRow {
    pub fn frac_yes(&self) -> f64 {
        self.yes as f64 / self.trials as f64
    }

    pub fn frac_no(&self) -> f64 {
        self.no as f64 / self.trials as f64
    }

    pub fn frac_unknown(&self) -> f64 {
        self.unknown as f64 / self.trials as f64
    }

    fn tally(n: usize, multiplier: f64, p: f64, target: u64, clamped: bool, outcomes: &[TrialOutcome]) -> Self {
        let mut row = SweepRow {
            n,
            multiplier,
            p,
            trials: outcomes.len(),
            yes: 0,
            no: 0,
            unknown: 0,
            target,
            clamped,
            sources: SourceTally::default(),
        };
        for o in outcomes {
            match o.decision {
                Decision::Yes => row.yes += 1,
                Decision::No => row.no += 1,
                Decision::Unknown => row.unknown += 1,
            }
            if let Some(s) = o.source {
                row.sources.add(s);
            }
        }
        row
    }
}

/// A grid point whose parameters could not be evaluated.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RowFailure {
    pub n: usize,
    pub multiplier: f64,
    pub error: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub rows: Vec<SweepRow>,
    pub failed: Vec<RowFailure>,
}

impl SweepReport {
    /// Completed rows as CSV. Failed rows appear only in [`SweepReport::failed`].
    pub fn to_csv(&self) -> String {
        let mut out = String::from(SWEEP_CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{}",
                r.n,
                format_sig(r.multiplier, 9),
                format_sig(r.p, 9),
                r.trials,
                r.yes,
                r.no,
                r.unknown,
                format_sig(r.frac_yes(), 9)
            );
        }
        out
    }

    pub fn row(&self, n: usize, multiplier: f64) -> Option<&SweepRow> {
        self.rows.iter().find(|r| r.n == n && r.multiplier == multiplier)
    }
}

/// Runs one grid point.
#[allow(clippy::too_many_arguments)]
pub fn run_row(
    spec: &ThresholdSpec,
    n: usize,
    multiplier: f64,
    trials: usize,
    master_seed: u64,
    row_index: u32,
    exact_cap: Option<usize>,
    workers: usize,
) -> Result<SweepRow> {
    let raw = multiplier * threshold_p(spec, n)?;
    let p = raw.clamp(0.0, 1.0);
    let target = spec.target(n)?;
    let outcomes = run_parallel(workers, trials, |t| {
        run_trial_with(
            n,
            p,
            target,
            RngSeed::for_row_trial(master_seed, row_index, t as u32),
            exact_cap,
        )
    })?;
    Ok(SweepRow::tally(n, multiplier, p, target, raw > 1.0, &outcomes))
}

/// Runs every `(n, multiplier)` row. Rows whose parameters fall outside the
/// formula domain are recorded as failures instead of aborting the sweep.
pub fn sweep(config: &SweepConfig) -> Result<SweepReport> {
    config.validate()?;
    let mut rows = Vec::new();
    let mut failed = Vec::new();
    let mut index = 0u32;
    for &n in &config.n_list {
        for &multiplier in &config.multipliers {
            match run_row(
                &config.spec,
                n,
                multiplier,
                config.trials,
                config.master_seed,
                index,
                config.exact_cap,
                config.workers,
            ) {
                Ok(row) => rows.push(row),
                Err(e @ (Error::Io(_) | Error::InvalidArgument(_))) => return Err(e),
                Err(e) => failed.push(RowFailure {
                    n,
                    multiplier,
                    error: e.to_string(),
                }),
            }
            index += 1;
        }
    }
    Ok(SweepReport {
        config: config.clone(),
        rows,
        failed,
    })
}

/// Bisects on the multiplier until an interval no wider than `tolerance`
/// brackets the point where `frac_yes` crosses 1/2.
///
/// Assumes `frac_yes` is non-decreasing in the multiplier, which holds in
/// expectation because `mc >= f` is a monotone property. Every evaluation
/// reuses the same `trials` streams (row index 0), so neighbouring
/// multipliers are compared on common random numbers. If `tolerance` already
/// covers the bracket it is returned unchanged without sampling.
pub fn estimate_transition(
    spec: &ThresholdSpec,
    n: usize,
    trials: usize,
    bracket: (f64, f64),
    tolerance: f64,
    master_seed: u64,
    workers: usize,
) -> Result<(f64, f64)> {
    let (mut lo, mut hi) = bracket;
    if !(lo.is_finite() && hi.is_finite() && lo > 0.0 && lo < hi) {
        return Err(Error::InvalidArgument(format!(
            "bracket must satisfy 0 < low < high, got [{lo}, {hi}]"
        )));
    }
    if tolerance.is_nan() || tolerance <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tolerance}"
        )));
    }
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    if tolerance >= hi - lo {
        return Ok((lo, hi));
    }
    let frac =
        |mult: f64| -> Result<f64> { Ok(run_row(spec, n, mult, trials, master_seed, 0, None, workers)?.frac_yes()) };
    let (f_lo, f_hi) = (frac(lo)?, frac(hi)?);
    if !(f_lo < 0.5 && f_hi >= 0.5) {
        return Err(Error::NonStraddlingBracket {
            low_frac: f_lo,
            high_frac: f_hi,
        });
    }
    while hi - lo > tolerance {
        let mid = 0.5 * (lo + hi);
        if frac(mid)? >= 0.5 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok((lo, hi))
}

/// Empirical connectivity at `p = (ln n + a) / n` against the limit
/// `exp(-exp(-a))`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConnectivityReport {
    pub n: usize,
    pub a: f64,
    pub p: f64,
    pub trials: usize,
    pub connected: usize,
    pub limit: f64,
    pub master_seed: u64,
}

impl ConnectivityReport {
    pub fn frac_connected(&self) -> f64 {
        self.connected as f64 / self.trials as f64
    }

    pub fn to_csv(&self) -> String {
        format!(
            "{CONNECTIVITY_CSV_HEADER}\n{},{},{},{},{},{},{}\n",
            self.n,
            format_sig(self.a, 9),
            format_sig(self.p, 9),
            self.trials,
            self.connected,
            format_sig(self.frac_connected(), 9),
            format_sig(self.limit, 9)
        )
    }
}

/// Samples `trials` graphs at `p = (ln n + a) / n` and counts connected ones.
pub fn connectivity_experiment(
    n: usize,
    a: f64,
    trials: usize,
    master_seed: u64,
    workers: usize,
) -> Result<ConnectivityReport> {
    if n < 2 || trials == 0 {
        return Err(Error::InvalidArgument("need n >= 2 and trials >= 1".into()));
    }
    let limit = connectivity_prob_limit(a)?;
    let x = n as f64;
    let p = ((x.ln() + a) / x).clamp(0.0, 1.0);
    debug_assert!((implied_a(n, p) - a).abs() < 1e-6 || p == 0.0 || p == 1.0);
    let flags = run_parallel(workers, trials, |t| {
        Ok(sample_gnp(n, p, RngSeed::for_row_trial(master_seed, 0, t as u32))?.is_connected())
    })?;
    Ok(ConnectivityReport {
        n,
        a,
        p,
        trials,
        connected: flags.into_iter().filter(|&c| c).count(),
        limit,
        master_seed,
    })
}
