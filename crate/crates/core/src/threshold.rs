//! Threshold functions for `mc(G(n, p)) >= f(n)`, Chernoff tails, the
//! connectivity limit, and the bound-based trial decider.
//!
//! All logarithms are natural.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bounds::pair_count;
use crate::error::{Error, Result};
use crate::exact::exact_mc_small;
use crate::graph::Graph;
use crate::rng::RngSeed;
use crate::sample::sample_gnp;

/// Smallest n accepted by [`threshold_p`]; exactly the n with `ln ln n >= 1`.
pub const MIN_FORMULA_N: usize = 16;

/// The target function f(n).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum FFamily {
    /// f(n) = c.
    Constant(f64),
    /// f(n) = n^alpha, 0 < alpha < 2.
    Power(f64),
    /// f(n) = ell * n * ln n.
    NLogN(f64),
    /// Tabulated values; n outside the table is an error.
    Custom(BTreeMap<usize, f64>),
}

impl FFamily {
    pub fn eval(&self, n: usize) -> Result<f64> {
        let x = n as f64;
        match self {
            FFamily::Constant(c) => Ok(*c),
            FFamily::Power(alpha) => Ok(x.powf(*alpha)),
            FFamily::NLogN(ell) => Ok(ell * x * x.ln()),
            FFamily::Custom(table) => table
                .get(&n)
                .copied()
                .ok_or_else(|| Error::InvalidSpec(format!("custom f has no value at n = {n}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Regime {
    /// `ell * n ln n <= f(n) < n(n-1)/2`.
    Dense { ell: f64 },
    /// `f(n) = o(n ln n)` or constant.
    Sparse,
}

impl Regime {
    /// Default upper multiplier: 5 when `ell >= 1`, `5 / ell` below that.
    /// The sparse regime uses 5 as well.
    pub fn upper_multiplier(&self) -> f64 {
        match *self {
            Regime::Dense { ell } if ell < 1.0 => 5.0 / ell,
            _ => 5.0,
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Regime::Dense { ell } => write!(f, "DENSE(ell={ell})"),
            Regime::Sparse => f.write_str("SPARSE"),
        }
    }
}

/// f(n) together with its declared regime.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThresholdSpec {
    family: FFamily,
    regime: Regime,
}

fn positive_finite(name: &str, x: f64) -> Result<()> {
    if x.is_finite() && x > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidSpec(format!(
            "{name} must be positive and finite, got {x}"
        )))
    }
}

impl ThresholdSpec {
    /// Pairs a family with an explicit regime, rejecting combinations whose
    /// asymptotics contradict the regime.
    pub fn new(family: FFamily, regime: Regime) -> Result<Self> {
        if let Regime::Dense { ell } = regime {
            positive_finite("ell", ell)?;
        }
        match (&family, regime) {
            (FFamily::Constant(c), Regime::Sparse) => positive_finite("constant", *c)?,
            (FFamily::Constant(_), Regime::Dense { .. }) => {
                return Err(Error::Unsupported("a constant f(n) is never >= ell n ln n".into()));
            }
            (FFamily::Power(alpha), regime) => {
                if !(alpha.is_finite() && *alpha > 0.0 && *alpha < 2.0) {
                    return Err(Error::InvalidSpec(format!(
                        "power exponent must lie in (0, 2), got {alpha}"
                    )));
                }
                match regime {
                    Regime::Sparse if *alpha > 1.0 => {
                        return Err(Error::Unsupported(format!("n^{alpha} is not o(n ln n)")));
                    }
                    Regime::Dense { .. } if *alpha <= 1.0 => {
                        return Err(Error::Unsupported(format!(
                            "n^{alpha} is never >= ell n ln n for large n"
                        )));
                    }
                    _ => {}
                }
            }
            (FFamily::NLogN(ell), regime) => {
                positive_finite("ell", *ell)?;
                match regime {
                    Regime::Sparse => {
                        return Err(Error::Unsupported("ell n ln n is not o(n ln n)".into()));
                    }
                    Regime::Dense { ell: declared } if declared > *ell => {
                        return Err(Error::InvalidSpec(format!(
                            "declared ell {declared} exceeds the family's ell {ell}"
                        )));
                    }
                    _ => {}
                }
            }
            (FFamily::Custom(table), _) => {
                if table.is_empty() {
                    return Err(Error::InvalidSpec("custom table is empty".into()));
                }
                if table.values().any(|v| !v.is_finite()) {
                    return Err(Error::InvalidSpec("custom table has a non-finite value".into()));
                }
            }
        }
        Ok(Self { family, regime })
    }

    pub fn constant(c: f64) -> Result<Self> {
        Self::new(FFamily::Constant(c), Regime::Sparse)
    }

    /// `n^alpha`; only `alpha <= 1` classifies automatically (as sparse).
    /// Larger exponents need [`ThresholdSpec::new`] with an explicit dense `ell`.
    pub fn power(alpha: f64) -> Result<Self> {
        if alpha > 1.0 && alpha < 2.0 {
            return Err(Error::Unsupported(format!(
                "n^{alpha} needs an explicitly declared dense regime"
            )));
        }
        Self::new(FFamily::Power(alpha), Regime::Sparse)
    }

    pub fn nlogn(ell: f64) -> Result<Self> {
        Self::new(FFamily::NLogN(ell), Regime::Dense { ell })
    }

    pub fn custom(table: BTreeMap<usize, f64>, regime: Regime) -> Result<Self> {
        Self::new(FFamily::Custom(table), regime)
    }

    pub fn family(&self) -> &FFamily {
        &self.family
    }

    pub fn regime(&self) -> Regime {
        self.regime
    }

    /// f(n), checked against `1 <= f(n) < n(n-1)/2` and, for the dense
    /// regime, `f(n) >= ell n ln n`.
    pub fn f(&self, n: usize) -> Result<f64> {
        let v = self.family.eval(n)?;
        let pairs = pair_count(n) as f64;
        if !(v >= 1.0 && v < pairs) {
            return Err(Error::InvalidSpec(format!("f({n}) = {v} outside [1, {pairs})")));
        }
        if let Regime::Dense { ell } = self.regime {
            let floor = ell * n as f64 * (n as f64).ln();
            if v < floor * (1.0 - 1e-12) {
                return Err(Error::InvalidSpec(format!(
                    "f({n}) = {v} below ell n ln n = {floor} for the dense regime"
                )));
            }
        }
        Ok(v)
    }

    /// The integer target `ceil(f(n))`, since mc is an integer.
    pub fn target(&self, n: usize) -> Result<u64> {
        Ok(self.f(n)?.ceil() as u64)
    }
}

/// The sharp threshold p(n): `(f(n) + n ln ln n) / n^2` in the dense regime,
/// `ln n / n` in the sparse regime, clamped to `[0, 1]`.
pub fn threshold_p(spec: &ThresholdSpec, n: usize) -> Result<f64> {
    if n < MIN_FORMULA_N {
        return Err(Error::FormulaDomain(n));
    }
    let f = spec.f(n)?;
    let x = n as f64;
    let p = match spec.regime() {
        Regime::Dense { .. } => (f + x * x.ln().ln()) / (x * x),
        Regime::Sparse => x.ln() / x,
    };
    Ok(p.clamp(0.0, 1.0))
}

/// `exp(-delta^2 mu / 2)`, bounding `Pr[X < (1 - delta) mu]` for binomial X.
pub fn chernoff_lower_tail(mu: f64, delta: f64) -> Result<f64> {
    if !(mu.is_finite() && mu > 0.0) {
        return Err(Error::InvalidArgument(format!("mu must be positive, got {mu}")));
    }
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::InvalidArgument(format!(
            "lower-tail delta must lie in (0, 1), got {delta}"
        )));
    }
    Ok((-delta * delta * mu / 2.0).exp())
}

/// `exp(-delta^2 mu / (2 + delta))`, bounding `Pr[X > (1 + delta) mu]`.
pub fn chernoff_upper_tail(mu: f64, delta: f64) -> Result<f64> {
    if !(mu.is_finite() && mu > 0.0) {
        return Err(Error::InvalidArgument(format!("mu must be positive, got {mu}")));
    }
    if !(delta.is_finite() && delta > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "upper-tail delta must be positive, got {delta}"
        )));
    }
    Ok((-delta * delta * mu / (2.0 + delta)).exp())
}

/// Limit of `Pr[G(n, (ln n + a)/n) connected]`: `exp(-exp(-a))`.
pub fn connectivity_prob_limit(a: f64) -> Result<f64> {
    if !a.is_finite() {
        return Err(Error::InvalidArgument(format!("a must be finite, got {a}")));
    }
    Ok((-(-a).exp()).exp())
}

/// The `a` with `p = (ln n + a) / n`.
pub fn implied_a(n: usize, p: f64) -> f64 {
    let x = n as f64;
    x * p - x.ln()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Decision {
    Yes,
    No,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum DecisionSource {
    Disconnected,
    LowerBound,
    UpperBound,
    ExactSmall,
}

/// One decided sample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialOutcome {
    pub connected: bool,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub target: u64,
    pub decision: Decision,
    /// `None` exactly when the decision is `Unknown`.
    pub source: Option<DecisionSource>,
}

/// Decides `mc(g) >= target` using, in order: disconnection (mc = 0), the
/// spanning-tree lower bound `m - n + 2`, the min-degree upper bound
/// `m - n + δ + 1`, and, when `exact_cap` admits `m`, the exhaustive search.
pub fn decide_mc_at_least(g: &Graph, target: u64, exact_cap: Option<usize>) -> TrialOutcome {
    let (n, m, delta) = (g.n(), g.m(), g.min_degree());
    let connected = g.is_connected();
    let mut out = TrialOutcome {
        connected,
        n,
        m,
        delta,
        target,
        decision: Decision::Unknown,
        source: None,
    };
    let mut settle = |d, s| {
        out.decision = d;
        out.source = Some(s);
    };
    let f = target as i64;
    let (ni, mi, di) = (n as i64, m as i64, delta as i64);
    let lower = if n <= 1 { 0 } else { mi - ni + 2 };
    if target == 0 {
        settle(Decision::Yes, DecisionSource::LowerBound);
    } else if !connected {
        settle(Decision::No, DecisionSource::Disconnected);
    } else if lower >= f {
        settle(Decision::Yes, DecisionSource::LowerBound);
    } else if mi - ni + di + 1 < f {
        settle(Decision::No, DecisionSource::UpperBound);
    } else if let Some(cap) = exact_cap.filter(|&cap| m <= cap) {
        let mc = exact_mc_small(g, cap).expect("m within cap") as i64;
        let d = if mc >= f { Decision::Yes } else { Decision::No };
        settle(d, DecisionSource::ExactSmall);
    }
    out
}

/// Samples `G(n, p)` from `seed` and decides `mc >= ceil(f(n))` with bounds only.
pub fn run_trial(n: usize, p: f64, spec: &ThresholdSpec, seed: RngSeed) -> Result<TrialOutcome> {
    run_trial_with(n, p, spec.target(n)?, seed, None)
}

pub fn run_trial_with(n: usize, p: f64, target: u64, seed: RngSeed, exact_cap: Option<usize>) -> Result<TrialOutcome> {
    let g = sample_gnp(n, p, seed)?;
    Ok(decide_mc_at_least(&g, target, exact_cap))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a - b).abs() <= rel * b.abs()
    }

    #[test]
    fn threshold_examples() {
        // (1000 ln 1000 + 1000 ln ln 1000) / 1000^2
        let p = threshold_p(&ThresholdSpec::nlogn(1.0).unwrap(), 1000).unwrap();
        assert!(close(p, 0.008_840_400_012_898, 1e-9), "{p}");
        let p = threshold_p(&ThresholdSpec::power(0.5).unwrap(), 10_000).unwrap();
        assert!(close(p, 0.000_921_034_037_2, 1e-9), "{p}");
        let p = threshold_p(&ThresholdSpec::constant(1.0).unwrap(), 100).unwrap();
        assert!(close(p, 0.046_051_701_86, 1e-9), "{p}");
    }

    #[test]
    fn threshold_domain() {
        let spec = ThresholdSpec::constant(1.0).unwrap();
        assert!(matches!(threshold_p(&spec, 15), Err(Error::FormulaDomain(15))));
        assert!(threshold_p(&spec, 16).is_ok());
        assert!(matches!(
            threshold_p(&ThresholdSpec::nlogn(1.0).unwrap(), 10),
            Err(Error::FormulaDomain(10))
        ));
    }

    #[test]
    fn spec_validation() {
        assert!(ThresholdSpec::power(1.5).is_err());
        assert!(ThresholdSpec::new(FFamily::Power(1.5), Regime::Dense { ell: 0.1 }).is_ok());
        assert!(ThresholdSpec::new(FFamily::Power(1.0), Regime::Dense { ell: 0.1 }).is_err());
        assert!(ThresholdSpec::new(FFamily::Power(2.0), Regime::Dense { ell: 0.1 }).is_err());
        assert!(ThresholdSpec::new(FFamily::NLogN(1.0), Regime::Sparse).is_err());
        assert!(ThresholdSpec::new(FFamily::Constant(3.0), Regime::Dense { ell: 1.0 }).is_err());
        assert!(ThresholdSpec::nlogn(0.0).is_err());
        assert!(ThresholdSpec::custom(BTreeMap::new(), Regime::Sparse).is_err());

        let spec = ThresholdSpec::constant(0.5).unwrap();
        assert!(spec.f(100).is_err());
        // f(n) must stay below C(n, 2)
        let spec = ThresholdSpec::nlogn(10.0).unwrap();
        assert!(spec.f(20).is_err());
        // dense tables must respect ell n ln n
        let table = BTreeMap::from([(100, 50.0), (1000, 1e5)]);
        let spec = ThresholdSpec::custom(table, Regime::Dense { ell: 1.0 }).unwrap();
        assert!(spec.f(100).is_err());
        assert!(spec.f(1000).is_ok());
        assert!(spec.f(500).is_err());
    }

    #[test]
    fn target_rounds_up() {
        let spec = ThresholdSpec::power(0.5).unwrap();
        assert_eq!(spec.target(10).unwrap(), 4);
        assert_eq!(spec.target(16).unwrap(), 4);
    }

    #[test]
    fn upper_multiplier_defaults() {
        assert_eq!(Regime::Dense { ell: 1.0 }.upper_multiplier(), 5.0);
        assert_eq!(Regime::Dense { ell: 3.0 }.upper_multiplier(), 5.0);
        assert_eq!(Regime::Dense { ell: 0.5 }.upper_multiplier(), 10.0);
    }

    #[test]
    fn chernoff_examples() {
        assert!(close(chernoff_lower_tail(8.0, 0.5).unwrap(), (-1.0f64).exp(), 1e-15));
        assert!(close(
            chernoff_upper_tail(10.0, 1.0).unwrap(),
            0.035_673_993_347_252_4,
            1e-12
        ));
        assert!(chernoff_lower_tail(8.0, 1e-12).unwrap() > 1.0 - 1e-12);
        assert!(chernoff_lower_tail(8.0, 1.0).is_err());
        assert!(chernoff_lower_tail(8.0, 0.0).is_err());
        assert!(chernoff_upper_tail(8.0, 0.0).is_err());
        assert!(chernoff_upper_tail(-1.0, 0.5).is_err());
    }

    #[test]
    fn connectivity_limit_examples() {
        assert!(close(
            connectivity_prob_limit(0.0).unwrap(),
            0.367_879_441_171_442_3,
            1e-15
        ));
        assert!(connectivity_prob_limit(50.0).unwrap() > 1.0 - 1e-12);
        assert!(connectivity_prob_limit(-50.0).unwrap() < 1e-20);
        assert!(connectivity_prob_limit(f64::NAN).is_err());
        assert!(connectivity_prob_limit(f64::INFINITY).is_err());
    }

    fn circulant_20() -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for v in 0..20 {
            edges.push((v, (v + 1) % 20));
            edges.push((v, (v + 2) % 20));
        }
        for v in 0..10 {
            edges.push((v, v + 10));
        }
        edges
    }

    #[test]
    fn decide_examples() {
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let out = decide_mc_at_least(&two, 1, None);
        assert_eq!(
            (out.decision, out.source),
            (Decision::No, Some(DecisionSource::Disconnected))
        );

        // 5-regular, n = 20, m = 50
        let regular = Graph::from_edges(20, circulant_20()).unwrap();
        assert_eq!((regular.n(), regular.m(), regular.min_degree()), (20, 50, 5));
        let out = decide_mc_at_least(&regular, 30, None);
        assert_eq!(
            (out.decision, out.source),
            (Decision::Yes, Some(DecisionSource::LowerBound))
        );
        let out = decide_mc_at_least(&regular, 34, None);
        assert_eq!((out.decision, out.source), (Decision::Unknown, None));

        // same size with δ = 3
        let mut edges: Vec<_> = circulant_20()
            .into_iter()
            .filter(|&e| e != (0, 1) && e != (0, 2))
            .collect();
        edges.extend([(1, 5), (2, 7)]);
        let low = Graph::from_edges(20, edges).unwrap();
        assert_eq!((low.m(), low.min_degree()), (50, 3));
        let out = decide_mc_at_least(&low, 40, None);
        assert_eq!(
            (out.decision, out.source),
            (Decision::No, Some(DecisionSource::UpperBound))
        );
    }

    #[test]
    fn decide_uses_exact_search_when_allowed() {
        // K4 minus an edge: lower 3, min-degree upper 4, mc = 4
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(decide_mc_at_least(&g, 4, None).decision, Decision::Unknown);
        let out = decide_mc_at_least(&g, 4, Some(12));
        assert_eq!(
            (out.decision, out.source),
            (Decision::Yes, Some(DecisionSource::ExactSmall))
        );
        assert_eq!(decide_mc_at_least(&g, 4, Some(3)).decision, Decision::Unknown);
    }

    #[test]
    fn run_trial_examples() {
        let spec = ThresholdSpec::nlogn(1.0).unwrap();
        // f(16) = 44.4, K_16 has lower bound 106
        let out = run_trial(16, 1.0, &spec, RngSeed::new(3, 0)).unwrap();
        assert_eq!(out.decision, Decision::Yes);

        let spec = ThresholdSpec::constant(1.0).unwrap();
        let out = run_trial(100, 0.0, &spec, RngSeed::new(3, 0)).unwrap();
        assert_eq!(out.decision, Decision::No);
    }
}
