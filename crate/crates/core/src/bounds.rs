//! Lower and upper bounds on mc(G), exactness certificates, and [`analyze`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::chromatic::DEFAULT_CHI_CAP;
use crate::error::{Error, Result};
use crate::exact::{exact_mc_small, DEFAULT_EXACT_CAP};
use crate::graph::{Diameter, Graph};

/// Which argument produced a bound or an exact value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Certificate {
    /// `m - n + 2` from a spanning tree in one color.
    TreeLower,
    /// `m - n + δ + 1`.
    MinDegreeUpper,
    /// `m - n + χ`.
    ChromaticUpper,
    /// `m - n + κ + 1`, as G is not (κ+1)-connected.
    ConnectivityUpper,
    /// Complement is 4-connected.
    CyExactA,
    /// Triangle-free.
    CyExactB,
    /// `Δ < n - (2m - 3(n-1)) / (n-3)`.
    CyExactC,
    /// Diameter at least 3.
    CyExactD,
    /// Has a cut vertex.
    CyExactE,
    /// `K_n`, where mc is `C(n, 2)`.
    CompleteGraph,
    /// mc is 0 by convention.
    Disconnected,
    /// Value from the exhaustive partition search.
    ExactSearch,
}

impl Certificate {
    pub fn tag(self) -> &'static str {
        match self {
            Certificate::TreeLower => "TREE_LOWER",
            Certificate::MinDegreeUpper => "MIN_DEGREE_UPPER",
            Certificate::ChromaticUpper => "CHROMATIC_UPPER",
            Certificate::ConnectivityUpper => "CONNECTIVITY_UPPER",
            Certificate::CyExactA => "CY_EXACT_A",
            Certificate::CyExactB => "CY_EXACT_B",
            Certificate::CyExactC => "CY_EXACT_C",
            Certificate::CyExactD => "CY_EXACT_D",
            Certificate::CyExactE => "CY_EXACT_E",
            Certificate::CompleteGraph => "COMPLETE_GRAPH",
            Certificate::Disconnected => "DISCONNECTED",
            Certificate::ExactSearch => "EXACT_SEARCH",
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// `C(n, 2)`.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `m - n + 2` for connected graphs on at least two vertices, else 0.
pub fn mc_lower_bound(g: &Graph) -> usize {
    if g.n() <= 1 || !g.is_connected() {
        return 0;
    }
    g.m() + 2 - g.n()
}

/// Smallest of the applicable upper bounds, with every bound that attains it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpperBound {
    pub value: usize,
    pub achieved_by: Vec<Certificate>,
}

/// Upper bound on mc(G) for a connected graph with `n >= 2`:
/// the minimum of `m - n + δ + 1`, `m - n + κ + 1`, and `m - n + χ` (the last
/// only when `n <= chi_cap`), capped at `C(n, 2)`.
pub fn mc_upper_bound(g: &Graph, chi_cap: usize) -> Result<UpperBound> {
    let (n, m) = (g.n(), g.m());
    if n < 2 {
        return Err(Error::HypothesisViolated("upper bounds need n >= 2".into()));
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    // connected: m >= n - 1, so every candidate below is non-negative
    let mut candidates = vec![
        (m + g.min_degree() + 1 - n, Certificate::MinDegreeUpper),
        (m + g.vertex_connectivity() + 1 - n, Certificate::ConnectivityUpper),
    ];
    if n <= chi_cap {
        candidates.push((m + g.chromatic_number(chi_cap)? - n, Certificate::ChromaticUpper));
    }
    let best = candidates.iter().map(|c| c.0).min().expect("non-empty");
    Ok(UpperBound {
        value: best.min(pair_count(n)),
        achieved_by: candidates.into_iter().filter(|c| c.0 == best).map(|c| c.1).collect(),
    })
}

fn complement_is_4_connected(g: &Graph) -> Result<bool> {
    let n = g.n();
    // complement degree of v is n - 1 - deg(v); 4-connected needs all >= 4
    if n < 5 || g.max_degree() + 5 > n {
        return Ok(false);
    }
    Ok(g.complement()?.vertex_connectivity() >= 4)
}

fn check_hypothesis(g: &Graph) -> Result<()> {
    let n = g.n();
    if n <= 3 {
        return Err(Error::HypothesisViolated(format!(
            "exactness conditions need n > 3, got n = {n}"
        )));
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    Ok(())
}

/// Δ < n - (2m - 3(n-1))/(n-3), multiplied through by n - 3 > 0.
fn max_degree_condition(g: &Graph) -> bool {
    let (n, m, big_delta) = (g.n() as i128, g.m() as i128, g.max_degree() as i128);
    big_delta * (n - 3) < n * (n - 3) - (2 * m - 3 * (n - 1))
}

/// Every one of the five sufficient conditions for `mc = m - n + 2` that
/// holds, in order (a) to (e).
pub fn caro_yuster_certificates(g: &Graph) -> Result<Vec<Certificate>> {
    check_hypothesis(g)?;
    let checks = [
        (complement_is_4_connected(g)?, Certificate::CyExactA),
        (g.is_triangle_free(), Certificate::CyExactB),
        (max_degree_condition(g), Certificate::CyExactC),
        (g.diameter() >= Diameter::Finite(3), Certificate::CyExactD),
        (g.has_cut_vertex(), Certificate::CyExactE),
    ];
    Ok(checks.into_iter().filter(|c| c.0).map(|c| c.1).collect())
}

/// The first of the five sufficient conditions for `mc = m - n + 2` that
/// holds, checked in order (a) to (e).
///
/// Requires a connected graph with `n > 3`; smaller or disconnected inputs
/// are an error, not `None`.
pub fn caro_yuster_exactness(g: &Graph) -> Result<Option<Certificate>> {
    check_hypothesis(g)?;
    if complement_is_4_connected(g)? {
        return Ok(Some(Certificate::CyExactA));
    }
    if g.is_triangle_free() {
        return Ok(Some(Certificate::CyExactB));
    }
    if max_degree_condition(g) {
        return Ok(Some(Certificate::CyExactC));
    }
    if g.diameter() >= Diameter::Finite(3) {
        return Ok(Some(Certificate::CyExactD));
    }
    if g.has_cut_vertex() {
        return Ok(Some(Certificate::CyExactE));
    }
    Ok(None)
}

/// Certified bounds on mc(G).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct McBounds {
    pub lower: usize,
    pub upper: usize,
    pub exact: Option<usize>,
    pub certificates: Vec<Certificate>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalyzeOptions {
    /// Vertex cap for computing χ.
    pub chi_cap: usize,
    /// Edge cap for the exhaustive search.
    pub exact_cap: usize,
    /// Run the exhaustive search when nothing else settles mc.
    pub search: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        Self {
            chi_cap: DEFAULT_CHI_CAP,
            exact_cap: DEFAULT_EXACT_CAP,
            search: true,
        }
    }
}

/// Runs every bound that applies and settles mc exactly when one of them
/// allows it.
pub fn analyze(g: &Graph, opts: &AnalyzeOptions) -> Result<McBounds> {
    let (n, m) = (g.n(), g.m());
    if n <= 1 || !g.is_connected() {
        let tag = if n <= 1 {
            Certificate::CompleteGraph
        } else {
            Certificate::Disconnected
        };
        return Ok(McBounds {
            lower: 0,
            upper: 0,
            exact: Some(0),
            certificates: vec![tag],
        });
    }
    let mut certificates = vec![Certificate::TreeLower];
    let lower = mc_lower_bound(g);
    let up = mc_upper_bound(g, opts.chi_cap.min(crate::chromatic::MAX_CHI_CAP))?;
    certificates.extend(&up.achieved_by);
    let upper = up.value;
    let mut exact = None;

    if g.is_complete() {
        certificates.push(Certificate::CompleteGraph);
        exact = Some(pair_count(n));
    }
    if exact.is_none() && n > 3 {
        if let Some(c) = caro_yuster_exactness(g)? {
            certificates.push(c);
            exact = Some(lower);
        }
    }
    if exact.is_none() && lower == upper {
        exact = Some(lower);
    }
    if exact.is_none() && opts.search && m <= opts.exact_cap {
        certificates.push(Certificate::ExactSearch);
        exact = Some(exact_mc_small(g, opts.exact_cap)?);
    }
    Ok(McBounds {
        lower,
        upper,
        exact,
        certificates,
    })
}
