//! Flat `key = value` experiment configuration.
//!
//! ```text
//! # f(n) = n ln n, dense regime
//! family      = nlogn          # constant | power | nlogn | custom
//! param       = 1              # c, alpha, or ell (not for custom)
//! table       = 100:50,1000:1e5  # custom only, n:f(n) pairs
//! regime      = dense          # dense | sparse; required for custom and power > 1
//! ell         = 1              # dense ell; defaults to param for nlogn
//! n_list      = 2000
//! multipliers = 0.5,1,2,5      # default 0.5,1,2,C with C = 5 (ell >= 1) or 5/ell
//! trials      = 200
//! master_seed = 42             # required
//! exact_cap   = none           # edge cap for the exhaustive fallback, or none
//! chi_cap     = 16
//! workers     = 1
//! output      = sweep.csv
//! ```
//!
//! `#` starts a comment anywhere on a line. Unknown and repeated keys are errors.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::path::PathBuf;

use crate::chromatic::DEFAULT_CHI_CAP;
use crate::error::{Error, Result};
use crate::sweep::SweepConfig;
use crate::threshold::{FFamily, Regime, ThresholdSpec};

pub const DEFAULT_TRIALS: usize = 200;
pub const DEFAULT_OUTPUT: &str = "sweep.csv";

const KEYS: &[&str] = &[
    "family",
    "param",
    "table",
    "regime",
    "ell",
    "n_list",
    "multipliers",
    "trials",
    "master_seed",
    "exact_cap",
    "chi_cap",
    "workers",
    "output",
];

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub sweep: SweepConfig,
    pub chi_cap: usize,
    pub output: PathBuf,
}

fn field_err(field: &str, message: impl Into<String>) -> Error {
    Error::Config {
        field: field.into(),
        message: message.into(),
    }
}

fn parse_num<T: std::str::FromStr>(field: &str, text: &str) -> Result<T> {
    text.trim()
        .parse()
        .map_err(|_| field_err(field, format!("cannot parse `{}`", text.trim())))
}

fn parse_list<T: std::str::FromStr>(field: &str, text: &str) -> Result<Vec<T>> {
    text.split(',').map(|t| parse_num(field, t)).collect()
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

/// Default multipliers `0.5, 1, 2, C`.
pub fn default_multipliers(regime: Regime) -> Vec<f64> {
    let c = regime.upper_multiplier();
    let mut m = vec![0.5, 1.0, 2.0];
    if !m.contains(&c) {
        m.push(c);
    }
    m
}

/// Builds a [`ThresholdSpec`] from its textual parts, reporting problems
/// against the config key that caused them. Shared with the CLI flags.
pub fn build_spec(
    family_name: &str,
    param: Option<f64>,
    table: Option<&str>,
    regime: Option<&str>,
    ell: Option<f64>,
) -> Result<ThresholdSpec> {
    let need_param = || param.ok_or_else(|| field_err("param", format!("required for family `{family_name}`")));
    let family = match family_name {
        "constant" => FFamily::Constant(need_param()?),
        "power" => FFamily::Power(need_param()?),
        "nlogn" => FFamily::NLogN(need_param()?),
        "custom" => {
            let text = table.ok_or_else(|| field_err("table", "required for family `custom`"))?;
            let mut entries = BTreeMap::new();
            for entry in text.split(',') {
                let (n, v) = entry
                    .split_once(':')
                    .ok_or_else(|| field_err("table", format!("entry `{}` is not n:value", entry.trim())))?;
                entries.insert(parse_num("table", n)?, parse_num("table", v)?);
            }
            FFamily::Custom(entries)
        }
        other => return Err(field_err("family", format!("unknown family `{other}`"))),
    };
    if family_name != "custom" && table.is_some() {
        return Err(field_err("table", "only valid for family `custom`"));
    }
    let regime = match regime {
        Some("dense") => {
            let ell = match (ell, &family) {
                (Some(e), _) => e,
                (None, FFamily::NLogN(e)) => *e,
                _ => return Err(field_err("ell", "required for the dense regime")),
            };
            Regime::Dense { ell }
        }
        Some("sparse") => Regime::Sparse,
        Some(other) => return Err(field_err("regime", format!("unknown regime `{other}`"))),
        None => match &family {
            FFamily::Constant(_) => Regime::Sparse,
            FFamily::Power(a) if *a <= 1.0 => Regime::Sparse,
            FFamily::NLogN(e) => Regime::Dense { ell: ell.unwrap_or(*e) },
            _ => return Err(field_err("regime", "required for this family")),
        },
    };
    ThresholdSpec::new(family, regime).map_err(|e| field_err("family", e.to_string()))
}

impl ExperimentConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let mut kv: HashMap<String, String> = HashMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| Error::Parse {
                line: i + 1,
                message: format!("expected `key = value`, found `{line}`"),
            })?;
            let key = key.trim();
            if !KEYS.contains(&key) {
                return Err(field_err(key, "unknown key"));
            }
            if kv.insert(key.to_string(), value.trim().to_string()).is_some() {
                return Err(field_err(key, "given more than once"));
            }
        }
        let get = |k: &str| kv.get(k).map(String::as_str);

        let family_name = get("family").ok_or_else(|| field_err("family", "required"))?;
        let param = get("param").map(|t| parse_num::<f64>("param", t)).transpose()?;
        let ell = get("ell").map(|t| parse_num::<f64>("ell", t)).transpose()?;
        let spec = build_spec(family_name, param, get("table"), get("regime"), ell)?;
        let regime = spec.regime();

        let n_list = parse_list("n_list", get("n_list").ok_or_else(|| field_err("n_list", "required"))?)?;
        let multipliers = match get("multipliers") {
            Some(t) => parse_list("multipliers", t)?,
            None => default_multipliers(regime),
        };
        let trials = get("trials")
            .map(|t| parse_num("trials", t))
            .transpose()?
            .unwrap_or(DEFAULT_TRIALS);
        let master_seed = parse_num(
            "master_seed",
            get("master_seed").ok_or_else(|| field_err("master_seed", "required (no implicit seed)"))?,
        )?;
        let exact_cap = match get("exact_cap") {
            None | Some("none") => None,
            Some(t) => Some(parse_num("exact_cap", t)?),
        };
        let chi_cap = get("chi_cap")
            .map(|t| parse_num("chi_cap", t))
            .transpose()?
            .unwrap_or(DEFAULT_CHI_CAP);
        let workers = get("workers")
            .map(|t| parse_num("workers", t))
            .transpose()?
            .unwrap_or(1);
        let output = PathBuf::from(get("output").unwrap_or(DEFAULT_OUTPUT));

        let sweep = SweepConfig {
            spec,
            n_list,
            multipliers,
            trials,
            master_seed,
            exact_cap,
            workers,
        };
        sweep.validate()?;
        Ok(Self { sweep, chi_cap, output })
    }

    pub fn from_path(path: impl AsRef<std::path::Path>) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    /// Canonical text form; [`ExperimentConfig::parse`] inverts it exactly.
    pub fn to_text(&self) -> String {
        let s = &self.sweep;
        let mut out = String::new();
        let (family, param) = match s.spec.family() {
            FFamily::Constant(c) => ("constant", Some(*c)),
            FFamily::Power(a) => ("power", Some(*a)),
            FFamily::NLogN(e) => ("nlogn", Some(*e)),
            FFamily::Custom(_) => ("custom", None),
        };
        let _ = writeln!(out, "family = {family}");
        if let Some(p) = param {
            let _ = writeln!(out, "param = {p}");
        }
        if let FFamily::Custom(table) = s.spec.family() {
            let entries: Vec<String> = table.iter().map(|(n, v)| format!("{n}:{v}")).collect();
            let _ = writeln!(out, "table = {}", entries.join(","));
        }
        match s.spec.regime() {
            Regime::Dense { ell } => {
                let _ = writeln!(out, "regime = dense\nell = {ell}");
            }
            Regime::Sparse => {
                let _ = writeln!(out, "regime = sparse");
            }
        }
        let _ = writeln!(out, "n_list = {}", join(&s.n_list));
        let _ = writeln!(out, "multipliers = {}", join(&s.multipliers));
        let _ = writeln!(out, "trials = {}", s.trials);
        let _ = writeln!(out, "master_seed = {}", s.master_seed);
        match s.exact_cap {
            Some(c) => {
                let _ = writeln!(out, "exact_cap = {c}");
            }
            None => {
                let _ = writeln!(out, "exact_cap = none");
            }
        }
        let _ = writeln!(out, "chi_cap = {}", self.chi_cap);
        let _ = writeln!(out, "workers = {}", s.workers);
        let _ = writeln!(out, "output = {}", self.output.display());
        out
    }
}
