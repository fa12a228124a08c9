//! Run configuration, the grid-driven verification harness, canonical JSON
//! reports and the on-disk module cache.

mod cache;
mod suites;

pub use cache::{ModuleCache, ModuleKind, CACHE_ENV};

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootdata::{is_dominant_shifted, AlgebraType, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// `X_{M⊕N}`, `X_{M⊗N}`, `X_{M*}` and `sdim M_x` on seeded random pairs.
    FiberLaws,
    /// Orbit counts against enumeration.
    Orbits,
    /// Orbit dimension against `rank ad x / 2`.
    Dimensions,
    /// `X_{L_lambda}` against the atypicality degree.
    Varieties,
    /// Stable reduction with per-step translation certificates.
    Reduction,
    /// Restriction law and Taylor order of supercharacters.
    Supercharacter,
    /// Centralizers `C_g(x)`, `[x, g]` and `g_x`.
    Centralizer,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::FiberLaws,
        Suite::Orbits,
        Suite::Dimensions,
        Suite::Varieties,
        Suite::Reduction,
        Suite::Supercharacter,
        Suite::Centralizer,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::FiberLaws => "fiber-laws",
            Suite::Orbits => "orbits",
            Suite::Dimensions => "dimensions",
            Suite::Varieties => "varieties",
            Suite::Reduction => "reduction",
            Suite::Supercharacter => "supercharacter",
            Suite::Centralizer => "centralizer",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Suite::ALL.iter().map(|x| x.name()).collect();
                Error::Config(format!("unknown suite {s:?}; expected one of {}", names.join(", ")))
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    /// `None` runs nothing and yields an empty report.
    pub suite: Option<Suite>,
    /// Restrict the suite to one algebra; `None` uses the suite's default set.
    pub algebra: Option<AlgebraType>,
    /// Single weight (`lambda + rho`) instead of a grid.
    pub weight: Option<Weight>,
    /// Grid of integral `lambda + rho` with coordinates in `[-bound, bound]`;
    /// `None` uses the suite's default.
    pub bound: Option<i64>,
    pub seed: u64,
    pub pairs: usize,
    pub output: Option<PathBuf>,
    #[serde(skip)]
    pub cache_dir: Option<PathBuf>,
    pub jobs: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            suite: None,
            algebra: None,
            weight: None,
            bound: None,
            seed: 2024,
            pairs: 20,
            output: None,
            cache_dir: None,
            jobs: 0,
        }
    }
}

pub const MAX_BOUND: i64 = 8;

impl RunConfig {
    pub fn for_suite(suite: Suite) -> Self {
        RunConfig {
            suite: Some(suite),
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(b) = self.bound {
            if !(0..=MAX_BOUND).contains(&b) {
                return Err(Error::Config(format!("grid bound {b} outside 0..={MAX_BOUND}")));
            }
        }
        if let Some(w) = &self.weight {
            let Some(a) = &self.algebra else {
                return Err(Error::Config("a weight needs an algebra".into()));
            };
            let (m, n) = a
                .gl_dims()
                .ok_or_else(|| Error::Config(format!("weights are only supported for gl, got {a}")))?;
            if w.len() != m + n {
                return Err(Error::DimensionMismatch {
                    expected: m + n,
                    got: w.len(),
                });
            }
        }
        if let (Some(Suite::FiberLaws), Some(a)) = (self.suite, &self.algebra) {
            if a.gl_dims().is_none() {
                return Err(Error::Config(format!("fiber laws need a gl algebra, got {a}")));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub suite: Suite,
    pub item: String,
    pub check: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl CheckResult {
    pub fn new(suite: Suite, item: impl Into<String>, check: &str, pass: bool, detail: impl Into<String>) -> Self {
        CheckResult {
            suite,
            item: item.into(),
            check: check.into(),
            pass,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub checked: usize,
    pub failed: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub config: RunConfig,
    pub items: Vec<CheckResult>,
    /// `suite/check` -> aggregated verdict.
    pub matrix: BTreeMap<String, Verdict>,
    pub passed: bool,
    /// Excluded from the determinism contract.
    pub timing: Timing,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(config: RunConfig, items: Vec<CheckResult>, elapsed_ms: u64) -> Self {
        let mut matrix: BTreeMap<String, Verdict> = BTreeMap::new();
        for it in &items {
            let v = matrix.entry(format!("{}/{}", it.suite, it.check)).or_default();
            v.checked += 1;
            if !it.pass {
                v.failed += 1;
            }
        }
        for v in matrix.values_mut() {
            v.pass = v.failed == 0;
        }
        Report {
            tool: "supercone".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            passed: items.iter().all(|i| i.pass),
            config,
            items,
            matrix,
            timing: Timing { elapsed_ms },
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.items.iter().filter(|i| !i.pass)
    }

    /// Process exit status for the CLI: 0 when every check passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }

    /// Sorted-key JSON with exact rationals as strings.
    pub fn to_canonical_json(&self) -> Result<String> {
        canonical_json(self)
    }

    /// Canonical JSON without timing or thread count: identical for equal
    /// configurations regardless of how the run was scheduled.
    pub fn deterministic_json(&self) -> Result<String> {
        let mut v = serde_json::to_value(self)?;
        if let Some(o) = v.as_object_mut() {
            o.remove("timing");
            if let Some(c) = o.get_mut("config").and_then(|c| c.as_object_mut()) {
                c.remove("jobs");
            }
        }
        Ok(serde_json::to_string_pretty(&v)?)
    }
}

/// Serializes through `serde_json::Value`, whose maps keep keys sorted.
pub fn canonical_json<T: Serialize>(value: &T) -> Result<String> {
    let v = serde_json::to_value(value)?;
    Ok(serde_json::to_string_pretty(&v)?)
}

pub fn export_report(report: &Report, path: &Path) -> Result<()> {
    let mut s = report.to_canonical_json()?;
    s.push('\n');
    std::fs::write(path, s)?;
    Ok(())
}

/// Runs the configured suite on a bounded rayon pool (`jobs = 0` uses all cores).
pub fn run_suite(config: &RunConfig) -> Result<Report> {
    config.validate()?;
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
    let items = match config.suite {
        None => Vec::new(),
        Some(s) => pool.install(|| suites::run(s, config))?,
    };
    let report = Report::new(config.clone(), items, start.elapsed().as_millis() as u64);
    if let Some(p) = &config.output {
        export_report(&report, p)?;
    }
    Ok(report)
}

/// Integral dominant `lambda + rho` for `gl(m|n)` with coordinates in `[-bound, bound]`.
pub fn dominant_grid(m: usize, n: usize, bound: i64) -> Vec<Weight> {
    let len = m + n;
    let width = (2 * bound + 1) as usize;
    let total = width.pow(len as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let coords: Vec<i64> = (0..len)
            .map(|_| {
                let d = (c % width) as i64 - bound;
                c /= width;
                d
            })
            .rev()
            .collect();
        let w = Weight::from_ints(&coords);
        if is_dominant_shifted(&w, m) {
            out.push(w);
        }
    }
    out.sort();
    out
}

/// Hand-picked dominant `lambda + rho` for `gl(2|2)`: 7 typical, 10 of
/// atypicality 1 and 7 of atypicality 2, all with `dim L_lambda(g_0) <= 4`.
pub fn curated_gl22() -> Vec<Weight> {
    [
        [2, 1, 2, 1],
        [1, 0, 2, 1],
        [2, 0, 1, -1],
        [-1, -2, -1, -2],
        [0, -1, -1, -2],
        [1, -1, 2, 0],
        [2, 1, 1, 0],
        [1, 0, 1, 0],
        [0, -1, 0, -1],
        [1, 0, 0, -2],
        [2, 0, 2, 0],
        [1, -1, 1, 0],
        [0, -2, 0, -1],
        [2, 1, 0, -1],
        [-1, -2, 1, 0],
        [2, 0, -1, -2],
        [0, -1, 2, 1],
        [-1, -2, 2, 1],
        [0, -2, 2, 0],
        [0, -1, 1, 0],
        [1, -1, 1, -1],
        [1, 0, 0, -1],
        [2, 0, 0, -2],
        [2, 1, -1, -2],
    ]
    .iter()
    .map(|w| Weight::from_ints(w))
    .collect()
}
