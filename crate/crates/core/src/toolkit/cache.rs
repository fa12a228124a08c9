use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::glmodel::{build_algebra, build_irreducible, build_kac_module, HighestWeightData, SuperModule};
use crate::linalg::{SparseMatrix, SparseVec};
use crate::rational::{fmt_q, parse_q};
use crate::rootdata::{Parity, Weight};

/// Environment variable overriding the cache directory.
pub const CACHE_ENV: &str = "SUPERCONE_CACHE_DIR";

const FORMAT: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModuleKind {
    Irreducible,
    Kac,
}

impl ModuleKind {
    fn tag(self) -> &'static str {
        match self {
            ModuleKind::Irreducible => "irreducible",
            ModuleKind::Kac => "kac",
        }
    }
}

/// JSON container: dimensions, parities, weights and sparse action matrices
/// as `(row, col, "p/q")` triples.
#[derive(Serialize, Deserialize)]
struct Stored {
    format: u32,
    kind: ModuleKind,
    m: usize,
    n: usize,
    lambda: Weight,
    dim: usize,
    parities: Vec<u8>,
    weights: Vec<Weight>,
    highest: Option<HighestWeightData>,
    action: Vec<Vec<(usize, usize, String)>>,
}

impl Stored {
    fn from_module(kind: ModuleKind, lambda: &Weight, module: &SuperModule) -> Self {
        Stored {
            format: FORMAT,
            kind,
            m: module.model.m,
            n: module.model.n,
            lambda: lambda.clone(),
            dim: module.dim(),
            parities: module.parities.iter().map(|p| p.bit() as u8).collect(),
            weights: module.weights.clone(),
            highest: module.highest.clone(),
            action: module
                .action
                .iter()
                .map(|a| {
                    (0..a.ncols())
                        .flat_map(|j| a.col(j).iter().map(move |(i, c)| (*i, j, fmt_q(c))))
                        .collect()
                })
                .collect(),
        }
    }

    fn into_module(self) -> Result<SuperModule> {
        if self.format != FORMAT {
            return Err(Error::InvalidInput(format!("cache format {} not understood", self.format)));
        }
        let model = build_algebra(self.m, self.n)?;
        if self.action.len() != model.dim() || self.parities.len() != self.dim || self.weights.len() != self.dim {
            return Err(Error::InvalidInput("cached module has inconsistent sizes".into()));
        }
        let action = self
            .action
            .into_iter()
            .map(|entries| {
                let mut cols = vec![Vec::new(); self.dim];
                for (i, j, c) in entries {
                    if i >= self.dim || j >= self.dim {
                        return Err(Error::InvalidInput("cached entry out of range".into()));
                    }
                    cols[j].push((i, parse_q(&c)?));
                }
                Ok(SparseMatrix::from_columns(
                    self.dim,
                    cols.into_iter().map(SparseVec::from_pairs).collect(),
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        let module = SuperModule {
            model,
            parities: self.parities.iter().map(|&b| Parity::from_bit(b as usize)).collect(),
            weights: self.weights,
            action,
            highest: self.highest,
        };
        module.verify_structure()?;
        Ok(module)
    }
}

/// Directory of constructed modules keyed by `(kind, m, n, lambda)`.
#[derive(Clone, Debug)]
pub struct ModuleCache {
    dir: PathBuf,
}

impl ModuleCache {
    pub fn new(dir: impl AsRef<Path>) -> Result<Self> {
        std::fs::create_dir_all(dir.as_ref())?;
        Ok(ModuleCache {
            dir: dir.as_ref().to_path_buf(),
        })
    }

    /// Explicit directory first, then `$SUPERCONE_CACHE_DIR`.
    pub fn from_env_or(dir: Option<PathBuf>) -> Result<Option<Self>> {
        match dir.or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from)) {
            Some(d) => Ok(Some(ModuleCache::new(d)?)),
            None => Ok(None),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, kind: ModuleKind, m: usize, n: usize, lambda: &Weight) -> PathBuf {
        let coords: Vec<String> = lambda.0.iter().map(|c| fmt_q(c).replace('/', "over")).collect();
        self.dir
            .join(format!("{}-gl{m}-{n}_{}.json", kind.tag(), coords.join("_")))
    }

    pub fn load(&self, kind: ModuleKind, m: usize, n: usize, lambda: &Weight) -> Result<Option<SuperModule>> {
        let p = self.path_for(kind, m, n, lambda);
        if !p.exists() {
            return Ok(None);
        }
        let stored: Stored = serde_json::from_str(&std::fs::read_to_string(&p)?)?;
        if stored.kind != kind || stored.m != m || stored.n != n || &stored.lambda != lambda {
            return Err(Error::InvalidInput(format!("{} does not hold the requested module", p.display())));
        }
        stored.into_module().map(Some)
    }

    pub fn store(&self, kind: ModuleKind, lambda: &Weight, module: &SuperModule) -> Result<PathBuf> {
        let p = self.path_for(kind, module.model.m, module.model.n, lambda);
        let s = serde_json::to_string(&Stored::from_module(kind, lambda, module))?;
        // write-then-rename so concurrent readers never see a partial file
        let tmp = p.with_extension(format!("tmp{}", std::process::id()));
        std::fs::write(&tmp, s)?;
        std::fs::rename(&tmp, &p)?;
        Ok(p)
    }

    pub fn get_or_build(&self, kind: ModuleKind, m: usize, n: usize, lambda: &Weight) -> Result<SuperModule> {
        if let Some(module) = self.load(kind, m, n, lambda)? {
            return Ok(module);
        }
        let model = build_algebra(m, n)?;
        let module = match kind {
            ModuleKind::Irreducible => build_irreducible(lambda, &model)?,
            ModuleKind::Kac => build_kac_module(lambda, &model)?.module,
        };
        self.store(kind, lambda, &module)?;
        Ok(module)
    }
}
