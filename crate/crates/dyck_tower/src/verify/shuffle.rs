//! Batch comparison of the operator side with the parking-function side.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use super::cache::ColoringCache;
use crate::actions::{lhs_compositional, Tower};
use crate::coeffring::{CoefRat, Fp, Scalar};
use crate::combinat::{check_composition, check_slope, rhs_compositional};
use crate::error::{Error, Result};
use crate::sweep::{assemble_composition, recursion_dp, Coloring};
use crate::symfunc::compositions;
use crate::vkspace::VElem;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[default]
    Exact,
    /// Evaluation at a random point modulo a prime.
    Fast,
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Mode::Exact),
            "fast" => Ok(Mode::Fast),
            _ => Err(Error::InvalidArgument(format!("unknown mode '{s}' (expected exact or fast)"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exact => "exact",
            Mode::Fast => "fast",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JobConfig {
    pub m1: usize,
    pub n1: usize,
    pub g: usize,
    /// All compositions of `g` when absent.
    pub alpha: Option<Vec<usize>>,
    pub cap: usize,
    pub mode: Mode,
    pub jobs: usize,
    pub out: Option<PathBuf>,
    /// Wall-clock budget; cases not started within it are skipped.
    pub budget: Option<Duration>,
}

impl JobConfig {
    pub fn new(m1: usize, n1: usize, g: usize) -> Self {
        JobConfig { m1, n1, g, alpha: None, cap: g * n1, mode: Mode::Exact, jobs: 0, out: None, budget: None }
    }

    pub fn validate(&self) -> Result<()> {
        check_slope(self.m1, self.n1)?;
        if self.g == 0 {
            return Err(Error::InvalidArgument("g must be positive".into()));
        }
        if self.cap < self.g * self.n1 {
            return Err(Error::InvalidArgument(format!("cap {} is below g*n1 = {}", self.cap, self.g * self.n1)));
        }
        if let Some(a) = &self.alpha {
            check_composition(a, self.g)?;
        }
        Ok(())
    }

    pub fn compositions(&self) -> Vec<Vec<usize>> {
        match &self.alpha {
            Some(a) => vec![a.clone()],
            None => compositions(self.g),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseStatus {
    Equal,
    Mismatch,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseReport {
    pub alpha: Vec<usize>,
    pub status: CaseStatus,
    /// Whether the coloring recursion reproduces the parking-function side.
    pub coloring_side: Option<bool>,
    pub lhs: Option<Value>,
    pub rhs: Option<Value>,
    /// `lhs - rhs` on mismatch.
    pub diff: Option<Value>,
    pub reason: Option<String>,
    pub millis: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct ShuffleReport {
    pub config: JobConfig,
    pub cases: Vec<CaseReport>,
    pub skipped: Vec<Vec<usize>>,
    pub passed: bool,
    pub millis: u128,
}

impl ShuffleReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &CaseReport> {
        self.cases.iter().filter(|c| c.status == CaseStatus::Mismatch)
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

fn skipped(alpha: &[usize], reason: String) -> CaseReport {
    CaseReport {
        alpha: alpha.to_vec(),
        status: CaseStatus::Skipped,
        coloring_side: None,
        lhs: None,
        rhs: None,
        diff: None,
        reason: Some(reason),
        millis: 0,
    }
}

fn one_case<S: Scalar>(
    cfg: &JobConfig,
    tower: &Tower<S>,
    table: &BTreeMap<Coloring, VElem<S>>,
    alpha: &[usize],
) -> Result<CaseReport> {
    let start = Instant::now();
    let lhs = lhs_compositional(tower, cfg.m1, cfg.n1, cfg.g, alpha)?.with_cap(cfg.cap);
    let rhs = rhs_compositional::<S>(cfg.m1, cfg.n1, cfg.g, alpha)?.with_cap(cfg.cap);
    let colored = assemble_composition(cfg.m1, cfg.n1, cfg.g, alpha, table)?.with_cap(cfg.cap);
    let equal = lhs == rhs;
    Ok(CaseReport {
        alpha: alpha.to_vec(),
        status: if equal { CaseStatus::Equal } else { CaseStatus::Mismatch },
        coloring_side: Some(colored == rhs),
        diff: (!equal).then(|| lhs.sub(&rhs).to_json()),
        lhs: Some(lhs.to_json()),
        rhs: Some(rhs.to_json()),
        reason: None,
        millis: start.elapsed().as_millis(),
    })
}

fn run_cases<S: Scalar>(cfg: &JobConfig, table: &BTreeMap<Coloring, VElem<S>>, clock: Instant) -> Vec<CaseReport> {
    let tower = Tower::<S>::new();
    let alphas = cfg.compositions();
    alphas
        .par_iter()
        .map(|alpha| {
            if cfg.budget.is_some_and(|b| clock.elapsed() > b) {
                return skipped(alpha, "time budget exhausted".into());
            }
            match one_case(cfg, &tower, table, alpha) {
                Ok(r) => r,
                Err(e @ Error::Resource(_)) => skipped(alpha, e.to_string()),
                Err(e) => {
                    let mut r = skipped(alpha, e.to_string());
                    r.status = CaseStatus::Mismatch;
                    r
                }
            }
        })
        .collect()
}

/// Compares both sides of the compositional identity (and the coloring
/// recursion) for every requested composition.
pub fn verify_shuffle(cfg: &JobConfig) -> Result<ShuffleReport> {
    cfg.validate()?;
    let clock = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cfg.jobs).build().map_err(|e| Error::Resource(e.to_string()))?;
    let (m, n) = (cfg.g * cfg.m1, cfg.g * cfg.n1);
    let cases = pool.install(|| -> Result<Vec<CaseReport>> {
        Ok(match cfg.mode {
            Mode::Exact => run_cases::<CoefRat>(cfg, &ColoringCache::from_env().final_values(m, n)?, clock),
            Mode::Fast => run_cases::<Fp>(cfg, &recursion_dp::<Fp>(m, n, false)?.last, clock),
        })
    })?;
    let skipped: Vec<Vec<usize>> = cases.iter().filter(|c| c.status == CaseStatus::Skipped).map(|c| c.alpha.clone()).collect();
    let passed = cases.iter().all(|c| c.status == CaseStatus::Equal && c.coloring_side == Some(true));
    let report = ShuffleReport { config: cfg.clone(), cases, skipped, passed, millis: clock.elapsed().as_millis() };
    if let Some(path) = &cfg.out {
        let text = serde_json::to_string_pretty(&report.to_json()).map_err(|e| Error::Io(e.to_string()))?;
        std::fs::write(path, text)?;
    }
    Ok(report)
}
