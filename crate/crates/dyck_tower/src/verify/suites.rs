//! Invariant suites with machine-readable reports.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_rational::Rational64;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use super::shuffle::Mode;
use crate::braid::{check_braid_rules, check_theorem_main, rewrite_trains, BraidGen, Coord, Piece, PointConfig, RewriteRule, TrainWord};
use crate::coeffring::{CoefRat, Fp, Scalar};
use crate::combinat::{enumerate_paths, path_weight, rhs_compositional};
use crate::error::{Error, Result};
use crate::sweep::{assemble_composition, recursion_dp, sweep_path};
use crate::symfunc::compositions;
use crate::vkspace::{
    act_dplus, algebra_relations, hecke_y_relations, intertwining_relations, relation_check, spanning_set,
    ytilde_relations, Family, Interp, VElem,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Relations,
    Sweep,
    Braid,
    Trains,
    All,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "relations" => Suite::Relations,
            "sweep" => Suite::Sweep,
            "braid" => Suite::Braid,
            "trains" => Suite::Trains,
            "all" => Suite::All,
            _ => return Err(Error::InvalidArgument(format!("unknown suite '{s}'; usage: relations | sweep | braid | trains | all"))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Relations => "relations",
            Suite::Sweep => "sweep",
            Suite::Braid => "braid",
            Suite::Trains => "trains",
            Suite::All => "all",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub id: String,
    pub witness: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: usize,
    pub failures: Vec<Failure>,
    pub millis: u128,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        SuiteReport { suite: suite.into(), cases: 0, failures: Vec::new(), millis: 0 }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Appends `o`'s cases and failures.
    pub fn merge(mut self, o: SuiteReport) -> Self {
        self.cases += o.cases;
        self.failures.extend(o.failures);
        self.millis += o.millis;
        self
    }

    fn fail(&mut self, id: String, witness: Value) {
        self.failures.push(Failure { id, witness });
    }

    fn timed(mut self, start: Instant) -> Self {
        self.millis = start.elapsed().as_millis();
        self
    }
}

/// Every defining relation, for `k <= max_k`, on the spanning set of total
/// degree `<= degree`.
pub fn relations_report<S: Scalar>(max_k: usize, degree: usize) -> Result<SuiteReport> {
    let start = Instant::now();
    let interp = Interp::<S>::base();
    let mut rels = Vec::new();
    for k in 0..=max_k {
        rels.extend(algebra_relations::<S>(Family::BASE, k));
        rels.extend(algebra_relations::<S>(Family::CONJUGATE, k));
        rels.extend(hecke_y_relations::<S>(Family::BASE, k));
        rels.extend(hecke_y_relations::<S>(Family::CONJUGATE, k));
        rels.extend(intertwining_relations::<S>(k));
        rels.extend(ytilde_relations::<S>(k));
    }
    let reports = rels.par_iter().map(|r| relation_check(&interp, r, degree)).collect::<Result<Vec<_>>>()?;
    let mut out = SuiteReport::new("relations");
    for r in reports {
        out.cases += r.cases;
        if let Some(w) = &r.mismatch {
            out.fail(format!("{} k={}", r.name, r.k), serde_json::to_value(w).unwrap_or(Value::Null));
        }
    }
    Ok(out.timed(start))
}

fn dims(max_total: usize) -> Vec<(usize, usize)> {
    (2..=max_total).flat_map(|s| (1..s).map(move |m| (m, s - m))).collect()
}

/// `sweep_path(p)` against the statistics formula for all paths with `m + n <= max_total`.
pub fn sweep_paths_report<S: Scalar>(max_total: usize) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut paths = Vec::new();
    for (m, n) in dims(max_total) {
        paths.extend(enumerate_paths(m, n, None)?);
    }
    let results = paths
        .par_iter()
        .map(|p| Ok((p, sweep_path::<S>(p)?, path_weight::<S>(p)?)))
        .collect::<Result<Vec<_>>>()?;
    let mut out = SuiteReport::new("sweep");
    for (p, a, b) in results {
        out.cases += 1;
        if a != b {
            out.fail(format!("path {}", p.bits()), json!({"sweep": a.to_json(), "formula": b.to_json()}));
        }
    }
    Ok(out.timed(start))
}

/// Coloring-recursion assembly against the parking-function side for
/// `g (m1 + n1) <= max_total`.
pub fn coloring_assembly_report<S: Scalar>(max_total: usize) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut jobs = Vec::new();
    for (m1, n1) in dims(max_total).into_iter().filter(|&(m, n)| num_integer::gcd(m, n) == 1) {
        for g in 1..=max_total / (m1 + n1) {
            jobs.push((m1, n1, g));
        }
    }
    let parts = jobs
        .par_iter()
        .map(|&(m1, n1, g)| -> Result<SuiteReport> {
            let dp = recursion_dp::<S>(g * m1, g * n1, false)?;
            let mut out = SuiteReport::new("sweep");
            for alpha in compositions(g) {
                out.cases += 1;
                let a = assemble_composition(m1, n1, g, &alpha, &dp.last)?;
                let b = rhs_compositional::<S>(m1, n1, g, &alpha)?;
                if a != b {
                    out.fail(format!("assemble ({m1},{n1},{g}) {alpha:?}"), json!({"colorings": a.to_json(), "paths": b.to_json()}));
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(parts.into_iter().fold(SuiteReport::new("sweep"), SuiteReport::merge).timed(start))
}

/// The braid evaluation of every reachable coloring and the transition rules,
/// for `m + n <= max_total`.
pub fn braid_report<S: Scalar>(max_total: usize) -> Result<SuiteReport> {
    let start = Instant::now();
    let parts = dims(max_total)
        .par_iter()
        .map(|&(m, n)| -> Result<SuiteReport> {
            let dp = recursion_dp::<S>(m, n, true)?;
            let thm = check_theorem_main(&dp)?;
            let rules = check_braid_rules(&dp)?;
            let mut out = SuiteReport::new("braid");
            out.cases = thm.colorings + rules.transitions;
            for f in thm.failures {
                out.fail(format!("coloring ({m},{n})"), json!(f));
            }
            if thm.half_integral > 0 {
                out.fail(format!("q-degree ({m},{n})"), json!(thm.half_integral));
            }
            for f in rules.failures {
                out.fail(format!("transition ({m},{n})"), json!(f));
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(parts.into_iter().fold(SuiteReport::new("braid"), SuiteReport::merge).timed(start))
}

fn same_action(a: &TrainWord, b: &TrainWord) -> Result<bool> {
    let (fa, fb) = (a.flatten()?, b.flatten()?);
    for (lam, e) in spanning_set(a.k, 1) {
        let f = VElem::basis(a.k, 3, lam, e, CoefRat::one());
        if fa.evaluate(&f)? != fb.evaluate(&f)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `per_rule` random applicable instances of each train rule with `k <= 4`.
pub fn train_rewrite_report(seed: u64, per_rule: usize) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = SuiteReport::new("trains");
    for rule in [RewriteRule::Gluing, RewriteRule::Collision, RewriteRule::Overtaking, RewriteRule::TZ, RewriteRule::TYTilde] {
        let mut done = 0;
        while done < per_rule {
            let k = rng.gen_range(1..=4);
            let [a, b, c, d] = [0; 4].map(|_| rng.gen_range(1..=k));
            let pair = match rule {
                RewriteRule::Gluing => [Piece::Up(a, b), Piece::Up(b, c)],
                RewriteRule::Collision => [Piece::Up(a, b), Piece::Down(c, d)],
                RewriteRule::Overtaking => [Piece::Up(a, b), Piece::Up(c, d)],
                RewriteRule::TZ => [Piece::Down(a, b), Piece::Gen(BraidGen::Z(b))],
                RewriteRule::TYTilde => [Piece::Down(a, b), Piece::Gen(BraidGen::YTilde(b))],
            };
            let w = TrainWord::new(k, pair.to_vec())?;
            let Ok(r) = rewrite_trains(&w, rule, 0) else { continue };
            done += 1;
            out.cases += 1;
            if !same_action(&w, &r)? {
                out.fail(format!("{rule:?} k={k}"), json!({"before": w.to_string(), "after": r.to_string()}));
            }
        }
    }
    Ok(out.timed(start))
}

fn random_config(rng: &mut ChaCha8Rng) -> Option<(PointConfig, Vec<usize>)> {
    let k = rng.gen_range(1..=4);
    let den = rng.gen_range(3..=9);
    let t = Coord::exact(Rational64::new(rng.gen_range(1..den), den));
    let vden = rng.gen_range(5..=13);
    let mut pts: Vec<i64> = (1..vden).collect();
    pts.shuffle(rng);
    let v = pts[..k.min(pts.len())].iter().map(|&p| Coord::exact(Rational64::new(p, vden))).collect();
    let alpha = (0..k).map(|_| rng.gen_range(1..=3)).collect();
    PointConfig::new(t, v).ok().map(|c| (c, alpha))
}

/// `count` random admissible orders, each compared with the canonical order.
pub fn order_independence_report(seed: u64, count: usize) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = SuiteReport::new("trains");
    let mut attempts = 0;
    while out.cases < count {
        attempts += 1;
        if attempts > 1000 * count {
            return Err(Error::Resource(format!("only {} admissible orders found", out.cases)));
        }
        let Some((cfg, alpha)) = random_config(&mut rng) else { continue };
        let Ok((want, fin)) = cfg.special_braid(&alpha) else { continue };
        let mut order: Vec<usize> = alpha.iter().enumerate().flat_map(|(i, &a)| std::iter::repeat_n(i, a - 1)).collect();
        order.shuffle(&mut rng);
        let Ok((got, end)) = cfg.run(&order) else { continue };
        out.cases += 1;
        let k = cfg.k();
        let steps = order.len();
        let mut f = VElem::<CoefRat>::one(0, k + steps);
        for _ in 0..k {
            f = act_dplus(&f);
        }
        if end != fin || got.evaluate(&f)? != want.evaluate(&f)? {
            out.fail(
                format!("order {order:?}"),
                json!({"start": cfg, "alpha": alpha, "canonical": want.to_string(), "reordered": got.to_string()}),
            );
        }
    }
    Ok(out.timed(start))
}

fn run_generic<S: Scalar>(suite: Suite) -> Result<SuiteReport> {
    let report = match suite {
        Suite::Relations => relations_report::<S>(3, 3)?,
        Suite::Sweep => sweep_paths_report::<S>(9)?.merge(coloring_assembly_report::<S>(9)?),
        Suite::Braid => braid_report::<S>(7)?,
        Suite::Trains => train_rewrite_report(1, 100)?.merge(order_independence_report(2, 100)?),
        Suite::All => {
            let mut all = SuiteReport::new("all");
            for s in [Suite::Relations, Suite::Sweep, Suite::Braid, Suite::Trains] {
                all = all.merge(run_generic::<S>(s)?);
            }
            all
        }
    };
    Ok(SuiteReport { suite: suite.to_string(), ..report })
}

/// Runs a named suite; train checks are always exact.
pub fn run_suite(suite: Suite, mode: Mode) -> Result<SuiteReport> {
    match mode {
        Mode::Exact => run_generic::<CoefRat>(suite),
        Mode::Fast => run_generic::<Fp>(suite),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        assert_eq!("braid".parse::<Suite>().unwrap(), Suite::Braid);
        assert!(matches!("nope".parse::<Suite>(), Err(Error::InvalidArgument(_))));
        assert_eq!(Suite::All.to_string(), "all");
    }

    #[test]
    fn small_reports() {
        assert!(relations_report::<CoefRat>(1, 2).unwrap().passed());
        let r = sweep_paths_report::<CoefRat>(5).unwrap();
        assert!(r.passed() && r.cases > 0);
        assert!(coloring_assembly_report::<CoefRat>(4).unwrap().passed());
        assert!(braid_report::<CoefRat>(4).unwrap().passed());
        assert_eq!(train_rewrite_report(5, 3).unwrap().cases, 15);
        assert!(order_independence_report(5, 5).unwrap().passed());
    }
}
