//! Relation catalog and a checker that compares both sides of an operator
//! identity on the spanning set `{m_lambda y^a}`.

use serde::Serialize;

use super::ops::AlgebraKind;
use super::velem::VElem;
use super::words::{Gen, Interp, Word};
use crate::coeffring::Scalar;
use crate::error::Result;
use crate::symfunc::{partitions, Partition};

/// A linear combination of words.
pub type OpSum<S> = Vec<(S, Word)>;

#[derive(Clone, Debug)]
pub struct Relation<S: Scalar> {
    pub name: String,
    pub k: usize,
    pub lhs: OpSum<S>,
    pub rhs: OpSum<S>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub name: String,
    pub k: usize,
    pub cases: usize,
    pub mismatch: Option<Witness>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// All `(lambda, a)` with `a` of length `k` and `|lambda| + |a| <= degree`.
pub fn spanning_set(k: usize, degree: usize) -> Vec<(Partition, Vec<u8>)> {
    fn exps(k: usize, total: usize) -> Vec<Vec<u8>> {
        if k == 0 {
            return if total == 0 { vec![vec![]] } else { vec![] };
        }
        let mut out = Vec::new();
        for first in 0..=total {
            for mut rest in exps(k - 1, total - first) {
                rest.insert(0, first as u8);
                out.push(rest);
            }
        }
        out
    }
    let mut out = Vec::new();
    for d in 0..=degree {
        for ydeg in 0..=d {
            for lam in partitions(d - ydeg) {
                for a in exps(k, ydeg) {
                    out.push((lam.clone(), a));
                }
            }
        }
    }
    out
}

fn raising(w: &Word) -> usize {
    w.0.iter()
        .filter(|g| matches!(g, Gen::DPlus | Gen::DPlusStar | Gen::Y(_) | Gen::Z(_) | Gen::YTilde(_)))
        .count()
}

/// Evaluates both sides on every spanning element and reports the first
/// mismatch.
pub fn relation_check<S: Scalar>(interp: &Interp<S>, rel: &Relation<S>, degree: usize) -> Result<RelationReport> {
    for (_, w) in rel.lhs.iter().chain(&rel.rhs) {
        w.target(rel.k)?;
    }
    let cap = degree + rel.lhs.iter().chain(&rel.rhs).map(|(_, w)| raising(w)).max().unwrap_or(0);
    let basis = spanning_set(rel.k, degree);
    let cases = basis.len();
    for (lam, a) in basis {
        let f = VElem::basis(rel.k, cap, lam, a, S::one());
        let l = interp.eval_sum(&rel.lhs, &f)?;
        let r = interp.eval_sum(&rel.rhs, &f)?;
        if l.k() != r.k() && !(l.is_zero() && r.is_zero()) || l.terms() != r.terms() {
            return Ok(RelationReport {
                name: rel.name.clone(),
                k: rel.k,
                cases,
                mismatch: Some(Witness { input: f.to_string(), lhs: l.to_string(), rhs: r.to_string() }),
            });
        }
    }
    Ok(RelationReport { name: rel.name.clone(), k: rel.k, cases, mismatch: None })
}

/// Generator names for one of the two algebras: `A_q` realized by
/// `(T, d_-, d_+, y)` or `A_{q^-1}` realized by `(T^-1, d_-, d_+^*, z)`.
#[derive(Clone, Copy, Debug)]
pub struct Family {
    pub kind: AlgebraKind,
}

impl Family {
    pub const BASE: Family = Family { kind: AlgebraKind::Aq };
    pub const CONJUGATE: Family = Family { kind: AlgebraKind::AqInv };

    fn t(self, i: usize) -> Gen {
        match self.kind {
            AlgebraKind::Aq => Gen::T(i),
            AlgebraKind::AqInv => Gen::TInv(i),
        }
    }
    fn tinv(self, i: usize) -> Gen {
        match self.kind {
            AlgebraKind::Aq => Gen::TInv(i),
            AlgebraKind::AqInv => Gen::T(i),
        }
    }
    fn dp(self) -> Gen {
        match self.kind {
            AlgebraKind::Aq => Gen::DPlus,
            AlgebraKind::AqInv => Gen::DPlusStar,
        }
    }
    fn y(self, i: usize) -> Gen {
        match self.kind {
            AlgebraKind::Aq => Gen::Y(i),
            AlgebraKind::AqInv => Gen::Z(i),
        }
    }
    fn label(self) -> &'static str {
        match self.kind {
            AlgebraKind::Aq => "A_q",
            AlgebraKind::AqInv => "A_q^-1",
        }
    }
}

fn one<S: Scalar>(w: Vec<Gen>) -> OpSum<S> {
    vec![(S::one(), Word(w))]
}

fn rel<S: Scalar>(name: String, k: usize, lhs: OpSum<S>, rhs: OpSum<S>) -> Relation<S> {
    Relation { name, k, lhs, rhs }
}

/// Defining relations of the Dyck path algebra starting at vertex `k`.
pub fn algebra_relations<S: Scalar>(fam: Family, k: usize) -> Vec<Relation<S>> {
    let qq: S = fam.kind.param();
    let l = fam.label();
    let (dm, dp) = (Gen::DMinus, fam.dp());
    let t = |i| fam.t(i);
    let mut out = Vec::new();
    for i in 1..k {
        out.push(rel(
            format!("{l} quadratic T{i} at k={k}"),
            k,
            vec![(S::one(), Word(vec![t(i), t(i)])), (qq.sub(&S::one()), Word(vec![t(i)])), (qq.neg(), Word::empty())],
            vec![],
        ));
    }
    for i in 1..k.saturating_sub(1) {
        out.push(rel(format!("{l} braid T{i} at k={k}"), k, one(vec![t(i), t(i + 1), t(i)]), one(vec![t(i + 1), t(i), t(i + 1)])));
    }
    for i in 1..k {
        for j in i + 2..k {
            out.push(rel(format!("{l} far commute T{i} T{j} at k={k}"), k, one(vec![t(i), t(j)]), one(vec![t(j), t(i)])));
        }
    }
    if k >= 2 {
        out.push(rel(format!("{l} d-^2 T{} = d-^2 at k={k}", k - 1), k, one(vec![dm, dm, t(k - 1)]), one(vec![dm, dm])));
    }
    for i in 1..k.saturating_sub(1) {
        out.push(rel(format!("{l} T{i} d- = d- T{i} at k={k}"), k, one(vec![t(i), dm]), one(vec![dm, t(i)])));
    }
    out.push(rel(format!("{l} T1 d+^2 = d+^2 at k={k}"), k, one(vec![t(1), dp, dp]), one(vec![dp, dp])));
    for i in 1..k {
        out.push(rel(format!("{l} d+ T{i} = T{} d+ at k={k}", i + 1), k, one(vec![dp, t(i)]), one(vec![t(i + 1), dp])));
    }
    if k >= 2 {
        let tk = t(k - 1);
        out.push(rel(
            format!("{l} d- [d+,d-] T{} = Q [d+,d-] d- at k={k}", k - 1),
            k,
            vec![(S::one(), Word(vec![dm, dp, dm, tk])), (S::from_int(-1), Word(vec![dm, dm, dp, tk]))],
            vec![(qq.clone(), Word(vec![dp, dm, dm])), (qq.neg(), Word(vec![dm, dp, dm]))],
        ));
    }
    if k >= 1 {
        out.push(rel(
            format!("{l} T1 [d+,d-] d+ = Q d+ [d+,d-] at k={k}"),
            k,
            vec![(S::one(), Word(vec![t(1), dp, dm, dp])), (S::from_int(-1), Word(vec![t(1), dm, dp, dp]))],
            vec![(qq.clone(), Word(vec![dp, dp, dm])), (qq.neg(), Word(vec![dp, dm, dp]))],
        ));
    }
    out
}

/// Relations for the commuting family `y_i` (or `z_i`) at vertex `k >= 1`,
/// including its expression through the commutator.
pub fn hecke_y_relations<S: Scalar>(fam: Family, k: usize) -> Vec<Relation<S>> {
    let qq: S = fam.kind.param();
    let l = fam.label();
    let (dm, dp) = (Gen::DMinus, fam.dp());
    let mut out = Vec::new();
    if k == 0 {
        return out;
    }
    // Q^{k-1} (Q - 1) y_1 = (d+ d- - d- d+) T_{k↘1}
    let down: Vec<Gen> = (1..k).rev().map(|i| fam.t(i)).collect();
    let mut a = vec![dp, dm];
    a.extend(&down);
    let mut b = vec![dm, dp];
    b.extend(&down);
    let scale = S::q_pow(fam.kind.q_sign() * (k as i32 - 1)).mul(&qq.sub(&S::one()));
    out.push(rel(
        format!("{l} y1 from commutator at k={k}"),
        k,
        vec![(scale, Word(vec![fam.y(1)]))],
        vec![(S::one(), Word(a)), (S::from_int(-1), Word(b))],
    ));
    for i in 1..k {
        out.push(rel(
            format!("{l} y{} = Q T{i}^-1 y{i} T{i}^-1 at k={k}", i + 1),
            k,
            one(vec![fam.y(i + 1)]),
            vec![(qq.clone(), Word(vec![fam.tinv(i), fam.y(i), fam.tinv(i)]))],
        ));
    }
    for i in 1..=k {
        for j in 1..k {
            if i != j && i != j + 1 {
                out.push(rel(format!("{l} y{i} T{j} = T{j} y{i} at k={k}"), k, one(vec![fam.y(i), fam.t(j)]), one(vec![fam.t(j), fam.y(i)])));
            }
        }
    }
    for i in 1..k {
        out.push(rel(format!("{l} y{i} d- = d- y{i} at k={k}"), k, one(vec![fam.y(i), dm]), one(vec![dm, fam.y(i)])));
    }
    for i in 1..=k {
        // d+ y_i = T_{1↗i+1} y_i T*_{i+1↘1} d+
        let mut w: Vec<Gen> = (1..=i).map(|j| fam.t(j)).collect();
        w.push(fam.y(i));
        w.extend((1..=i).rev().map(|j| fam.tinv(j)));
        w.push(dp);
        out.push(rel(format!("{l} d+ y{i} intertwining at k={k}"), k, one(vec![dp, fam.y(i)]), one(w)));
    }
    for i in 1..=k {
        for j in i + 1..=k {
            out.push(rel(format!("{l} y{i} y{j} commute at k={k}"), k, one(vec![fam.y(i), fam.y(j)]), one(vec![fam.y(j), fam.y(i)])));
        }
    }
    out
}

/// Compatibility between the two actions at vertex `k`.
pub fn intertwining_relations<S: Scalar>(k: usize) -> Vec<Relation<S>> {
    let mut out = Vec::new();
    for i in 1..=k {
        out.push(rel(format!("d+ z{i} = z{} d+ at k={k}", i + 1), k, one(vec![Gen::DPlus, Gen::Z(i)]), one(vec![Gen::Z(i + 1), Gen::DPlus])));
        out.push(rel(
            format!("d+* y{i} = y{} d+* at k={k}", i + 1),
            k,
            one(vec![Gen::DPlusStar, Gen::Y(i)]),
            one(vec![Gen::Y(i + 1), Gen::DPlusStar]),
        ));
    }
    let c = S::t().mul(&S::q_pow(k as i32 + 1)).neg();
    out.push(rel(format!("z1 d+ = -t q^(k+1) y1 d+* at k={k}"), k, one(vec![Gen::Z(1), Gen::DPlus]), vec![(c, Word(vec![Gen::Y(1), Gen::DPlusStar]))]));
    out
}

/// Relations of the elements `ỹ_i` at vertex `k`, in unnormalized operators
/// (the braid form rescales `T` by `q^(-1/2)`).
pub fn ytilde_relations<S: Scalar>(k: usize) -> Vec<Relation<S>> {
    let mut out = Vec::new();
    for i in 1..=k {
        for j in 1..k {
            if i != j && i != j + 1 {
                out.push(rel(format!("ytilde{i} T{j} commute at k={k}"), k, one(vec![Gen::YTilde(i), Gen::T(j)]), one(vec![Gen::T(j), Gen::YTilde(i)])));
            }
        }
    }
    for i in 1..k {
        out.push(rel(
            format!("ytilde{} = T{i} ytilde{i} T{i} at k={k}", i + 1),
            k,
            one(vec![Gen::YTilde(i + 1)]),
            one(vec![Gen::T(i), Gen::YTilde(i), Gen::T(i)]),
        ));
    }
    for i in 1..=k {
        for j in i + 1..=k {
            out.push(rel(format!("ytilde{i} ytilde{j} commute at k={k}"), k, one(vec![Gen::YTilde(i), Gen::YTilde(j)]), one(vec![Gen::YTilde(j), Gen::YTilde(i)])));
        }
    }
    if k >= 2 {
        out.push(rel(
            format!("q ytilde1 T1 z1 = T1 z1 T1 ytilde1 T1 at k={k}"),
            k,
            vec![(S::q(), Word(vec![Gen::YTilde(1), Gen::T(1), Gen::Z(1)]))],
            one(vec![Gen::T(1), Gen::Z(1), Gen::T(1), Gen::YTilde(1), Gen::T(1)]),
        ));
    }
    out
}
