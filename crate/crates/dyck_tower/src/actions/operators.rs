//! Constant-term operators `C_a`, `D_n` and the operator side of the
//! compositional shuffle identity.

use std::collections::BTreeMap;

use crate::coeffring::{Laurent, Mono, Scalar};
use crate::combinat::{check_composition, check_slope, DyckPath};
use crate::error::{Error, Result};
use crate::symfunc::{accumulate_shift, SymFunc};
use crate::vkspace::{act_dminus, act_dplus, act_dplus_star, act_z, VElem};

use super::tower::{ActionHandle, Tower};

/// `(C_a F)[X] = (-q)^{1-a} F[X - (1 - q^-1)/z] pExp[zX] |_{z^a}`.
pub fn op_c<S: Scalar>(a: usize, f: &SymFunc<S>) -> SymFunc<S> {
    let shift = Laurent::from_terms([(Mono::new(-2, 0), 1), (Mono::ONE, -1)]);
    let deg = f.terms().keys().map(|l| l.size()).max().unwrap_or(0) + a;
    let cap = f.cap().max(deg);
    let mut out = BTreeMap::new();
    for (lam, c) in f.terms() {
        accumulate_shift(&mut out, lam, &shift, c, |s| Some(SymFunc::h(cap, s + a)));
    }
    let sign = if a % 2 == 1 { S::one() } else { S::one().neg() };
    SymFunc::from_terms(cap, out).scale(&S::q_pow(1 - a as i32).mul(&sign))
}

/// `D_n F = F[X + (q-1)(t-1)/z] pExp[-zX] |_{z^n}`; `n` may be negative.
pub fn op_d<S: Scalar>(n: i64, f: &SymFunc<S>) -> SymFunc<S> {
    let shift = Laurent::from_terms([(Mono::new(2, 2), 1), (Mono::new(2, 0), -1), (Mono::new(0, 2), -1), (Mono::ONE, 1)]);
    let deg = f.terms().keys().map(|l| l.size() as i64).max().unwrap_or(0) + n;
    let cap = f.cap().max(deg.max(0) as usize);
    let mut out = BTreeMap::new();
    for (lam, c) in f.terms() {
        accumulate_shift(&mut out, lam, &shift, c, |s| {
            let j = n + s as i64;
            (j >= 0).then(|| {
                let e = SymFunc::e(cap, j as usize);
                if j % 2 == 1 {
                    e.neg()
                } else {
                    e
                }
            })
        });
    }
    SymFunc::from_terms(cap, out)
}

fn signed_q<S: Scalar>(negative: bool, e: i32) -> S {
    let c = S::q_pow(e);
    if negative {
        c.neg()
    } else {
        c
    }
}

/// `rho(d_-^r y_1^{a_1-1} ... y_r^{a_r-1} d_+^r) 1` with `r = len(alpha)`.
pub fn composition_word<S: Scalar>(rho: &ActionHandle<S>, alpha: &[usize], cap: usize) -> Result<VElem<S>> {
    let r = alpha.len();
    let mut f = VElem::one(0, cap);
    for _ in 0..r {
        f = rho.dplus(&f)?;
    }
    for (i, &a) in alpha.iter().enumerate().rev() {
        for _ in 1..a {
            f = rho.y(i + 1, &f)?;
        }
    }
    for _ in 0..r {
        f = act_dminus(&f)?;
    }
    Ok(f)
}

/// `(-1)^{g(m1+1)} q^{r-g} rho*_{m1,n1}(d_-^r y_1^{a_1-1} ... y_r^{a_r-1} d_+^r) 1`.
pub fn lhs_compositional<S: Scalar>(tower: &Tower<S>, m1: usize, n1: usize, g: usize, alpha: &[usize]) -> Result<SymFunc<S>> {
    check_slope(m1, n1)?;
    check_composition(alpha, g)?;
    let rho = tower.build(m1, n1, true)?;
    let f = composition_word(&rho, alpha, g * n1)?;
    let c = signed_q::<S>(g * (m1 + 1) % 2 == 1, alpha.len() as i32 - g as i32);
    Ok(f.scale(&c).to_sym())
}

/// Compares `C_{a_1} ... C_{a_r} 1` with the word formula under `rho*_{0,1}`.
pub fn c_alpha_identity_check<S: Scalar>(tower: &Tower<S>, alpha: &[usize]) -> Result<bool> {
    if alpha.is_empty() {
        return Err(Error::InvalidComposition("empty composition".into()));
    }
    let k: usize = alpha.iter().sum();
    let mut lhs = SymFunc::one(k);
    for &a in alpha.iter().rev() {
        lhs = op_c(a, &lhs);
    }
    let rho = tower.build(0, 1, true)?;
    let c = signed_q::<S>(k % 2 == 1, alpha.len() as i32 - k as i32);
    let rhs = composition_word(&rho, alpha, k)?.scale(&c).to_sym();
    Ok(lhs.with_cap(k) == rhs)
}

/// Evaluates a square path as a word: North steps act by `d_-`, East steps by
/// `east`, read from the end of the path.
pub fn path_word_eval<S: Scalar>(p: &DyckPath, east: impl Fn(&VElem<S>) -> Result<VElem<S>>) -> Result<SymFunc<S>> {
    let mut f = VElem::one(0, p.n());
    for &north in p.steps().iter().rev() {
        f = if north { act_dminus(&f)? } else { east(&f)? };
    }
    Ok(f.to_sym())
}

/// Both realizations of the conjugated characteristic function of `p`:
/// East steps as `-(qt)^-1 z_1 d_+` and as `q^k y_1 d_+^*`.
pub fn nabla_conjugation_pair<S: Scalar>(p: &DyckPath) -> Result<(SymFunc<S>, SymFunc<S>)> {
    if p.m() != p.n() {
        return Err(Error::InvalidArgument(format!("path is {}x{}, not square", p.m(), p.n())));
    }
    let c = S::monomial(-1, -2, -1);
    let left = path_word_eval(p, |f| Ok(act_z(1, &act_dplus(f))?.scale(&c)))?;
    let right = path_word_eval(p, |f| Ok(act_dplus_star(f).mul_y(1).scale(&S::q_pow(f.k() as i32))))?;
    Ok((left, right))
}

pub fn nabla_conjugation_check<S: Scalar>(p: &DyckPath) -> Result<bool> {
    let (a, b) = nabla_conjugation_pair::<S>(p)?;
    Ok(a == b)
}
