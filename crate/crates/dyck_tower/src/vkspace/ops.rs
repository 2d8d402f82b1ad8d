//! The base operators `T_i`, `d_-`, `d_+`, `d_+^*` on `V_*` and the operators
//! derived from them.

use std::sync::OnceLock;

use super::velem::VElem;
use crate::coeffring::{Laurent, Mono, Scalar};
use crate::error::{Error, Result};
use crate::symfunc::{monomial_product, shift_expansion, Partition};

fn q_minus_one() -> &'static Laurent {
    static C: OnceLock<Laurent> = OnceLock::new();
    C.get_or_init(|| Laurent::from_terms([(Mono::new(2, 0), 1), (Mono::ONE, -1)]))
}

fn one_minus_q() -> &'static Laurent {
    static C: OnceLock<Laurent> = OnceLock::new();
    C.get_or_init(|| q_minus_one().neg())
}

fn check_index(i: usize, k: usize) -> Result<()> {
    if i == 0 || i >= k {
        return Err(Error::IndexOutOfRange { index: i, k });
    }
    Ok(())
}

/// `T_i` (or its inverse) acting on `y_i`, `y_{i+1}`.
pub fn act_t<S: Scalar>(i: usize, f: &VElem<S>, inverse: bool) -> Result<VElem<S>> {
    check_index(i, f.k())?;
    let t = apply_t(i, f);
    if !inverse {
        return Ok(t);
    }
    // T^{-1} = (T + q - 1) / q from (T - 1)(T + q) = 0
    let qm1 = S::from_laurent(q_minus_one());
    t.add(&f.scale(&qm1)).div_scalar(&S::q())
}

fn apply_t<S: Scalar>(i: usize, f: &VElem<S>) -> VElem<S> {
    let (xi, yi) = (i - 1, i);
    let qm1 = S::from_laurent(q_minus_one());
    let mut out = VElem::zero(f.k(), f.cap());
    for ((lam, e), c) in f.terms() {
        let (a, b) = (e[xi], e[yi]);
        let mut sw = e.clone();
        sw.swap(xi, yi);
        out.push((lam.clone(), sw), c.clone());
        if a == b {
            continue;
        }
        // (q-1)(x^{a+1} y^b - x^{b+1} y^a) / (y - x), with x = y_i, y = y_{i+1}
        let (lo, hi, sign) = if a > b { (b, a, -1) } else { (a, b, 1) };
        let coef = qm1.mul(c).scale_int(sign);
        for j in 0..(hi - lo) {
            let mut ex = e.clone();
            ex[xi] = lo + 1 + j;
            ex[yi] = hi - 1 - j;
            out.push((lam.clone(), ex), coef.clone());
        }
    }
    out
}

/// `d_- : V_k -> V_{k-1}`: pairs the `y_k^j` part of `F[X - (q-1) y_k]`
/// with `(-1)^j e_j[X]`.
pub fn act_dminus<S: Scalar>(f: &VElem<S>) -> Result<VElem<S>> {
    let k = f.k();
    if k == 0 {
        return Err(Error::NoStrand);
    }
    let mut out = VElem::zero(k - 1, f.cap());
    for ((lam, e), c) in f.terms() {
        let last = e[k - 1] as usize;
        let rest_y = e[..k - 1].to_vec();
        for (size, rest, val) in shift_expansion(lam, one_minus_q()).iter() {
            let n = size + last;
            let sign = if n.is_multiple_of(2) { 1 } else { -1 };
            let coef = c.mul(&S::from_laurent(val)).scale_int(sign);
            let ones = Partition::new(vec![1; n]);
            for (l, mult) in monomial_product(rest, &ones).iter() {
                out.push((l.clone(), rest_y.clone()), coef.scale_int(*mult as i128));
            }
        }
    }
    Ok(out)
}

/// `F[X + (q-1) y_{k+1}]` as an element of `V_{k+1}`.
fn shift_new_strand<S: Scalar>(f: &VElem<S>) -> VElem<S> {
    let k = f.k();
    let mut out = VElem::zero(k + 1, f.cap());
    for ((lam, e), c) in f.terms() {
        for (size, rest, val) in shift_expansion(lam, q_minus_one()).iter() {
            let mut ex = e.clone();
            ex.push(*size as u8);
            out.push((rest.clone(), ex), c.mul(&S::from_laurent(val)));
        }
    }
    out
}

/// `d_+ F = -T_{1↗k+1} (y_{k+1} F[X + (q-1) y_{k+1}])`.
pub fn act_dplus<S: Scalar>(f: &VElem<S>) -> VElem<S> {
    let k = f.k();
    let mut g = shift_new_strand(f).mul_y(k + 1);
    for i in (1..=k).rev() {
        g = apply_t(i, &g);
    }
    g.neg()
}

/// `d_+^* F = gamma(F[X + (q-1) y_{k+1}])` with `gamma: y_i -> y_{i+1}`,
/// `y_{k+1} -> t y_1`.
pub fn act_dplus_star<S: Scalar>(f: &VElem<S>) -> VElem<S> {
    let g = shift_new_strand(f);
    let k1 = g.k();
    let mut out = VElem::zero(k1, g.cap());
    for ((lam, e), c) in g.terms() {
        let mut ex = Vec::with_capacity(k1);
        ex.push(e[k1 - 1]);
        ex.extend_from_slice(&e[..k1 - 1]);
        out.push((lam.clone(), ex), c.mul(&S::t_pow(e[k1 - 1] as i32)));
    }
    out
}

/// Multiplication by `y_i`.
pub fn act_y<S: Scalar>(i: usize, f: &VElem<S>) -> Result<VElem<S>> {
    if i == 0 || i > f.k() {
        return Err(Error::IndexOutOfRange { index: i, k: f.k() });
    }
    Ok(f.mul_y(i))
}

/// Which Hecke parameter a family of generators satisfies: `A_q` uses
/// `(T, q)`, `A_{q^-1}` uses `(T^{-1}, q^{-1})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum AlgebraKind {
    Aq,
    AqInv,
}

impl AlgebraKind {
    /// Exponent of `q` giving the algebra parameter `Q`.
    pub fn q_sign(self) -> i32 {
        match self {
            AlgebraKind::Aq => 1,
            AlgebraKind::AqInv => -1,
        }
    }

    pub fn param<S: Scalar>(self) -> S {
        S::q_pow(self.q_sign())
    }

    /// The algebra's `T_i` (or its inverse) in terms of the base `T_i`.
    pub fn t<S: Scalar>(self, i: usize, f: &VElem<S>, inverse: bool) -> Result<VElem<S>> {
        act_t(i, f, inverse ^ (self == AlgebraKind::AqInv))
    }
}

pub type DynOp<'a, S> = &'a dyn Fn(&VElem<S>) -> Result<VElem<S>>;

/// `y_1 = (d_+ d_- - d_- d_+) T_{k↘1} / (Q^{k-1} (Q - 1))` for an algebra of
/// the given kind with raising operator `dp`.
pub fn derived_first<S: Scalar>(kind: AlgebraKind, dp: DynOp<S>, f: &VElem<S>) -> Result<VElem<S>> {
    let k = f.k();
    if k == 0 {
        return Err(Error::NoStrand);
    }
    let mut g = f.clone();
    for i in 1..k {
        g = kind.t(i, &g, false)?;
    }
    let a = dp(&act_dminus(&g)?)?;
    let b = act_dminus(&dp(&g)?)?;
    let qq: S = kind.param();
    let denom = S::q_pow(kind.q_sign() * (k as i32 - 1)).mul(&qq.sub(&S::one()));
    a.sub(&b).div_scalar(&denom)
}

/// `y_{i+1} = Q T_i^{-1} y_i T_i^{-1}` unrolled from `y_1`.
pub fn derived_index<S: Scalar>(kind: AlgebraKind, first: DynOp<S>, i: usize, f: &VElem<S>) -> Result<VElem<S>> {
    if i == 0 || i > f.k() {
        return Err(Error::IndexOutOfRange { index: i, k: f.k() });
    }
    if i == 1 {
        return first(f);
    }
    let j = i - 1;
    let g = kind.t(j, f, true)?;
    let g = derived_index(kind, first, j, &g)?;
    Ok(kind.t(j, &g, true)?.scale(&kind.param()))
}

/// `z_i` of the base conjugate action.
pub fn act_z<S: Scalar>(i: usize, f: &VElem<S>) -> Result<VElem<S>> {
    let dps = |g: &VElem<S>| Ok(act_dplus_star(g));
    let first = |g: &VElem<S>| derived_first(AlgebraKind::AqInv, &dps, g);
    derived_index(AlgebraKind::AqInv, &first, i, f)
}

/// `y_i` obtained from the commutator formula of the base action (agrees
/// with multiplication by `y_i`).
pub fn act_y_commutator<S: Scalar>(i: usize, f: &VElem<S>) -> Result<VElem<S>> {
    let dp = |g: &VElem<S>| Ok(act_dplus(g));
    let first = |g: &VElem<S>| derived_first(AlgebraKind::Aq, &dp, g);
    derived_index(AlgebraKind::Aq, &first, i, f)
}

/// `T_{i↗j}` applied to `f` (rightmost factor first), with the convention
/// `T_{i↗j} = T*_{i↘j}` when `i > j`.
pub fn train_up<S: Scalar>(i: usize, j: usize, star: bool, f: &VElem<S>) -> Result<VElem<S>> {
    let mut g = f.clone();
    if i <= j {
        // T_i T_{i+1} ... T_{j-1}: T_{j-1} acts first
        for l in (i..j).rev() {
            g = act_t(l, &g, star)?;
        }
    } else {
        // T_{i↘j} with the opposite star: T_{i-1} ... T_j, T_j acts first
        for l in j..i {
            g = act_t(l, &g, !star)?;
        }
    }
    Ok(g)
}

/// `T_{j↘i}` applied to `f`, with `T_{j↘i} = T*_{j↗i}` when `j < i`.
pub fn train_down<S: Scalar>(j: usize, i: usize, star: bool, f: &VElem<S>) -> Result<VElem<S>> {
    let mut g = f.clone();
    if i <= j {
        // T_{j-1} ... T_i: T_i acts first
        for l in i..j {
            g = act_t(l, &g, star)?;
        }
    } else {
        // T_{j↗i} with the opposite star
        for l in (j..i).rev() {
            g = act_t(l, &g, !star)?;
        }
    }
    Ok(g)
}

/// `ỹ_i = T_{i↘1} T_{1↗k} y_k T*_{k↘i}`.
pub fn act_ytilde<S: Scalar>(i: usize, f: &VElem<S>) -> Result<VElem<S>> {
    let k = f.k();
    if i == 0 || i > k {
        return Err(Error::IndexOutOfRange { index: i, k });
    }
    let g = train_down(k, i, true, f)?;
    let g = g.mul_y(k);
    let g = train_up(1, k, false, &g)?;
    train_down(i, 1, false, &g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::CoefRat;
    use crate::symfunc::SymFunc;

    type V = VElem<CoefRat>;

    fn y(k: usize, exps: &[u8]) -> V {
        V::basis(k, 6, Partition::empty(), exps.to_vec(), CoefRat::one())
    }

    fn q() -> CoefRat {
        CoefRat::q()
    }

    #[test]
    fn t_examples() {
        assert_eq!(act_t(1, &V::one(2, 6), false).unwrap(), V::one(2, 6));
        assert_eq!(act_t(1, &y(2, &[0, 1]), false).unwrap(), y(2, &[1, 0]).scale(&q()));
        let expect = y(2, &[0, 1]).add(&y(2, &[1, 0]).scale(&CoefRat::one().sub(&q())));
        assert_eq!(act_t(1, &y(2, &[1, 0]), false).unwrap(), expect);
        assert!(act_t(2, &V::one(2, 6), false).is_err());
    }

    #[test]
    fn t_against_synthetic_division() {
        // numerator (q-1) x F + (y - q x) swap F divided by (y - x), done on
        // coefficient lists in x for a fixed power of y
        for a in 0..5u8 {
            for b in 0..5u8 {
                let got = act_t(1, &y(2, &[a, b]), false).unwrap();
                let mut num: std::collections::BTreeMap<(u8, u8), CoefRat> = Default::default();
                let mut put = |e: (u8, u8), c: CoefRat| {
                    let v = num.entry(e).or_insert_with(CoefRat::zero);
                    *v = v.add(&c);
                };
                put((a + 1, b), q().sub(&CoefRat::one()));
                put((b, a + 1), CoefRat::one());
                put((b + 1, a), q().neg());
                // divide by (y - x): repeatedly cancel the term with largest y power
                let mut quot = V::zero(2, 6);
                num.retain(|_, c| !c.is_zero());
                while let Some((&(ex, ey), c)) = num.iter().max_by_key(|((ex, ey), _)| (*ey, *ex)) {
                    let c = c.clone();
                    assert!(ey > 0, "remainder left in division");
                    quot.push((Partition::empty(), vec![ex, ey - 1]), c.clone());
                    num.remove(&(ex, ey));
                    let v = num.entry((ex + 1, ey - 1)).or_insert_with(CoefRat::zero);
                    *v = v.add(&c);
                    num.retain(|_, c| !c.is_zero());
                }
                assert_eq!(got, quot, "a={a} b={b}");
            }
        }
    }

    #[test]
    fn t_inverse_composes_to_identity() {
        let f = y(3, &[2, 0, 1]).add(&y(3, &[0, 3, 1]).scale(&CoefRat::t()));
        for i in 1..3 {
            let g = act_t(i, &act_t(i, &f, true).unwrap(), false).unwrap();
            assert_eq!(g, f);
            let h = act_t(i, &act_t(i, &f, false).unwrap(), true).unwrap();
            assert_eq!(h, f);
        }
    }

    #[test]
    fn dminus_examples() {
        let one0 = V::one(0, 6);
        assert_eq!(act_dminus(&V::one(1, 6)).unwrap(), one0);
        let e1 = V::from_sym(0, &SymFunc::e(6, 1));
        assert_eq!(act_dminus(&y(1, &[1])).unwrap(), e1.neg());
        let e2 = V::from_sym(0, &SymFunc::e(6, 2));
        assert_eq!(act_dminus(&y(1, &[2])).unwrap(), e2);
        assert_eq!(act_dminus(&V::one(0, 6)), Err(Error::NoStrand));
    }

    #[test]
    fn dplus_examples() {
        assert_eq!(act_dplus(&V::one(0, 6)), y(1, &[1]).neg());
        assert_eq!(act_dplus(&y(1, &[1]).neg()), y(2, &[1, 1]));
        let e1 = V::from_sym(0, &SymFunc::e(6, 1));
        let expect = V::basis(1, 6, Partition::single(1), vec![1], CoefRat::one())
            .neg()
            .sub(&y(1, &[2]).scale(&q().sub(&CoefRat::one())));
        assert_eq!(act_dplus(&e1), expect);
    }

    #[test]
    fn dplus_star_examples() {
        assert_eq!(act_dplus_star(&V::one(0, 6)), V::one(1, 6));
        assert_eq!(act_dplus_star(&y(1, &[1])), y(2, &[0, 1]));
        let e1 = V::from_sym(0, &SymFunc::e(6, 1));
        let expect = V::basis(1, 6, Partition::single(1), vec![0], CoefRat::one())
            .add(&y(1, &[1]).scale(&q().sub(&CoefRat::one()).mul(&CoefRat::t())));
        assert_eq!(act_dplus_star(&e1), expect);
    }

    #[test]
    fn derived_examples() {
        let qt = q().mul(&CoefRat::t());
        assert_eq!(act_z(1, &y(1, &[1])).unwrap(), y(1, &[1]).scale(&qt));
        assert!(act_z(1, &V::one(1, 6)).unwrap().is_zero());
        assert_eq!(act_ytilde(1, &y(1, &[2])).unwrap(), y(1, &[3]));
        for k in 1..=3 {
            for i in 1..=k {
                let mut e = vec![0u8; k];
                e[0] = 1;
                let f = y(k, &e);
                assert_eq!(act_y_commutator(i, &f).unwrap(), f.mul_y(i), "k={k} i={i}");
            }
        }
    }
}
