//! Plethystic substitution and the plethystic exponential.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::basis::{tables, Basis};
use super::partition::Partition;
use super::{add_into, SymFunc};
use crate::coeffring::{Int, Laurent, Mono, Scalar};
use crate::error::{Error, Result};

/// `x * X + sum_j c_j * mu_j`, with integer-coefficient Laurent scalars and
/// `mu_j` monomials in auxiliary variables (exponent vectors).
#[derive(Clone, Debug, PartialEq)]
pub struct Alphabet {
    pub x: Laurent,
    pub terms: Vec<(Laurent, Vec<i32>)>,
}

impl Alphabet {
    /// The identity alphabet `X`.
    pub fn x() -> Self {
        Alphabet { x: Laurent::one(), terms: Vec::new() }
    }

    /// `X + c * aux^exps`.
    pub fn shifted(c: Laurent, exps: Vec<i32>) -> Self {
        Alphabet { x: Laurent::one(), terms: vec![(c, exps)] }
    }

    fn n_aux(&self) -> usize {
        self.terms.iter().map(|(_, e)| e.len()).max().unwrap_or(0)
    }
}

/// Substitutes the alphabet into `f` through the power-sum basis, using
/// `p_r[w] = w^r` for every monomial `w` in `u`, `t` and the auxiliary
/// variables. Returns the coefficient of each auxiliary monomial.
pub fn plethystic_substitute<S: Scalar>(f: &SymFunc<S>, a: &Alphabet) -> BTreeMap<Vec<i32>, SymFunc<S>> {
    let n_aux = a.n_aux();
    let pad = |e: &Vec<i32>| {
        let mut v = e.clone();
        v.resize(n_aux, 0);
        v
    };
    let mut out: BTreeMap<Vec<i32>, SymFunc<S>> = BTreeMap::new();
    for (rho, coef) in f.to_basis(Basis::PowerSum) {
        // (X-power-sum parts, aux exponents) -> scalar
        let mut state: BTreeMap<(Vec<u8>, Vec<i32>), Laurent> = BTreeMap::new();
        state.insert((Vec::new(), vec![0; n_aux]), Laurent::one());
        for &r in rho.parts() {
            let mut next: BTreeMap<(Vec<u8>, Vec<i32>), Laurent> = BTreeMap::new();
            for ((xs, ys), c) in &state {
                let cx = a.x.adams(r as i32);
                if !cx.is_zero() {
                    let mut xs2 = xs.clone();
                    xs2.push(r);
                    let e = next.entry((xs2, ys.clone())).or_default();
                    *e = e.add(&c.mul(&cx));
                }
                for (cj, mu) in &a.terms {
                    let mu = pad(mu);
                    let ys2: Vec<i32> = ys.iter().zip(&mu).map(|(y, m)| y + m * r as i32).collect();
                    let e = next.entry((xs.clone(), ys2)).or_default();
                    *e = e.add(&c.mul(&cj.adams(r as i32)));
                }
            }
            next.retain(|_, c| !c.is_zero());
            state = next;
        }
        for ((xs, ys), c) in state {
            let sigma = Partition::new(xs);
            let term = SymFunc::basis_element(f.cap(), Basis::PowerSum, &sigma).scale(&coef.mul(&S::from_laurent(&c)));
            let slot = out.entry(ys).or_insert_with(|| SymFunc::zero(f.cap()));
            slot.add_assign(&term);
        }
    }
    out.retain(|_, g| !g.is_zero());
    out
}

/// `m_nu[c]` for an integer-coefficient Laurent scalar `c`.
pub fn scalar_alphabet_value(nu: &Partition, c: &Laurent) -> Laurent {
    static CACHE: OnceLock<RwLock<HashMap<(Partition, Laurent), Laurent>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (nu.clone(), c.clone());
    if let Some(v) = cache.read().unwrap().get(&key) {
        return v.clone();
    }
    let t = tables(nu.size());
    let row = &t.from_m(Basis::PowerSum)[t.index[nu]];
    let mut acc: BTreeMap<Mono, BigRational> = BTreeMap::new();
    for (rho, r) in t.parts.iter().zip(row) {
        if r.is_zero() {
            continue;
        }
        let mut prod = Laurent::one();
        for &part in rho.parts() {
            prod = prod.mul(&c.adams(part as i32));
        }
        for (m, x) in prod.terms() {
            *acc.entry(*m).or_insert_with(BigRational::zero) += r * BigRational::from_integer(BigInt::from(*x));
        }
    }
    let v = Laurent::from_terms(acc.into_iter().map(|(m, x)| {
        assert!(x.is_integer(), "monomial value at a scalar alphabet must be integral");
        let n: Int = x.to_integer().try_into().expect("integer coefficient overflow");
        (m, n)
    }));
    cache.write().unwrap().insert(key, v.clone());
    v
}

/// Terms of `m_lam[X + c y] = sum_nu y^{|nu|} m_nu[c] m_{lam \ nu}[X]` as
/// `(|nu|, lam \ nu, m_nu[c])`, zero terms omitted.
pub fn shift_expansion(lam: &Partition, c: &Laurent) -> Arc<Vec<(usize, Partition, Laurent)>> {
    type Entry = Arc<Vec<(usize, Partition, Laurent)>>;
    static CACHE: OnceLock<RwLock<HashMap<(Partition, Laurent), Entry>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (lam.clone(), c.clone());
    if let Some(v) = cache.read().unwrap().get(&key) {
        return v.clone();
    }
    let mut out = Vec::new();
    for (nu, rest) in lam.splits() {
        let val = scalar_alphabet_value(&nu, c);
        if !val.is_zero() {
            out.push((nu.size(), rest, val));
        }
    }
    let v = Arc::new(out);
    cache.write().unwrap().insert(key, v.clone());
    v
}

/// Argument `w * v^exp * X` of a plethystic exponential, with `w` a signed
/// monomial scalar.
#[derive(Clone, Debug, PartialEq)]
pub struct PExpArg {
    pub scalar: Laurent,
    pub exp: i32,
}

/// Coefficients of `v^i` in `pExp[w v^e X]` for `i` in `range`.
///
/// Uses `h_n[w X] = w^n h_n[X]` and `h_n[-w X] = (-w)^n e_n[X]`.
pub fn pexp_coefficients<S: Scalar>(
    arg: &PExpArg,
    cap: usize,
    range: std::ops::RangeInclusive<i32>,
) -> Result<BTreeMap<i32, SymFunc<S>>> {
    let (sign, w) = match arg.scalar.as_monomial() {
        Some((1, m)) => (1, m),
        Some((-1, m)) => (-1, m),
        _ => return Err(Error::InvalidArgument("pExp argument needs a signed monomial scalar".into())),
    };
    let mut out = BTreeMap::new();
    for i in range {
        let n = if arg.exp == 0 {
            if i == 0 {
                Some(0)
            } else {
                None
            }
        } else if i % arg.exp == 0 && i / arg.exp >= 0 {
            Some((i / arg.exp) as usize)
        } else {
            None
        };
        let Some(n) = n else { continue };
        if n > cap {
            continue;
        }
        let wn = S::from_laurent(&Laurent::monomial(1, w.pow(n as i32)));
        let f = if sign == 1 {
            SymFunc::h(cap, n).scale(&wn)
        } else {
            let s = if n % 2 == 0 { 1 } else { -1 };
            SymFunc::e(cap, n).scale(&wn.scale_int(s))
        };
        if !f.is_zero() {
            out.insert(i, f);
        }
    }
    Ok(out)
}

/// Sum over `nu` of `m_{lam \ nu}[X] * m_nu[c] * g(|nu|)` folded into `out`.
pub(crate) fn accumulate_shift<S: Scalar>(
    out: &mut BTreeMap<Partition, S>,
    lam: &Partition,
    c: &Laurent,
    coef: &S,
    mut g: impl FnMut(usize) -> Option<SymFunc<S>>,
) {
    for (size, rest, val) in shift_expansion(lam, c).iter() {
        let Some(tail) = g(*size) else { continue };
        let head = SymFunc::monomial(tail.cap(), rest.clone(), coef.mul(&S::from_laurent(val)));
        for (l, x) in head.mul(&tail).into_terms() {
            add_into(out, l, x);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::CoefRat;
    use crate::symfunc::partitions;

    type F = SymFunc<CoefRat>;

    fn qm1() -> Laurent {
        Laurent::from_terms([(Mono::new(2, 0), 1), (Mono::ONE, -1)])
    }

    #[test]
    fn power_sums_under_shift() {
        let a = Alphabet::shifted(qm1(), vec![1]);
        let r = plethystic_substitute(&F::p(4, 2), &a);
        assert_eq!(r[&vec![0]], F::p(4, 2));
        let q2m1 = CoefRat::q().mul(&CoefRat::q()).sub(&CoefRat::one());
        assert_eq!(r[&vec![2]], F::one(4).scale(&q2m1));
        assert_eq!(r.len(), 2);
        let r1 = plethystic_substitute(&F::e(4, 1), &a);
        assert_eq!(r1[&vec![1]], F::one(4).scale(&CoefRat::q().sub(&CoefRat::one())));
    }

    #[test]
    fn identity_alphabet() {
        for lam in partitions(4) {
            let f = F::monomial(5, lam, CoefRat::t());
            let r = plethystic_substitute(&f, &Alphabet::x());
            assert_eq!(r.len(), 1);
            assert_eq!(r[&vec![]], f);
        }
    }

    #[test]
    fn shift_expansion_matches_power_sum_route() {
        let c = qm1();
        for n in 0..=4 {
            for lam in partitions(n) {
                let f = F::monomial(4, lam.clone(), CoefRat::one());
                let via_p = plethystic_substitute(&f, &Alphabet::shifted(c.clone(), vec![1]));
                let mut via_split: BTreeMap<Vec<i32>, F> = BTreeMap::new();
                for (size, rest, val) in shift_expansion(&lam, &c).iter() {
                    let term = F::monomial(4, rest.clone(), CoefRat::from_laurent(val.clone()));
                    via_split.entry(vec![*size as i32]).or_insert_with(|| F::zero(4)).add_assign(&term);
                }
                via_split.retain(|_, g| !g.is_zero());
                assert_eq!(via_p, via_split, "{lam}");
            }
        }
    }

    #[test]
    fn pexp_examples() {
        let neg_inv = PExpArg { scalar: Laurent::constant(-1), exp: -1 };
        let c = pexp_coefficients::<CoefRat>(&neg_inv, 3, -1..=-1).unwrap();
        assert_eq!(c[&-1], F::e(3, 1).neg());
        let neg_z = PExpArg { scalar: Laurent::constant(-1), exp: 1 };
        let c = pexp_coefficients::<CoefRat>(&neg_z, 4, 0..=4).unwrap();
        assert_eq!(c[&0], F::one(4));
        for n in 1..=4 {
            let s = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(c[&n], F::e(4, n as usize).scale(&CoefRat::from_int(s)));
        }
        let inv_z = PExpArg { scalar: Laurent::one(), exp: -1 };
        let c = pexp_coefficients::<CoefRat>(&inv_z, 3, -2..=-2).unwrap();
        assert_eq!(c[&-2], F::h(3, 2));
    }

    #[test]
    fn scalar_alphabet_small_values() {
        // m_1[q - 1] = q - 1, m_2[q - 1] = q^2 - 1, m_11[q - 1] = 1 - q
        let c = qm1();
        assert_eq!(scalar_alphabet_value(&Partition::single(1), &c), c);
        let m2 = scalar_alphabet_value(&Partition::single(2), &c);
        assert_eq!(m2, Laurent::from_terms([(Mono::new(4, 0), 1), (Mono::ONE, -1)]));
        let m11 = scalar_alphabet_value(&Partition::new(vec![1, 1]), &c);
        assert_eq!(m11, c.neg());
    }
}
