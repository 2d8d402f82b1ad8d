//! Sparse Laurent polynomials in `u` and `t` with machine-integer coefficients.
//!
//! Terms are kept sorted ascending by the fixed monomial order (lexicographic,
//! `t` exponent first, then `u` exponent) with no zero coefficients, so
//! structural equality is value equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;

/// A monomial `u^u * t^t`; the derived ordering compares `t` first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Mono {
    pub u: i32,
    pub t: i32,
}

impl Mono {
    pub const ONE: Mono = Mono { u: 0, t: 0 };

    pub fn new(u: i32, t: i32) -> Self {
        Mono { u, t }
    }

    pub fn mul(self, o: Mono) -> Mono {
        Mono { u: self.u + o.u, t: self.t + o.t }
    }

    pub fn div(self, o: Mono) -> Mono {
        Mono { u: self.u - o.u, t: self.t - o.t }
    }

    pub fn pow(self, e: i32) -> Mono {
        Mono { u: self.u * e, t: self.t * e }
    }
}

impl Ord for Mono {
    fn cmp(&self, o: &Self) -> Ordering {
        (self.t, self.u).cmp(&(o.t, o.u))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

pub type Int = i128;

#[track_caller]
pub(crate) fn add_int(a: Int, b: Int) -> Int {
    a.checked_add(b).expect("integer coefficient overflow")
}

#[track_caller]
pub(crate) fn mul_int(a: Int, b: Int) -> Int {
    a.checked_mul(b).expect("integer coefficient overflow")
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Laurent {
    terms: Vec<(Mono, Int)>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: Int) -> Self {
        Self::monomial(c, Mono::ONE)
    }

    pub fn monomial(c: Int, m: Mono) -> Self {
        if c == 0 {
            Self::zero()
        } else {
            Laurent { terms: vec![(m, c)] }
        }
    }

    /// Builds from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I: IntoIterator<Item = (Mono, Int)>>(it: I) -> Self {
        let mut map: BTreeMap<Mono, Int> = BTreeMap::new();
        for (m, c) in it {
            let e = map.entry(m).or_insert(0);
            *e = add_int(*e, c);
        }
        Laurent { terms: map.into_iter().filter(|(_, c)| *c != 0).collect() }
    }

    pub fn terms(&self) -> &[(Mono, Int)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0] == (Mono::ONE, 1)
    }

    /// Constant value if the polynomial has only a `u^0 t^0` term (or is zero).
    pub fn as_constant(&self) -> Option<Int> {
        match self.terms.as_slice() {
            [] => Some(0),
            [(m, c)] if *m == Mono::ONE => Some(*c),
            _ => None,
        }
    }

    /// `Some((c, m))` if the polynomial is a single term.
    pub fn as_monomial(&self) -> Option<(Int, Mono)> {
        match self.terms.as_slice() {
            [(m, c)] => Some((*c, *m)),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<(Mono, Int)> {
        self.terms.last().copied()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Componentwise minimum exponents (`(0,0)` for zero).
    pub fn min_exps(&self) -> Mono {
        if self.terms.is_empty() {
            return Mono::ONE;
        }
        let u = self.terms.iter().map(|(m, _)| m.u).min().unwrap();
        let t = self.terms.iter().map(|(m, _)| m.t).min().unwrap();
        Mono { u, t }
    }

    pub fn max_exps(&self) -> Mono {
        if self.terms.is_empty() {
            return Mono::ONE;
        }
        let u = self.terms.iter().map(|(m, _)| m.u).max().unwrap();
        let t = self.terms.iter().map(|(m, _)| m.t).max().unwrap();
        Mono { u, t }
    }

    pub fn shift(&self, m: Mono) -> Self {
        Laurent { terms: self.terms.iter().map(|(a, c)| (a.mul(m), *c)).collect() }
    }

    pub fn neg(&self) -> Self {
        Laurent { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn scale(&self, k: Int) -> Self {
        if k == 0 {
            return Self::zero();
        }
        Laurent { terms: self.terms.iter().map(|(m, c)| (*m, mul_int(*c, k))).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.merge(o, 1)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.merge(o, -1)
    }

    fn merge(&self, o: &Self, sign: Int) -> Self {
        let (a, b) = (&self.terms, &o.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b[j].0, sign * b[j].1));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = add_int(a[i].1, sign * b[j].1);
                    if c != 0 {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Laurent { terms: out }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if let Some((c, m)) = o.as_monomial() {
            return self.shift(m).scale(c);
        }
        if let Some((c, m)) = self.as_monomial() {
            return o.shift(m).scale(c);
        }
        let mut raw: Vec<(Mono, Int)> = Vec::with_capacity(self.len() * o.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                raw.push((ma.mul(*mb), mul_int(*ca, *cb)));
            }
        }
        raw.sort_unstable_by_key(|x| x.0);
        let mut out: Vec<(Mono, Int)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = add_int(last.1, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| *c != 0);
        Laurent { terms: out }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact quotient `self / d` in the Laurent ring, if one exists.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((c, m)) = d.as_monomial() {
            if self.terms.iter().all(|(_, a)| a % c == 0) {
                let terms = self.terms.iter().map(|(a, x)| (a.div(m), x / c)).collect();
                return Some(Laurent { terms });
            }
            return None;
        }
        // Quotient exponents are confined to a box determined by the extreme
        // exponents of dividend and divisor; leaving it proves inexactness.
        let (nlo, nhi, dlo, dhi) = (self.min_exps(), self.max_exps(), d.min_exps(), d.max_exps());
        let lo = nlo.div(dlo);
        let hi = nhi.div(dhi);
        let (dm, dc) = d.leading().unwrap();
        let mut rem = self.clone();
        let mut quot: Vec<(Mono, Int)> = Vec::new();
        while let Some((rm, rc)) = rem.leading() {
            if rc % dc != 0 {
                return None;
            }
            let qm = rm.div(dm);
            if qm.u < lo.u || qm.u > hi.u || qm.t < lo.t || qm.t > hi.t {
                return None;
            }
            let qc = rc / dc;
            quot.push((qm, qc));
            rem = rem.sub(&d.shift(qm).scale(qc));
        }
        Some(Laurent::from_terms(quot))
    }

    /// Gcd of the integer coefficients (0 for the zero polynomial).
    pub fn content(&self) -> Int {
        self.terms.iter().fold(0, |g, (_, c)| gcd_int(g, *c))
    }

    pub fn all_u_even(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.u % 2 == 0)
    }

    /// Replaces `u` by `u^k` and `t` by `t^k` (an Adams operation on scalars).
    pub fn adams(&self, k: i32) -> Self {
        Laurent { terms: self.terms.iter().map(|(m, c)| (m.pow(k), *c)).collect() }
    }
}

pub fn gcd_int(a: Int, b: Int) -> Int {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Laurent {
        Laurent::monomial(1, Mono::new(2, 0))
    }

    #[test]
    fn arithmetic_basics() {
        let qm1 = q().sub(&Laurent::one());
        let q2m1 = q().mul(&q()).sub(&Laurent::one());
        assert_eq!(q2m1.div_exact(&qm1), Some(q().add(&Laurent::one())));
        assert!(q().div_exact(&qm1).is_none());
        assert!(qm1.mul(&Laurent::zero()).is_zero());
    }

    #[test]
    fn laurent_division_by_binomial() {
        // (u^-2 - t) * (t + 1) / (t + 1)
        let a = Laurent::from_terms([(Mono::new(-2, 0), 1), (Mono::new(0, 1), -1)]);
        let b = Laurent::from_terms([(Mono::new(0, 1), 1), (Mono::ONE, 1)]);
        assert_eq!(a.mul(&b).div_exact(&b), Some(a));
    }

    #[test]
    fn terms_canonical() {
        let a = Laurent::from_terms([(Mono::new(1, 0), 2), (Mono::new(1, 0), -2), (Mono::new(0, 1), 3)]);
        assert_eq!(a.terms(), &[(Mono::new(0, 1), 3)]);
    }
}
