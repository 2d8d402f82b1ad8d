//! Degree-truncated symmetric functions stored in the monomial basis.

mod basis;
mod partition;
mod pleth;

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

pub use basis::{monomial_product, tables, Basis, Tables};
pub use partition::{compositions, partitions, Partition};
pub(crate) use pleth::accumulate_shift;
pub use pleth::{
    pexp_coefficients, plethystic_substitute, scalar_alphabet_value, shift_expansion, Alphabet, PExpArg,
};

use crate::coeffring::Scalar;
use crate::error::{Error, Result};

/// Adds `c` to the entry at `k`, dropping it if the sum vanishes.
pub fn add_into<K: Ord, S: Scalar>(map: &mut BTreeMap<K, S>, k: K, c: S) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(k) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let s = o.get().add(&c);
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

/// A symmetric function `sum_lambda c_lambda m_lambda` with degree cap.
#[derive(Clone, Debug, PartialEq)]
pub struct SymFunc<S: Scalar> {
    cap: usize,
    terms: BTreeMap<Partition, S>,
}

impl<S: Scalar> SymFunc<S> {
    pub fn zero(cap: usize) -> Self {
        SymFunc { cap, terms: BTreeMap::new() }
    }

    pub fn one(cap: usize) -> Self {
        Self::monomial(cap, Partition::empty(), S::one())
    }

    pub fn scalar(cap: usize, c: S) -> Self {
        Self::monomial(cap, Partition::empty(), c)
    }

    pub fn monomial(cap: usize, lam: Partition, c: S) -> Self {
        let mut f = Self::zero(cap);
        if lam.size() <= cap {
            add_into(&mut f.terms, lam, c);
        }
        f
    }

    /// Builds from monomial-basis terms, truncating above the cap.
    pub fn from_terms<I: IntoIterator<Item = (Partition, S)>>(cap: usize, it: I) -> Self {
        let mut f = Self::zero(cap);
        for (l, c) in it {
            if l.size() <= cap {
                add_into(&mut f.terms, l, c);
            }
        }
        f
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn terms(&self) -> &BTreeMap<Partition, S> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Partition, S> {
        self.terms
    }

    pub fn coeff(&self, lam: &Partition) -> S {
        self.terms.get(lam).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn with_cap(&self, cap: usize) -> Self {
        Self::from_terms(cap, self.terms.clone())
    }

    /// The basis element `b_lam` expanded in monomials.
    pub fn basis_element(cap: usize, b: Basis, lam: &Partition) -> Self {
        if b == Basis::Monomial {
            return Self::monomial(cap, lam.clone(), S::one());
        }
        if lam.size() > cap {
            return Self::zero(cap);
        }
        let t = tables(lam.size());
        let row = &t.to_m(b)[t.index[lam]];
        Self::from_terms(cap, t.parts.iter().zip(row).map(|(mu, c)| (mu.clone(), S::from_rational(c))))
    }

    pub fn h(cap: usize, n: usize) -> Self {
        Self::basis_element(cap, Basis::Homogeneous, &Partition::single(n as u8))
    }

    pub fn e(cap: usize, n: usize) -> Self {
        Self::basis_element(cap, Basis::Elementary, &Partition::single(n as u8))
    }

    pub fn p(cap: usize, n: usize) -> Self {
        Self::basis_element(cap, Basis::PowerSum, &Partition::single(n as u8))
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut f = self.clone();
        for (l, c) in &o.terms {
            add_into(&mut f.terms, l.clone(), c.clone());
        }
        f
    }

    pub fn add_assign(&mut self, o: &Self) {
        for (l, c) in &o.terms {
            add_into(&mut self.terms, l.clone(), c.clone());
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&S::from_int(-1))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.cap);
        }
        SymFunc {
            cap: self.cap,
            terms: self.terms.iter().map(|(l, x)| (l.clone(), x.mul(c))).filter(|(_, x)| !x.is_zero()).collect(),
        }
    }

    /// Product, truncated at the smaller of the two caps.
    pub fn mul(&self, o: &Self) -> Self {
        let cap = self.cap.min(o.cap);
        let mut out = Self::zero(cap);
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                if a.size() + b.size() > cap {
                    continue;
                }
                let xy = x.mul(y);
                for (l, n) in monomial_product(a, b).iter() {
                    add_into(&mut out.terms, l.clone(), xy.scale_int(*n as i128));
                }
            }
        }
        out
    }

    /// Coefficients in another basis.
    pub fn to_basis(&self, b: Basis) -> BTreeMap<Partition, S> {
        if b == Basis::Monomial {
            return self.terms.clone();
        }
        let mut out = BTreeMap::new();
        for (mu, c) in &self.terms {
            let t = tables(mu.size());
            let row = &t.from_m(b)[t.index[mu]];
            for (lam, r) in t.parts.iter().zip(row) {
                add_into(&mut out, lam.clone(), c.mul(&S::from_rational(r)));
            }
        }
        out
    }

    /// Inverse of [`SymFunc::to_basis`].
    pub fn from_basis(cap: usize, b: Basis, coeffs: &BTreeMap<Partition, S>) -> Self {
        let mut f = Self::zero(cap);
        for (lam, c) in coeffs {
            f.add_assign(&Self::basis_element(cap, b, lam).scale(c));
        }
        f
    }

    /// Maximum degree among stored terms.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|l| l.size()).max()
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(l, c)| json!({"partition": l.parts(), "coef": c.to_string()}))
            .collect();
        json!({"basis": "m", "cap": self.cap, "terms": terms})
    }

    /// Aggregates weighted monomials `x_w` (given by letter multisets) into
    /// the monomial basis, checking that the input is symmetric.
    pub fn from_word_multiset(cap: usize, words: &[(Vec<u32>, S)]) -> Result<Self> {
        let letters = words.iter().flat_map(|(w, _)| w.iter().copied()).max().unwrap_or(0) as usize;
        let mut monos: BTreeMap<Vec<u8>, S> = BTreeMap::new();
        for (w, c) in words {
            let mut exps = vec![0u8; letters];
            for &x in w {
                if x == 0 {
                    return Err(Error::InvalidArgument("letters start at 1".into()));
                }
                exps[x as usize - 1] += 1;
            }
            add_into(&mut monos, exps, c.clone());
        }
        let mut shapes: BTreeMap<Partition, (S, usize)> = BTreeMap::new();
        for (exps, c) in &monos {
            let lam = Partition::new(exps.clone());
            match shapes.get_mut(&lam) {
                None => {
                    shapes.insert(lam, (c.clone(), 1));
                }
                Some((c0, n)) => {
                    if c0 != c {
                        return Err(Error::NotSymmetric(format!("shape {lam} has coefficients {c0} and {c}")));
                    }
                    *n += 1;
                }
            }
        }
        let mut f = Self::zero(cap);
        for (lam, (c, seen)) in shapes {
            let expected = rearrangement_count(&lam, letters);
            if seen != expected {
                return Err(Error::NotSymmetric(format!(
                    "shape {lam} appears in {seen} of {expected} monomials"
                )));
            }
            if lam.size() > cap {
                return Err(Error::Resource(format!("degree {} exceeds cap {cap}", lam.size())));
            }
            add_into(&mut f.terms, lam, c);
        }
        Ok(f)
    }
}

fn rearrangement_count(lam: &Partition, letters: usize) -> usize {
    let fact = |n: usize| (1..=n).product::<usize>();
    let mut denom = fact(letters - lam.len());
    for (_, m) in lam.multiplicities() {
        denom *= fact(m);
    }
    fact(letters) / denom
}

impl<S: Scalar> fmt::Display for SymFunc<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(l, c)| format!("[{c}] m{l}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::CoefRat;

    type F = SymFunc<CoefRat>;

    fn p(v: &[u8]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn basis_examples() {
        let m1 = F::monomial(4, p(&[1]), CoefRat::one());
        let pc = m1.to_basis(Basis::PowerSum);
        assert_eq!(pc.len(), 1);
        assert!(pc[&p(&[1])].is_one());
        let h2 = F::h(4, 2);
        assert_eq!(h2, F::from_terms(4, [(p(&[2]), CoefRat::one()), (p(&[1, 1]), CoefRat::one())]));
        assert_eq!(F::e(4, 2), F::monomial(4, p(&[1, 1]), CoefRat::one()));
    }

    #[test]
    fn product_matches_basis() {
        // h_1 * h_1 = h_11 = m_2 + 2 m_11
        let h1 = F::h(4, 1);
        let prod = h1.mul(&h1);
        assert_eq!(prod, F::basis_element(4, Basis::Homogeneous, &p(&[1, 1])));
    }

    #[test]
    fn round_trip_all_bases() {
        for n in 0..=6 {
            for lam in partitions(n) {
                let f = F::monomial(8, lam.clone(), CoefRat::q());
                for b in [Basis::PowerSum, Basis::Homogeneous, Basis::Elementary] {
                    let back = F::from_basis(8, b, &f.to_basis(b));
                    assert_eq!(back, f, "{lam} via {b:?}");
                }
            }
        }
    }

    #[test]
    fn word_multiset_examples() {
        let one = CoefRat::one();
        let f = F::from_word_multiset(4, &[(vec![1, 2], one.clone()), (vec![1, 1], one.clone()), (vec![2, 2], one.clone())])
            .unwrap();
        assert_eq!(f, F::from_terms(4, [(p(&[1, 1]), one.clone()), (p(&[2]), one.clone())]));
        let g = F::from_word_multiset(4, &[(vec![1], one.clone())]).unwrap();
        assert_eq!(g, F::monomial(4, p(&[1]), one.clone()));
        let mut words = Vec::new();
        for a in 1..=3u32 {
            for b in 1..=3u32 {
                if a > b {
                    words.push((vec![a, b], one.clone()));
                }
            }
        }
        assert_eq!(F::from_word_multiset(4, &words).unwrap(), F::e(4, 2));
        let bad = F::from_word_multiset(4, &[(vec![1, 1], one.clone()), (vec![1, 2], one.clone())]);
        assert!(matches!(bad, Err(Error::NotSymmetric(_))));
    }
}
