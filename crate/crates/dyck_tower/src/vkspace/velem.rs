use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::coeffring::Scalar;
use crate::symfunc::{add_into, Partition, SymFunc};

/// Basis key `m_lambda * y^exps`.
pub type Key = (Partition, Vec<u8>);

/// An element of `V_k = Sym[X] (x) Q(q,t)[y_1..y_k]`, truncated at total
/// degree `cap` (symmetric-function degree plus `y` degree).
#[derive(Clone, Debug, PartialEq)]
pub struct VElem<S: Scalar> {
    k: usize,
    cap: usize,
    terms: BTreeMap<Key, S>,
}

pub(crate) fn total_degree(key: &Key) -> usize {
    key.0.size() + key.1.iter().map(|&e| e as usize).sum::<usize>()
}

impl<S: Scalar> VElem<S> {
    pub fn zero(k: usize, cap: usize) -> Self {
        VElem { k, cap, terms: BTreeMap::new() }
    }

    /// `1` in `V_k`.
    pub fn one(k: usize, cap: usize) -> Self {
        Self::basis(k, cap, Partition::empty(), vec![0; k], S::one())
    }

    /// `c * m_lam * y^exps`.
    pub fn basis(k: usize, cap: usize, lam: Partition, exps: Vec<u8>, c: S) -> Self {
        assert_eq!(exps.len(), k, "exponent vector length must equal strand count");
        let mut v = Self::zero(k, cap);
        v.push((lam, exps), c);
        v
    }

    pub fn from_sym(k: usize, f: &SymFunc<S>) -> Self {
        let mut v = Self::zero(k, f.cap());
        for (l, c) in f.terms() {
            v.push((l.clone(), vec![0; k]), c.clone());
        }
        v
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn terms(&self) -> &BTreeMap<Key, S> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds a term, dropping it if it exceeds the degree cap.
    pub fn push(&mut self, key: Key, c: S) {
        debug_assert_eq!(key.1.len(), self.k);
        if total_degree(&key) <= self.cap {
            add_into(&mut self.terms, key, c);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.add_assign(o);
        r
    }

    pub fn add_assign(&mut self, o: &Self) {
        assert_eq!(self.k, o.k, "strand count mismatch in sum");
        for (key, c) in &o.terms {
            self.push(key.clone(), c.clone());
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&S::from_int(-1))
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut r = Self::zero(self.k, self.cap);
        if c.is_zero() {
            return r;
        }
        r.terms = self.terms.iter().map(|(k, x)| (k.clone(), x.mul(c))).filter(|(_, x)| !x.is_zero()).collect();
        r
    }

    /// Divides every coefficient by `c`.
    pub fn div_scalar(&self, c: &S) -> crate::Result<Self> {
        let mut r = Self::zero(self.k, self.cap);
        for (k, x) in &self.terms {
            r.terms.insert(k.clone(), x.div(c)?);
        }
        Ok(r)
    }

    /// Multiplication by `y_i` (1-based).
    pub fn mul_y(&self, i: usize) -> Self {
        let mut r = Self::zero(self.k, self.cap);
        for ((l, e), c) in &self.terms {
            let mut e = e.clone();
            e[i - 1] += 1;
            r.push((l.clone(), e), c.clone());
        }
        r
    }

    /// The symmetric function part of an element of `V_0`.
    pub fn to_sym(&self) -> SymFunc<S> {
        assert_eq!(self.k, 0, "only elements of V_0 are symmetric functions");
        SymFunc::from_terms(self.cap, self.terms.iter().map(|((l, _), c)| (l.clone(), c.clone())))
    }

    pub fn with_cap(&self, cap: usize) -> Self {
        let mut r = Self::zero(self.k, cap);
        for (key, c) in &self.terms {
            r.push(key.clone(), c.clone());
        }
        r
    }

    /// Coefficients all in `Q(q, t)`; `None` when the scalar type cannot tell.
    pub fn integer_q_degree(&self) -> Option<bool> {
        let mut all = true;
        for c in self.terms.values() {
            all &= c.integer_q_degree()?;
        }
        Some(all)
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> VElem<T> {
        let mut r = VElem::zero(self.k, self.cap);
        for (key, c) in &self.terms {
            r.push(key.clone(), f(c));
        }
        r
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|((l, e), c)| json!({"partition": l.parts(), "y": e, "coef": c.to_string()}))
            .collect();
        json!({"k": self.k, "cap": self.cap, "terms": terms})
    }
}

impl<S: Scalar> fmt::Display for VElem<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((l, e), c)| {
                let ys: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x > 0)
                    .map(|(i, &x)| if x == 1 { format!("y{}", i + 1) } else { format!("y{}^{x}", i + 1) })
                    .collect();
                format!("[{c}] m{l}{}{}", if ys.is_empty() { "" } else { " " }, ys.join(" "))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
