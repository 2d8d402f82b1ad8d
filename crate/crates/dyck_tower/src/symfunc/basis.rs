//! Transition matrices between the monomial basis and the power-sum,
//! complete homogeneous and elementary bases, plus monomial products.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::partition::{partitions, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    Monomial,
    PowerSum,
    Homogeneous,
    Elementary,
}

impl Basis {
    pub fn letter(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::PowerSum => "p",
            Basis::Homogeneous => "h",
            Basis::Elementary => "e",
        }
    }
}

type Matrix = Vec<Vec<BigRational>>;

/// Transition data for one degree.
pub struct Tables {
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// `to_m[b][i][j]`: coefficient of `m_parts[j]` in `b_parts[i]`.
    to_m: [Matrix; 3],
    /// `from_m[b][i][j]`: coefficient of `b_parts[j]` in `m_parts[i]`.
    from_m: [Matrix; 3],
}

fn slot(b: Basis) -> usize {
    match b {
        Basis::PowerSum => 0,
        Basis::Homogeneous => 1,
        Basis::Elementary => 2,
        Basis::Monomial => unreachable!("monomial basis has no table"),
    }
}

impl Tables {
    pub fn to_m(&self, b: Basis) -> &Matrix {
        &self.to_m[slot(b)]
    }

    pub fn from_m(&self, b: Basis) -> &Matrix {
        &self.from_m[slot(b)]
    }
}

/// Number of ways to fill rows with sums `rows` into columns with sums
/// `cols`, where each row places its mass according to `b`.
fn fill_count(b: Basis, rows: &[u8], cols: &[u8]) -> u64 {
    fn rec(b: Basis, rows: &[u8], caps: &mut Vec<u8>, memo: &mut HashMap<(usize, Vec<u8>), u64>) -> u64 {
        if rows.is_empty() {
            return caps.iter().all(|&c| c == 0) as u64;
        }
        let mut key_caps = caps.clone();
        key_caps.sort_unstable();
        let key = (rows.len(), key_caps);
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let r = rows[0];
        let mut total = 0;
        match b {
            Basis::PowerSum => {
                for j in 0..caps.len() {
                    if caps[j] >= r {
                        caps[j] -= r;
                        total += rec(b, &rows[1..], caps, memo);
                        caps[j] += r;
                    }
                }
            }
            Basis::Homogeneous | Basis::Elementary => {
                let bound = if b == Basis::Elementary { 1 } else { u8::MAX };
                fn spread(
                    b: Basis,
                    j: usize,
                    left: u8,
                    bound: u8,
                    rows: &[u8],
                    caps: &mut Vec<u8>,
                    memo: &mut HashMap<(usize, Vec<u8>), u64>,
                ) -> u64 {
                    if left == 0 {
                        return rec(b, &rows[1..], caps, memo);
                    }
                    if j == caps.len() {
                        return 0;
                    }
                    let mut s = 0;
                    let top = left.min(caps[j]).min(bound);
                    for x in 0..=top {
                        caps[j] -= x;
                        s += spread(b, j + 1, left - x, bound, rows, caps, memo);
                        caps[j] += x;
                    }
                    s
                }
                total = spread(b, 0, r, bound, rows, caps, memo);
            }
            Basis::Monomial => unreachable!(),
        }
        memo.insert(key, total);
        total
    }
    let mut memo = HashMap::new();
    rec(b, rows, &mut cols.to_vec(), &mut memo)
}

fn invert(m: &Matrix) -> Matrix {
    let n = m.len();
    let mut a: Matrix = m.clone();
    let mut inv: Matrix = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("transition matrix is invertible");
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let x = &f * &a[col][j];
                    a[r][j] -= x;
                    let y = &f * &inv[col][j];
                    inv[r][j] -= y;
                }
            }
        }
    }
    inv
}

fn build(n: usize) -> Tables {
    let parts = partitions(n);
    let index = parts.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let mk = |b: Basis| -> Matrix {
        parts
            .iter()
            .map(|l| {
                parts
                    .iter()
                    .map(|mu| BigRational::from_integer(BigInt::from(fill_count(b, l.parts(), mu.parts()))))
                    .collect()
            })
            .collect()
    };
    let to_m = [mk(Basis::PowerSum), mk(Basis::Homogeneous), mk(Basis::Elementary)];
    let from_m = [invert(&to_m[0]), invert(&to_m[1]), invert(&to_m[2])];
    Tables { parts, index, to_m, from_m }
}

/// Cached transition tables for degree `n`.
pub fn tables(n: usize) -> Arc<Tables> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<Tables>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.read().unwrap().get(&n) {
        return t.clone();
    }
    let t = Arc::new(build(n));
    cache.write().unwrap().entry(n).or_insert(t).clone()
}

/// Distinct rearrangements of `parts` padded with zeros to length `len`.
fn arrangements(parts: &[u8], len: usize) -> Vec<Vec<u8>> {
    let mut mults: Vec<(u8, usize)> = Vec::new();
    for &p in parts {
        match mults.iter_mut().find(|(q, _)| *q == p) {
            Some((_, c)) => *c += 1,
            None => mults.push((p, 1)),
        }
    }
    if len < parts.len() {
        return Vec::new();
    }
    mults.push((0, len - parts.len()));
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn rec(mults: &mut [(u8, usize)], len: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for i in 0..mults.len() {
            if mults[i].1 > 0 {
                mults[i].1 -= 1;
                cur.push(mults[i].0);
                rec(mults, len, cur, out);
                cur.pop();
                mults[i].1 += 1;
            }
        }
    }
    rec(&mut mults, len, &mut cur, &mut out);
    out
}

/// Structure constants of `m_mu * m_nu` in the monomial basis.
pub fn monomial_product(mu: &Partition, nu: &Partition) -> Arc<Vec<(Partition, u64)>> {
    type Key = (Partition, Partition);
    static CACHE: OnceLock<RwLock<HashMap<Key, Arc<Vec<(Partition, u64)>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = if mu <= nu { (mu.clone(), nu.clone()) } else { (nu.clone(), mu.clone()) };
    if let Some(v) = cache.read().unwrap().get(&key) {
        return v.clone();
    }
    let (a, b) = &key;
    let mut out = Vec::new();
    for lam in partitions(a.size() + b.size()) {
        if lam.len() > a.len() + b.len() || lam.len() < a.len().max(b.len()) {
            continue;
        }
        let mut count = 0u64;
        for alpha in arrangements(a.parts(), lam.len()) {
            let mut rest = Vec::with_capacity(lam.len());
            let mut ok = true;
            for (l, x) in lam.parts().iter().zip(&alpha) {
                if l < x {
                    ok = false;
                    break;
                }
                rest.push(l - x);
            }
            if ok && Partition::new(rest) == *b {
                count += 1;
            }
        }
        if count > 0 {
            out.push((lam, count));
        }
    }
    let v = Arc::new(out);
    cache.write().unwrap().entry(key).or_insert(v).clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u8]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn small_transitions() {
        let t = tables(2);
        let i2 = t.index[&p(&[2])];
        let i11 = t.index[&p(&[1, 1])];
        let h = t.to_m(Basis::Homogeneous);
        assert_eq!(h[i2][i2], BigRational::one());
        assert_eq!(h[i2][i11], BigRational::one());
        let e = t.to_m(Basis::Elementary);
        assert!(e[i2][i2].is_zero());
        assert_eq!(e[i2][i11], BigRational::one());
        assert_eq!(e[i11][i11], BigRational::from_integer(2.into()));
        let pw = t.to_m(Basis::PowerSum);
        assert_eq!(pw[i11][i11], BigRational::from_integer(2.into()));
    }

    #[test]
    fn products() {
        // m_1 * m_1 = m_2 + 2 m_11
        let v = monomial_product(&p(&[1]), &p(&[1]));
        assert_eq!(*v, vec![(p(&[2]), 1), (p(&[1, 1]), 2)]);
        // m_2 * m_1 = m_3 + m_21
        let v = monomial_product(&p(&[2]), &p(&[1]));
        assert_eq!(*v, vec![(p(&[3]), 1), (p(&[2, 1]), 1)]);
    }
}
