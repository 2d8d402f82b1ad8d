//! Greatest common divisors of integer polynomials in `u` and `t`.
//!
//! Polynomials are viewed as elements of `Z[u][t]` and handled with the
//! primitive pseudo-remainder sequence, using big integers so intermediate
//! coefficient growth cannot overflow.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::laurent::{Int, Laurent, Mono};

/// Dense polynomial in `u` over `Z`, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
struct UPoly(Vec<BigInt>);

impl UPoly {
    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }
    fn constant(c: BigInt) -> Self {
        UPoly(vec![c]).trim()
    }
    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
    fn deg(&self) -> usize {
        self.0.len().saturating_sub(1)
    }
    fn lc(&self) -> &BigInt {
        self.0.last().expect("lc of zero polynomial")
    }
    fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let z = BigInt::zero();
        UPoly((0..n).map(|i| self.0.get(i).unwrap_or(&z) + o.0.get(i).unwrap_or(&z)).collect()).trim()
    }
    fn neg(&self) -> Self {
        UPoly(self.0.iter().map(|c| -c).collect())
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return UPoly(vec![]);
        }
        let mut out = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly(out).trim()
    }
    fn scale(&self, k: &BigInt) -> Self {
        UPoly(self.0.iter().map(|c| c * k).collect()).trim()
    }
    fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.0.iter().cloned());
        UPoly(v)
    }
    fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }
    fn div_int(&self, k: &BigInt) -> Self {
        UPoly(self.0.iter().map(|c| {
            debug_assert!((c % k).is_zero());
            c / k
        }).collect())
    }
    fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        self.div_int(&c)
    }
    /// Pseudo-remainder of `self` by `d`.
    fn prem(&self, d: &Self) -> Self {
        let mut r = self.clone();
        let dl = d.lc().clone();
        while !r.is_zero() && r.deg() >= d.deg() {
            let k = r.deg() - d.deg();
            let rl = r.lc().clone();
            r = r.scale(&dl).sub(&d.scale(&rl).shift(k));
        }
        r
    }
    /// Exact quotient, `None` if `d` does not divide `self`.
    fn div_exact(&self, d: &Self) -> Option<Self> {
        if self.is_zero() {
            return Some(self.clone());
        }
        if self.deg() < d.deg() {
            return None;
        }
        let mut r = self.clone();
        let mut q = vec![BigInt::zero(); self.deg() - d.deg() + 1];
        while !r.is_zero() && r.deg() >= d.deg() {
            let k = r.deg() - d.deg();
            let (qc, rem) = r.lc().div_rem(d.lc());
            if !rem.is_zero() {
                return None;
            }
            r = r.sub(&d.scale(&qc).shift(k));
            q[k] = qc;
        }
        if r.is_zero() {
            Some(UPoly(q).trim())
        } else {
            None
        }
    }
    fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.primitive().scale(&o.content());
        }
        if o.is_zero() {
            return self.primitive().scale(&self.content());
        }
        let c = self.content().gcd(&o.content());
        let (mut a, mut b) = (self.primitive(), o.primitive());
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            let r = a.prem(&b);
            if r.is_zero() {
                break;
            }
            if r.deg() == 0 {
                b = UPoly::constant(BigInt::one());
                break;
            }
            a = b;
            b = r.primitive();
        }
        b.primitive().scale(&c)
    }
}

/// Polynomial in `t` with `Z[u]` coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
struct BPoly(Vec<UPoly>);

impl BPoly {
    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }
    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
    fn deg(&self) -> usize {
        self.0.len().saturating_sub(1)
    }
    fn lc(&self) -> &UPoly {
        self.0.last().expect("lc of zero polynomial")
    }
    fn sub(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let z = UPoly(vec![]);
        BPoly((0..n).map(|i| self.0.get(i).unwrap_or(&z).sub(o.0.get(i).unwrap_or(&z))).collect()).trim()
    }
    fn scale(&self, k: &UPoly) -> Self {
        BPoly(self.0.iter().map(|c| c.mul(k)).collect()).trim()
    }
    fn shift(&self, k: usize) -> Self {
        let mut v = vec![UPoly(vec![]); k];
        v.extend(self.0.iter().cloned());
        BPoly(v)
    }
    fn content(&self) -> UPoly {
        self.0.iter().fold(UPoly(vec![]), |g, c| g.gcd(c))
    }
    fn div_coef(&self, k: &UPoly) -> Self {
        BPoly(self.0.iter().map(|c| c.div_exact(k).expect("content divides")).collect())
    }
    fn prem(&self, d: &Self) -> Self {
        let mut r = self.clone();
        let dl = d.lc().clone();
        while !r.is_zero() && r.deg() >= d.deg() {
            let k = r.deg() - d.deg();
            let rl = r.lc().clone();
            r = r.scale(&dl).sub(&d.scale(&rl).shift(k));
        }
        r
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        if self.is_zero() {
            return Some(self.clone());
        }
        if self.deg() < d.deg() {
            return None;
        }
        let mut r = self.clone();
        let mut q = vec![UPoly(vec![]); self.deg() - d.deg() + 1];
        while !r.is_zero() && r.deg() >= d.deg() {
            let k = r.deg() - d.deg();
            let qc = r.lc().div_exact(d.lc())?;
            r = r.sub(&d.scale(&qc).shift(k));
            q[k] = qc;
        }
        if r.is_zero() {
            Some(BPoly(q).trim())
        } else {
            None
        }
    }
    fn gcd(&self, o: &Self) -> Self {
        let ca = self.content();
        let cb = o.content();
        let c = ca.gcd(&cb);
        let mut a = self.div_coef(&ca);
        let mut b = o.div_coef(&cb);
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            let r = a.prem(&b);
            if r.is_zero() {
                break;
            }
            if r.deg() == 0 {
                b = BPoly(vec![UPoly::constant(BigInt::one())]);
                break;
            }
            a = b;
            let cr = r.content();
            b = r.div_coef(&cr);
        }
        let cb = b.content();
        b.div_coef(&cb).scale(&c)
    }

    fn from_poly(p: &Laurent) -> Self {
        let lo = p.min_exps();
        assert!(lo.u >= 0 && lo.t >= 0, "expected a polynomial");
        let hi = p.max_exps();
        let mut rows = vec![vec![BigInt::zero(); hi.u as usize + 1]; hi.t as usize + 1];
        for (m, c) in p.terms() {
            rows[m.t as usize][m.u as usize] = BigInt::from(*c);
        }
        BPoly(rows.into_iter().map(|r| UPoly(r).trim()).collect()).trim()
    }

    fn to_poly(&self) -> Laurent {
        let mut terms = Vec::new();
        for (t, row) in self.0.iter().enumerate() {
            for (u, c) in row.0.iter().enumerate() {
                if !c.is_zero() {
                    let v: Int = c.try_into().expect("integer coefficient overflow");
                    terms.push((Mono::new(u as i32, t as i32), v));
                }
            }
        }
        Laurent::from_terms(terms)
    }
}

/// Gcd of two nonzero polynomials (nonnegative exponents), up to sign.
pub fn poly_gcd(a: &Laurent, b: &Laurent) -> Laurent {
    let g = BPoly::from_poly(a).gcd(&BPoly::from_poly(b));
    g.to_poly()
}

/// Exact quotient of polynomials computed with big-integer intermediates.
pub fn poly_div_exact(a: &Laurent, b: &Laurent) -> Option<Laurent> {
    BPoly::from_poly(a).div_exact(&BPoly::from_poly(b)).map(|q| q.to_poly())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i32, i32, Int)]) -> Laurent {
        Laurent::from_terms(terms.iter().map(|&(u, t, c)| (Mono::new(u, t), c)))
    }

    #[test]
    fn gcd_of_products() {
        let f = p(&[(2, 0, 1), (0, 0, -1)]); // q - 1
        let g = p(&[(0, 1, 1), (2, 0, 1)]); // t + q
        let h = p(&[(0, 1, 2), (0, 0, 3)]); // 2t + 3
        let a = f.mul(&g);
        let b = f.mul(&h).scale(6);
        let d = poly_gcd(&a, &b);
        assert!(d == f || d == f.neg(), "{d:?}");
    }

    #[test]
    fn gcd_coprime_is_unit() {
        let a = p(&[(1, 1, 1), (0, 0, 1)]);
        let b = p(&[(1, 0, 1), (0, 1, -1)]);
        let d = poly_gcd(&a, &b);
        assert!(d.as_constant().map(|c| c.abs()) == Some(1));
    }

    #[test]
    fn gcd_keeps_integer_content() {
        let a = p(&[(2, 0, 4), (0, 0, -4)]);
        let b = p(&[(0, 0, 6)]);
        let d = poly_gcd(&a, &b);
        assert_eq!(d.as_constant().map(|c| c.abs()), Some(2));
    }
}
