//! Exact rational functions in `u` and `t`, where `u^2 = q`.

use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gcd::{poly_div_exact, poly_gcd};
use super::laurent::{gcd_int, Int, Laurent, Mono};
use crate::error::{Error, Result};

/// A reduced fraction `num / den`.
///
/// `num` is a Laurent polynomial; `den` is a polynomial not divisible by `u`
/// or `t`, coprime to `num`, with positive leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoefRat {
    num: Laurent,
    den: Laurent,
}

impl Default for CoefRat {
    fn default() -> Self {
        Self::zero()
    }
}

impl CoefRat {
    pub fn zero() -> Self {
        CoefRat { num: Laurent::zero(), den: Laurent::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: Int) -> Self {
        CoefRat { num: Laurent::constant(c), den: Laurent::one() }
    }

    pub fn from_laurent(p: Laurent) -> Self {
        CoefRat { num: p, den: Laurent::one() }
    }

    /// `c * u^e_u * t^e_t`.
    pub fn monomial(c: Int, e_u: i32, e_t: i32) -> Self {
        Self::from_laurent(Laurent::monomial(c, Mono::new(e_u, e_t)))
    }

    pub fn u() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn q() -> Self {
        Self::monomial(1, 2, 0)
    }

    pub fn t() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn q_pow(k: i32) -> Self {
        Self::monomial(1, 2 * k, 0)
    }

    pub fn u_pow(k: i32) -> Self {
        Self::monomial(1, k, 0)
    }

    pub fn t_pow(k: i32) -> Self {
        Self::monomial(1, 0, k)
    }

    pub fn from_rational(r: &BigRational) -> Self {
        let n: Int = r.numer().try_into().expect("integer coefficient overflow");
        let d: Int = r.denom().try_into().expect("integer coefficient overflow");
        Self::from_parts(Laurent::constant(n), Laurent::constant(d)).expect("nonzero denominator")
    }

    /// Builds and normalizes `num / den`.
    pub fn from_parts(num: Laurent, den: Laurent) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    pub fn numer(&self) -> &Laurent {
        &self.num
    }

    pub fn denom(&self) -> &Laurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// True iff every `u` exponent is even, i.e. the value lies in `Q(q, t)`.
    pub fn has_integer_q_degree(&self) -> bool {
        self.num.all_u_even() && self.den.all_u_even()
    }

    fn normalize(num: Laurent, den: Laurent) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let low = den.min_exps();
        let inv = Mono::new(-low.u, -low.t);
        let (mut num, mut den) = (num.shift(inv), den.shift(inv));
        if let Some(c) = den.as_constant() {
            let g = gcd_int(num.content(), c) * c.signum();
            return CoefRat { num: num.div_exact(&Laurent::constant(g)).unwrap(), den: Laurent::constant(c / g) };
        }
        if let Some(q) = num.div_exact(&den) {
            return Self::from_laurent(q);
        }
        let nlow = num.min_exps();
        let npoly = num.shift(Mono::new(-nlow.u, -nlow.t));
        let g = poly_gcd(&npoly, &den);
        if g.as_constant().is_none() {
            num = poly_div_exact(&npoly, &g).expect("gcd divides numerator").shift(nlow);
            den = poly_div_exact(&den, &g).expect("gcd divides denominator");
        }
        let mut c = gcd_int(num.content(), den.content());
        if den.leading().unwrap().1 < 0 {
            c = -c;
        }
        if c != 1 {
            num = num.div_exact(&Laurent::constant(c)).unwrap();
            den = den.div_exact(&Laurent::constant(c)).unwrap();
        }
        CoefRat { num, den }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            if self.den.is_one() {
                return Self::from_laurent(self.num.add(&o.num));
            }
            return Self::normalize(self.num.add(&o.num), self.den.clone());
        }
        let num = self.num.mul(&o.den).add(&o.num.mul(&self.den));
        Self::normalize(num, self.den.mul(&o.den))
    }

    pub fn neg(&self) -> Self {
        CoefRat { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return Self::from_laurent(self.num.mul(&o.num));
        }
        Self::normalize(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        if o.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if o.den.is_one() && self.den.is_one() {
            if let Some((c, m)) = o.num.as_monomial() {
                if let Some(qt) = self.num.div_exact(&Laurent::monomial(c, m)) {
                    return Ok(Self::from_laurent(qt));
                }
            }
        }
        Ok(Self::normalize(self.num.mul(&o.den), self.den.mul(&o.num)))
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Replaces `u -> u^k`, `t -> t^k`.
    pub fn adams(&self, k: i32) -> Self {
        Self::normalize(self.num.adams(k), self.den.adams(k))
    }

    /// Exact value at `q = q0`, `t = t0`.
    ///
    /// Odd powers of `u` need a rational square root of `q0`.
    pub fn eval_at(&self, q0: &BigRational, t0: &BigRational) -> Result<BigRational> {
        let u0 = if self.has_integer_q_degree() {
            None
        } else {
            Some(rational_sqrt(q0).ok_or_else(|| Error::NoSquareRoot(q0.to_string()))?)
        };
        let d = eval_laurent(&self.den, q0, u0.as_ref(), t0)?;
        if d.is_zero() {
            return Err(Error::Pole);
        }
        Ok(eval_laurent(&self.num, q0, u0.as_ref(), t0)? / d)
    }
}

fn rational_pow(x: &BigRational, e: i32) -> Result<BigRational> {
    if e < 0 && x.is_zero() {
        return Err(Error::Pole);
    }
    let mut acc = BigRational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= x;
    }
    Ok(if e < 0 { acc.recip() } else { acc })
}

fn eval_laurent(p: &Laurent, q0: &BigRational, u0: Option<&BigRational>, t0: &BigRational) -> Result<BigRational> {
    let mut acc = BigRational::zero();
    for (m, c) in p.terms() {
        let up = if m.u % 2 == 0 { rational_pow(q0, m.u / 2)? } else { rational_pow(u0.unwrap(), m.u)? };
        acc += up * rational_pow(t0, m.t)? * BigRational::from_integer(BigInt::from(*c));
    }
    Ok(acc)
}

fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (x.numer().sqrt(), x.denom().sqrt());
    let r = BigRational::new(n, d);
    (&r * &r == *x).then_some(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn cancellation_to_one() {
        let qm1 = CoefRat::q().sub(&CoefRat::one());
        assert!(qm1.div(&qm1).unwrap().is_one());
    }

    #[test]
    fn u_squared_is_q() {
        assert_eq!(CoefRat::u().mul(&CoefRat::u()), CoefRat::q());
    }

    #[test]
    fn quotient_by_polynomial() {
        let q = CoefRat::q();
        let a = q.mul(&q).sub(&CoefRat::one());
        let b = q.sub(&CoefRat::one());
        assert_eq!(a.div(&b).unwrap(), q.add(&CoefRat::one()));
    }

    #[test]
    fn division_by_zero_errors() {
        assert_eq!(CoefRat::one().div(&CoefRat::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn evaluation_examples() {
        let f = CoefRat::q().add(&CoefRat::t());
        assert_eq!(f.eval_at(&rat(2), &rat(3)).unwrap(), rat(5));
        let pole = CoefRat::one().div(&CoefRat::q().sub(&CoefRat::one())).unwrap();
        assert_eq!(pole.eval_at(&rat(1), &rat(5)), Err(Error::Pole));
        let u2 = CoefRat::u().mul(&CoefRat::u());
        assert_eq!(u2.eval_at(&rat(4), &rat(0)).unwrap(), rat(4));
        assert_eq!(CoefRat::u().eval_at(&rat(4), &rat(0)).unwrap(), rat(2));
        assert!(matches!(CoefRat::u().eval_at(&rat(2), &rat(0)), Err(Error::NoSquareRoot(_))));
    }

    #[test]
    fn normal_form_is_canonical() {
        let q = CoefRat::q();
        let t = CoefRat::t();
        // (q t - t) / (q^2 t - t) == 1 / (q + 1)
        let a = q.mul(&t).sub(&t).div(&q.mul(&q).mul(&t).sub(&t)).unwrap();
        let b = CoefRat::one().div(&q.add(&CoefRat::one())).unwrap();
        assert_eq!(a, b);
        // sign lives in the numerator
        let c = CoefRat::one().div(&CoefRat::one().sub(&q)).unwrap();
        assert!(c.denom().leading().unwrap().1 > 0);
        assert_eq!(c.add(&b).mul(&q.mul(&q).sub(&CoefRat::one())), CoefRat::from_int(-2));
    }
}
