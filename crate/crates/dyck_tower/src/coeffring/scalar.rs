//! The coefficient interface shared by exact and fast arithmetic.

use std::fmt::{Debug, Display};

use num_rational::BigRational;

use super::coefrat::CoefRat;
use super::fast::Fp;
use super::laurent::{Int, Laurent, Mono};
use crate::error::{Error, Result};

/// Scalars of `Q(u, t)` or a homomorphic image of it.
pub trait Scalar: Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(c: Int) -> Self;
    fn from_laurent(p: &Laurent) -> Self;
    fn from_rational(r: &BigRational) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn div(&self, o: &Self) -> Result<Self>;

    /// `c * u^e_u * t^e_t`.
    fn monomial(c: Int, e_u: i32, e_t: i32) -> Self {
        Self::from_laurent(&Laurent::monomial(c, Mono::new(e_u, e_t)))
    }
    fn q() -> Self {
        Self::monomial(1, 2, 0)
    }
    fn t() -> Self {
        Self::monomial(1, 0, 1)
    }
    fn q_pow(k: i32) -> Self {
        Self::monomial(1, 2 * k, 0)
    }
    fn u_pow(k: i32) -> Self {
        Self::monomial(1, k, 0)
    }
    fn t_pow(k: i32) -> Self {
        Self::monomial(1, 0, k)
    }
    fn scale_int(&self, c: Int) -> Self {
        self.mul(&Self::from_int(c))
    }
    /// Whether the value is known to lie in `Q(q, t)`; fast scalars cannot tell.
    fn integer_q_degree(&self) -> Option<bool> {
        None
    }
}

impl Scalar for CoefRat {
    fn zero() -> Self {
        CoefRat::zero()
    }
    fn one() -> Self {
        CoefRat::one()
    }
    fn from_int(c: Int) -> Self {
        CoefRat::from_int(c)
    }
    fn from_laurent(p: &Laurent) -> Self {
        CoefRat::from_laurent(p.clone())
    }
    fn from_rational(r: &BigRational) -> Self {
        CoefRat::from_rational(r)
    }
    fn is_zero(&self) -> bool {
        CoefRat::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        CoefRat::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        CoefRat::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        CoefRat::mul(self, o)
    }
    fn neg(&self) -> Self {
        CoefRat::neg(self)
    }
    fn div(&self, o: &Self) -> Result<Self> {
        CoefRat::div(self, o)
    }
    fn integer_q_degree(&self) -> Option<bool> {
        Some(self.has_integer_q_degree())
    }
}

impl Scalar for Fp {
    fn zero() -> Self {
        Fp::new(0)
    }
    fn one() -> Self {
        Fp::new(1)
    }
    fn from_int(c: Int) -> Self {
        Fp::from_i128(c)
    }
    fn from_laurent(p: &Laurent) -> Self {
        Fp::from_laurent(p)
    }
    fn from_rational(r: &BigRational) -> Self {
        Fp::from_rational(r)
    }
    fn is_zero(&self) -> bool {
        self.value() == 0
    }
    fn add(&self, o: &Self) -> Self {
        Fp::add(*self, *o)
    }
    fn sub(&self, o: &Self) -> Self {
        Fp::sub(*self, *o)
    }
    fn mul(&self, o: &Self) -> Self {
        Fp::mul(*self, *o)
    }
    fn neg(&self) -> Self {
        Fp::neg(*self)
    }
    fn div(&self, o: &Self) -> Result<Self> {
        Ok(Fp::mul(*self, o.inv().map_err(|_| Error::Pole)?))
    }
    fn monomial(c: Int, e_u: i32, e_t: i32) -> Self {
        Fp::from_i128(c).mul(Fp::u_pow(e_u)).mul(Fp::t_pow(e_t))
    }
}

macro_rules! ref_ops {
    ($t:ty) => {
        impl std::ops::Add for &$t {
            type Output = $t;
            fn add(self, o: &$t) -> $t {
                Scalar::add(self, o)
            }
        }
        impl std::ops::Sub for &$t {
            type Output = $t;
            fn sub(self, o: &$t) -> $t {
                Scalar::sub(self, o)
            }
        }
        impl std::ops::Mul for &$t {
            type Output = $t;
            fn mul(self, o: &$t) -> $t {
                Scalar::mul(self, o)
            }
        }
        impl std::ops::Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                Scalar::neg(self)
            }
        }
    };
}

ref_ops!(CoefRat);
ref_ops!(Fp);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_is_a_homomorphic_image() {
        let q = CoefRat::q();
        let t = CoefRat::t();
        let x = (&(&q * &t) - &CoefRat::one()).div(&(&q + &t)).unwrap();
        let fq = <Fp as Scalar>::q();
        let ft = <Fp as Scalar>::t();
        let fx = Scalar::div(&(&(&fq * &ft) - &Fp::new(1)), &(&fq + &ft)).unwrap();
        let via = Fp::from_laurent(x.numer()).mul(Fp::from_laurent(x.denom()).inv().unwrap());
        assert_eq!(fx, via);
    }
}
