//! Fast screening scalars: values reduced modulo the prime `2^61 - 1` at a
//! fixed random point `(u0, t0)`.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::laurent::Laurent;
use crate::error::{Error, Result};

pub const MODULUS: u64 = (1 << 61) - 1;
const DEFAULT_SEED: u64 = 0x5eed_d7c4_0b5e_0001;
pub const SEED_ENV: &str = "DYCK_TOWER_FAST_SEED";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Fp(u64);

struct Point {
    u: Fp,
    u_inv: Fp,
    t: Fp,
    t_inv: Fp,
}

static POINT: OnceLock<Point> = OnceLock::new();

fn point() -> &'static Point {
    POINT.get_or_init(|| {
        let seed = std::env::var(SEED_ENV).ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_SEED);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut draw = || loop {
            let v = Fp(rng.gen_range(2..MODULUS));
            if v.pow(2) != Fp(1) {
                break v;
            }
        };
        let (u, t) = (draw(), draw());
        Point { u, u_inv: u.inv().unwrap(), t, t_inv: t.inv().unwrap() }
    })
}

impl Fp {
    pub fn new(v: u64) -> Self {
        Fp(v % MODULUS)
    }

    pub fn from_i128(v: i128) -> Self {
        let m = MODULUS as i128;
        Fp(v.rem_euclid(m) as u64)
    }

    pub fn from_bigint(v: &BigInt) -> Self {
        let m = BigInt::from(MODULUS);
        let r = ((v % &m) + &m) % &m;
        Fp(r.to_u64().unwrap())
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn add(self, o: Self) -> Self {
        let s = self.0 + o.0;
        Fp(if s >= MODULUS { s - MODULUS } else { s })
    }

    pub fn sub(self, o: Self) -> Self {
        Fp(if self.0 >= o.0 { self.0 - o.0 } else { self.0 + MODULUS - o.0 })
    }

    pub fn neg(self) -> Self {
        Fp(if self.0 == 0 { 0 } else { MODULUS - self.0 })
    }

    pub fn mul(self, o: Self) -> Self {
        Fp(((self.0 as u128 * o.0 as u128) % MODULUS as u128) as u64)
    }

    pub fn pow(self, mut e: u64) -> Self {
        let (mut b, mut acc) = (self, Fp(1));
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(b);
            }
            b = b.mul(b);
            e >>= 1;
        }
        acc
    }

    pub fn inv(self) -> Result<Self> {
        if self.0 == 0 {
            return Err(Error::Pole);
        }
        Ok(self.pow(MODULUS - 2))
    }

    fn signed_pow(base: Fp, base_inv: Fp, e: i32) -> Fp {
        if e >= 0 {
            base.pow(e as u64)
        } else {
            base_inv.pow(e.unsigned_abs() as u64)
        }
    }

    pub fn u_pow(e: i32) -> Self {
        let p = point();
        Self::signed_pow(p.u, p.u_inv, e)
    }

    pub fn t_pow(e: i32) -> Self {
        let p = point();
        Self::signed_pow(p.t, p.t_inv, e)
    }

    pub fn from_laurent(l: &Laurent) -> Self {
        l.terms()
            .iter()
            .fold(Fp(0), |acc, (m, c)| acc.add(Fp::from_i128(*c).mul(Self::u_pow(m.u)).mul(Self::t_pow(m.t))))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        let d = Fp::from_bigint(r.denom()).inv().expect("denominator invertible mod p");
        Fp::from_bigint(r.numer()).mul(d)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod p", self.0)
    }
}
