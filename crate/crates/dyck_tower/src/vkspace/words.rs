//! Generator words and their evaluation under an interpretation.

use std::fmt;
use std::sync::Arc;

use super::ops::{act_dminus, act_dplus, act_dplus_star, act_t, act_z};
use super::velem::VElem;
use crate::coeffring::Scalar;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    T(usize),
    TInv(usize),
    DMinus,
    DPlus,
    DPlusStar,
    Y(usize),
    Z(usize),
    YTilde(usize),
}

impl Gen {
    /// Strand count after acting on `V_k`.
    pub fn target(self, k: usize) -> Result<usize> {
        let idx = |i: usize, bound: usize| {
            if i == 0 || i > bound {
                Err(Error::IndexOutOfRange { index: i, k })
            } else {
                Ok(k)
            }
        };
        match self {
            Gen::T(i) | Gen::TInv(i) => idx(i, k.saturating_sub(1)),
            Gen::Y(i) | Gen::Z(i) | Gen::YTilde(i) => idx(i, k),
            Gen::DMinus => k.checked_sub(1).ok_or(Error::NoStrand),
            Gen::DPlus | Gen::DPlusStar => Ok(k + 1),
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::T(i) => write!(f, "T{i}"),
            Gen::TInv(i) => write!(f, "T{i}^-1"),
            Gen::DMinus => write!(f, "d-"),
            Gen::DPlus => write!(f, "d+"),
            Gen::DPlusStar => write!(f, "d+*"),
            Gen::Y(i) => write!(f, "y{i}"),
            Gen::Z(i) => write!(f, "z{i}"),
            Gen::YTilde(i) => write!(f, "ytilde{i}"),
        }
    }
}

impl std::str::FromStr for Gen {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown generator '{s}'"));
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        match s {
            "d-" => return Ok(Gen::DMinus),
            "d+" => return Ok(Gen::DPlus),
            "d+*" => return Ok(Gen::DPlusStar),
            _ => {}
        }
        if let Some(r) = s.strip_prefix("ytilde") {
            return Ok(Gen::YTilde(num(r)?));
        }
        if let Some(r) = s.strip_prefix('T') {
            if let Some(i) = r.strip_suffix("^-1") {
                return Ok(Gen::TInv(num(i)?));
            }
            return Ok(Gen::T(num(r)?));
        }
        if let Some(r) = s.strip_prefix('y') {
            return Ok(Gen::Y(num(r)?));
        }
        if let Some(r) = s.strip_prefix('z') {
            return Ok(Gen::Z(num(r)?));
        }
        Err(bad())
    }
}

/// A product of generators written left to right; the rightmost acts first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Gen>);

impl Word {
    pub fn new(g: Vec<Gen>) -> Self {
        Word(g)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Concatenation `self * o` (so `o` acts first).
    pub fn then(&self, o: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        Word(v)
    }

    pub fn target(&self, k: usize) -> Result<usize> {
        self.0.iter().rev().try_fold(k, |k, g| g.target(k))
    }

    pub fn parse(s: &str) -> Result<Word> {
        Ok(Word(s.split_whitespace().map(|t| t.parse()).collect::<Result<_>>()?))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", v.join(" "))
    }
}

pub type Op<S> = Arc<dyn Fn(&VElem<S>) -> Result<VElem<S>> + Send + Sync>;
pub type IndexedOp<S> = Arc<dyn Fn(usize, &VElem<S>) -> Result<VElem<S>> + Send + Sync>;

/// Concrete operators for the raising generators and the `y`/`z` families.
/// `T_i` and `d_-` are shared by every interpretation.
#[derive(Clone)]
pub struct Interp<S: Scalar> {
    pub dplus: Op<S>,
    pub dplus_star: Op<S>,
    pub y: IndexedOp<S>,
    pub z: IndexedOp<S>,
}

impl<S: Scalar> Interp<S> {
    /// The base pair of actions on `V_*`.
    pub fn base() -> Self {
        Interp {
            dplus: Arc::new(|f| Ok(act_dplus(f))),
            dplus_star: Arc::new(|f| Ok(act_dplus_star(f))),
            y: Arc::new(|i, f| super::ops::act_y(i, f)),
            z: Arc::new(act_z),
        }
    }

    pub fn apply(&self, g: Gen, f: &VElem<S>) -> Result<VElem<S>> {
        g.target(f.k())?;
        match g {
            Gen::T(i) => act_t(i, f, false),
            Gen::TInv(i) => act_t(i, f, true),
            Gen::DMinus => act_dminus(f),
            Gen::DPlus => (self.dplus)(f),
            Gen::DPlusStar => (self.dplus_star)(f),
            Gen::Y(i) => (self.y)(i, f),
            Gen::Z(i) => (self.z)(i, f),
            Gen::YTilde(i) => self.ytilde(i, f),
        }
    }

    fn ytilde(&self, i: usize, f: &VElem<S>) -> Result<VElem<S>> {
        let k = f.k();
        let mut w = Vec::new();
        // T_{i↘1} T_{1↗k} y_k T*_{k↘i}
        w.extend((1..i).rev().map(Gen::T));
        w.extend((1..k).map(Gen::T));
        w.push(Gen::Y(k));
        w.extend((i..k).rev().map(Gen::TInv));
        self.eval(&Word(w), f)
    }

    pub fn eval(&self, w: &Word, f: &VElem<S>) -> Result<VElem<S>> {
        let mut g = f.clone();
        for gen in w.0.iter().rev() {
            g = self.apply(*gen, &g)?;
        }
        Ok(g)
    }

    /// Evaluates `sum_j c_j w_j` on `f`.
    pub fn eval_sum(&self, s: &[(S, Word)], f: &VElem<S>) -> Result<VElem<S>> {
        let mut acc: Option<VElem<S>> = None;
        for (c, w) in s {
            let v = self.eval(w, f)?.scale(c);
            match acc.as_mut() {
                None => acc = Some(v),
                Some(a) => {
                    if a.k() != v.k() {
                        return Err(Error::StrandMismatch { expected: a.k(), found: v.k() });
                    }
                    a.add_assign(&v)
                }
            }
        }
        Ok(acc.unwrap_or_else(|| VElem::zero(f.k(), f.cap())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let w = Word::parse("d- d+ T1 T2^-1 y3 z1 ytilde2 d+*").unwrap();
        assert_eq!(w.0[3], Gen::TInv(2));
        assert_eq!(w.0[6], Gen::YTilde(2));
        assert_eq!(Word::parse(&w.to_string()).unwrap(), w);
        assert!(Word::parse("x1").is_err());
    }

    #[test]
    fn arity() {
        let w = Word::parse("d- d- d+ d+").unwrap();
        assert_eq!(w.target(0).unwrap(), 0);
        assert!(Word::parse("T1").unwrap().target(1).is_err());
        assert!(Word::parse("d-").unwrap().target(0).is_err());
    }
}
