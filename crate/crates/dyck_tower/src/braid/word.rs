//! Words in the positive braid monoid of the punctured torus and their
//! representation on `V_*`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::coeffring::Scalar;
use crate::error::{Error, Result};
use crate::vkspace::{act_t, act_z, VElem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum BraidGen {
    T(usize),
    TInv(usize),
    Y(usize),
    Z(usize),
    YTilde(usize),
}

impl BraidGen {
    fn check(self, k: usize) -> Result<()> {
        let (i, bound) = match self {
            BraidGen::T(i) | BraidGen::TInv(i) => (i, k.saturating_sub(1)),
            BraidGen::Y(i) | BraidGen::Z(i) | BraidGen::YTilde(i) => (i, k),
        };
        if i == 0 || i > bound {
            return Err(Error::IndexOutOfRange { index: i, k });
        }
        Ok(())
    }
}

impl fmt::Display for BraidGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BraidGen::T(i) => write!(f, "T{i}"),
            BraidGen::TInv(i) => write!(f, "Tinv{i}"),
            BraidGen::Y(i) => write!(f, "y{i}"),
            BraidGen::Z(i) => write!(f, "z{i}"),
            BraidGen::YTilde(i) => write!(f, "ytilde{i}"),
        }
    }
}

impl FromStr for BraidGen {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let split = s.find(|c: char| c.is_ascii_digit()).ok_or_else(|| Error::Parse(format!("generator '{s}' has no index")))?;
        let (name, idx) = s.split_at(split);
        let i: usize = idx.parse().map_err(|_| Error::Parse(format!("bad index in '{s}'")))?;
        match name {
            "T" => Ok(BraidGen::T(i)),
            "Tinv" | "T^-1" | "Ti" => Ok(BraidGen::TInv(i)),
            "y" => Ok(BraidGen::Y(i)),
            "z" => Ok(BraidGen::Z(i)),
            "ytilde" | "yt" => Ok(BraidGen::YTilde(i)),
            _ => Err(Error::Parse(format!("unknown generator '{name}'"))),
        }
    }
}

/// `T_{a↗b}` in the extended notation: `T_a ... T_{b-1}` when `a <= b`,
/// otherwise `T_{a-1}^-1 ... T_b^-1`.
pub fn train_up(a: usize, b: usize) -> Vec<BraidGen> {
    if a <= b {
        (a..b).map(BraidGen::T).collect()
    } else {
        (b..a).rev().map(BraidGen::TInv).collect()
    }
}

/// `T_{a↘b}` in the extended notation: `T_{a-1} ... T_b` when `a >= b`,
/// otherwise `T_a^-1 ... T_{b-1}^-1`.
pub fn train_down(a: usize, b: usize) -> Vec<BraidGen> {
    if a >= b {
        (b..a).rev().map(BraidGen::T).collect()
    } else {
        (a..b).map(BraidGen::TInv).collect()
    }
}

/// Swaps `T_i` and `T_i^-1` letter by letter.
pub fn star(w: &[BraidGen]) -> Vec<BraidGen> {
    w.iter()
        .map(|g| match *g {
            BraidGen::T(i) => BraidGen::TInv(i),
            BraidGen::TInv(i) => BraidGen::T(i),
            g => g,
        })
        .collect()
}

/// A word on `k` strands; the rightmost generator acts first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BraidWord {
    pub k: usize,
    pub gens: Vec<BraidGen>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CreationHom {
    /// `T_i -> T_{i+1}`, `z_i -> z_{i+1}`, `ytilde_i -> ytilde_{i+1}`.
    PhiPlus,
    /// `T_i -> T_i`, `z_i -> z_i`, `y_i -> y_i`.
    PhiMinus,
    /// `T_i -> T_{i+1}`, `z_i -> z_{i+1}`, `y_i -> y_{i+1}`.
    PhiPlusStar,
}

impl BraidWord {
    pub fn new(k: usize, gens: Vec<BraidGen>) -> Result<Self> {
        for g in &gens {
            g.check(k)?;
        }
        Ok(BraidWord { k, gens })
    }

    pub fn identity(k: usize) -> Self {
        BraidWord { k, gens: Vec::new() }
    }

    pub fn parse(k: usize, s: &str) -> Result<Self> {
        let gens = s.split(|c: char| c.is_whitespace() || c == '*' || c == ',').filter(|t| !t.is_empty() && *t != "id").map(str::parse).collect::<Result<Vec<_>>>()?;
        Self::new(k, gens)
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// `self * o`: `o` acts first.
    pub fn then(&self, o: &BraidWord) -> Result<BraidWord> {
        if self.k != o.k {
            return Err(Error::StrandMismatch { expected: self.k, found: o.k });
        }
        let mut gens = self.gens.clone();
        gens.extend_from_slice(&o.gens);
        Ok(BraidWord { k: self.k, gens })
    }

    pub fn pow(&self, e: usize) -> BraidWord {
        BraidWord { k: self.k, gens: self.gens.iter().copied().cycle().take(self.gens.len() * e).collect() }
    }

    /// `ytilde_i = T_{i↘1} T_{1↗k} y_k T*_{k↘i}`.
    pub fn ytilde_expansion(k: usize, i: usize) -> Vec<BraidGen> {
        let mut w = train_down(i, 1);
        w.extend(train_up(1, k));
        w.push(BraidGen::Y(k));
        w.extend(star(&train_down(k, i)));
        w
    }

    /// `y_i = T*_{i↘1} T*_{1↗k} ytilde_k T_{k↘1} T*_{1↗i}`.
    pub fn y_expansion(k: usize, i: usize) -> Vec<BraidGen> {
        let mut w = star(&train_down(i, 1));
        w.extend(star(&train_up(1, k)));
        w.push(BraidGen::YTilde(k));
        w.extend(train_down(k, 1));
        w.extend(star(&train_up(1, i)));
        w
    }

    /// Replaces every `ytilde_i` by its definition.
    pub fn expand_ytilde(&self) -> BraidWord {
        let mut gens = Vec::new();
        for &g in &self.gens {
            match g {
                BraidGen::YTilde(i) => gens.extend(Self::ytilde_expansion(self.k, i)),
                g => gens.push(g),
            }
        }
        BraidWord { k: self.k, gens }
    }

    /// Replaces every `y_i` by its expression through `ytilde_k`.
    pub fn expand_y(&self) -> BraidWord {
        let mut gens = Vec::new();
        for &g in &self.gens {
            match g {
                BraidGen::Y(i) => gens.extend(Self::y_expansion(self.k, i)),
                g => gens.push(g),
            }
        }
        BraidWord { k: self.k, gens }
    }

    /// Image in `k + 1` strands under a creation homomorphism.
    pub fn create(&self, which: CreationHom) -> BraidWord {
        let shift = |g: BraidGen| match g {
            BraidGen::T(i) => BraidGen::T(i + 1),
            BraidGen::TInv(i) => BraidGen::TInv(i + 1),
            BraidGen::Y(i) => BraidGen::Y(i + 1),
            BraidGen::Z(i) => BraidGen::Z(i + 1),
            BraidGen::YTilde(i) => BraidGen::YTilde(i + 1),
        };
        let gens = match which {
            CreationHom::PhiPlus => self.expand_y().gens.into_iter().map(shift).collect(),
            CreationHom::PhiMinus => self.expand_ytilde().gens,
            CreationHom::PhiPlusStar => self.expand_ytilde().gens.into_iter().map(shift).collect(),
        };
        BraidWord { k: self.k + 1, gens }
    }

    /// The image in `A_{q,t}[q^1/2]` (`T_i -> q^-1/2 T_i`, `y_i -> -y_i`,
    /// `z_i -> (qt)^-1 z_i`) applied to `f`.
    pub fn evaluate<S: Scalar>(&self, f: &VElem<S>) -> Result<VElem<S>> {
        if f.k() != self.k {
            return Err(Error::StrandMismatch { expected: self.k, found: f.k() });
        }
        let mut g = f.clone();
        let mut u_exp = 0i32;
        let mut t_exp = 0i32;
        let mut negate = false;
        for gen in self.expand_ytilde().gens.iter().rev() {
            match *gen {
                BraidGen::T(i) => {
                    g = act_t(i, &g, false)?;
                    u_exp -= 1;
                }
                BraidGen::TInv(i) => {
                    g = act_t(i, &g, true)?;
                    u_exp += 1;
                }
                BraidGen::Y(i) => {
                    g = g.mul_y(i);
                    negate = !negate;
                }
                BraidGen::Z(i) => {
                    g = act_z(i, &g)?;
                    u_exp -= 2;
                    t_exp -= 1;
                }
                BraidGen::YTilde(_) => unreachable!("expanded above"),
            }
        }
        let c = S::monomial(if negate { -1 } else { 1 }, u_exp, t_exp);
        Ok(g.scale(&c))
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "id");
        }
        let v: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", v.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::CoefRat;
    use crate::symfunc::Partition;
    use crate::vkspace::spanning_set;

    fn y1(k: usize) -> VElem<CoefRat> {
        let mut e = vec![0; k];
        e[0] = 1;
        VElem::basis(k, 3, Partition::empty(), e, CoefRat::one())
    }

    #[test]
    fn trains() {
        use BraidGen::*;
        assert_eq!(train_up(1, 3), vec![T(1), T(2)]);
        assert_eq!(train_up(3, 1), vec![TInv(2), TInv(1)]);
        assert_eq!(train_down(3, 1), vec![T(2), T(1)]);
        assert_eq!(train_down(1, 3), vec![TInv(1), TInv(2)]);
        assert!(train_up(2, 2).is_empty());
    }

    #[test]
    fn parse_and_display() {
        let w = BraidWord::parse(2, "z1 T1 ytilde2 Tinv1 y2").unwrap();
        assert_eq!(w.to_string(), "z1 T1 ytilde2 Tinv1 y2");
        assert!(BraidWord::parse(2, "T2").is_err());
        assert!(BraidWord::parse(2, "q1").is_err());
        assert_eq!(BraidWord::parse(3, &BraidWord::identity(3).to_string()).unwrap(), BraidWord::identity(3));
    }

    #[test]
    fn small_evaluations() {
        let f = y1(1);
        assert_eq!(BraidWord::parse(1, "z1").unwrap().evaluate(&f).unwrap(), f);
        assert_eq!(BraidWord::identity(1).evaluate(&f).unwrap(), f);
        let one = VElem::<CoefRat>::one(1, 3);
        assert_eq!(BraidWord::parse(1, "ytilde1").unwrap().evaluate(&one).unwrap(), f.neg());
        assert!(BraidWord::identity(2).evaluate(&f).is_err());
    }

    fn same_on_spanning<F: Fn(usize) -> (BraidWord, BraidWord)>(ks: std::ops::RangeInclusive<usize>, words: F) {
        for k in ks {
            let (a, b) = words(k);
            for (lam, e) in spanning_set(k, 2) {
                let f = VElem::basis(k, 2 + a.len().max(b.len()), lam, e, CoefRat::one());
                assert_eq!(a.evaluate(&f).unwrap(), b.evaluate(&f).unwrap(), "{a} vs {b}");
            }
        }
    }

    #[test]
    fn presentation_relations() {
        let w = |k, s: &str| BraidWord::parse(k, s).unwrap();
        same_on_spanning(2..=3, |k| (w(k, "z1 T1 y1 Tinv1"), w(k, "Tinv1 y1 Tinv1 z1")));
        same_on_spanning(2..=3, |k| (w(k, "y2"), w(k, "Tinv1 y1 Tinv1")));
        same_on_spanning(2..=3, |k| (w(k, "z2"), w(k, "T1 z1 T1")));
        same_on_spanning(2..=3, |k| (w(k, "z1 z2"), w(k, "z2 z1")));
        same_on_spanning(3..=3, |k| (w(k, "T1 T2 T1"), w(k, "T2 T1 T2")));
        same_on_spanning(3..=3, |k| (w(k, "z1 T2"), w(k, "T2 z1")));
        same_on_spanning(3..=3, |k| (w(k, "y3 T1"), w(k, "T1 y3")));
        same_on_spanning(2..=3, |k| (w(k, "ytilde1 ytilde2"), w(k, "ytilde2 ytilde1")));
        same_on_spanning(2..=3, |k| (w(k, "ytilde2"), w(k, "T1 ytilde1 T1")));
        same_on_spanning(2..=3, |k| (w(k, "ytilde1 T1 z1"), w(k, "T1 z1 T1 ytilde1 T1")));
    }

    #[test]
    fn y_and_ytilde_expansions_invert() {
        for k in 1..=3 {
            for i in 1..=k {
                let y = BraidWord { k, gens: vec![BraidGen::Y(i)] };
                same_on_spanning(k..=k, |_| (y.clone(), y.expand_y()));
            }
        }
    }

    #[test]
    fn creation_images() {
        let z = BraidWord::parse(2, "z1").unwrap();
        assert_eq!(z.create(CreationHom::PhiPlus).gens, vec![BraidGen::Z(2)]);
        let y = BraidWord::parse(2, "y1").unwrap();
        assert_eq!(y.create(CreationHom::PhiMinus), BraidWord { k: 3, gens: vec![BraidGen::Y(1)] });
        assert_eq!(y.create(CreationHom::PhiPlusStar).gens, vec![BraidGen::Y(2)]);
        // phi_+(y_1) = T_1 y_1 T_1^-1
        let a = BraidWord::parse(1, "y1").unwrap().create(CreationHom::PhiPlus);
        same_on_spanning(2..=2, |_| (a.clone(), BraidWord::parse(2, "T1 y1 Tinv1").unwrap()));
    }
}
