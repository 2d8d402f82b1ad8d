//! Points moving along the torus diagonal and the special braids they trace.

use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::Serialize;

use super::word::{train_down, BraidGen, BraidWord};
use crate::error::{Error, Result};

/// `c0 + c1 eps + c2 eps'` with `0 < eps' << eps` infinitesimal; compared
/// lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coord(pub [Rational64; 3]);

impl Coord {
    pub const ZERO: Coord = Coord([Rational64::new_raw(0, 1); 3]);

    pub fn exact(r: Rational64) -> Self {
        Coord([r, Rational64::zero(), Rational64::zero()])
    }

    pub fn new(c0: Rational64, c1: Rational64, c2: Rational64) -> Self {
        Coord([c0, c1, c2])
    }

    pub fn add(self, o: Coord) -> Coord {
        Coord([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2]])
    }

    pub fn sub(self, o: Coord) -> Coord {
        Coord([self.0[0] - o.0[0], self.0[1] - o.0[1], self.0[2] - o.0[2]])
    }

    /// Reduces into `[0, 1)`.
    pub fn frac(self) -> Coord {
        let mut fl = self.0[0].floor();
        if fl == self.0[0] && (self.0[1], self.0[2]) < (Rational64::zero(), Rational64::zero()) {
            fl -= Rational64::one();
        }
        Coord([self.0[0] - fl, self.0[1], self.0[2]])
    }
}

impl Serialize for Coord {
    fn serialize<Se: serde::Serializer>(&self, s: Se) -> std::result::Result<Se::Ok, Se::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0[0])?;
        for (c, name) in self.0[1..].iter().zip(["e", "e'"]) {
            if !c.is_zero() {
                write!(f, "{}{}{name}", if *c > Rational64::zero() { "+" } else { "" }, c)?;
            }
        }
        Ok(())
    }
}

/// Positions `v_i` (by strand label) of points on the diagonal `y = 1 - x`
/// of the torus, moving along slope `s` with `t = 1/(s+1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointConfig {
    pub t: Coord,
    pub v: Vec<Coord>,
}

/// Position of the next crossing with the diagonal: `x - t` or `x + 1 - t`.
pub fn opnext(x: Coord, t: Coord) -> Result<Coord> {
    if x == t {
        return Err(Error::Inadmissible(format!("point {x} sits at t")));
    }
    let y = if x > t { x.sub(t) } else { x.add(Coord::exact(Rational64::one())).sub(t) };
    Ok(y)
}

impl PointConfig {
    pub fn new(t: Coord, v: Vec<Coord>) -> Result<Self> {
        let cfg = PointConfig { t, v };
        cfg.check()?;
        Ok(cfg)
    }

    pub fn k(&self) -> usize {
        self.v.len()
    }

    fn check(&self) -> Result<()> {
        let zero = Coord::ZERO;
        let one = Coord::exact(Rational64::one());
        for (i, &x) in self.v.iter().enumerate() {
            if x <= zero || x >= one {
                return Err(Error::Inadmissible(format!("point {x} is not in (0,1)")));
            }
            if self.v[..i].contains(&x) {
                return Err(Error::Inadmissible(format!("points collide at {x}")));
            }
        }
        Ok(())
    }

    /// 1-based position of strand `i` in ascending order.
    pub fn rank(&self, i: usize) -> usize {
        1 + self.v.iter().filter(|&&x| x < self.v[i]).count()
    }

    /// Strand labels read in ascending order of position.
    pub fn reading(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.k()).collect();
        idx.sort_by_key(|&i| self.v[i]);
        idx
    }

    /// Moves strand `i` (0-based) to its next crossing; returns the braid
    /// `T_{a'↘a} z_a` (crossing the vertical wall) or `T*_{a'↗a} ytilde_a`.
    pub fn elementary_step(&self, i: usize) -> Result<(BraidWord, PointConfig)> {
        if i >= self.k() {
            return Err(Error::IndexOutOfRange { index: i + 1, k: self.k() });
        }
        let x = self.v[i];
        let y = opnext(x, self.t)?;
        let mut v = self.v.clone();
        v[i] = y;
        let next = PointConfig::new(self.t, v)?;
        let (a, a2) = (self.rank(i), next.rank(i));
        let mut gens = train_down(a2, a);
        gens.push(if x < self.t { BraidGen::Z(a) } else { BraidGen::YTilde(a) });
        Ok((BraidWord { k: self.k(), gens }, next))
    }

    /// `b_{i_1..i_l}(v)` for steps listed in the order they happen (the
    /// first entry moves first).
    pub fn run(&self, order: &[usize]) -> Result<(BraidWord, PointConfig)> {
        let mut cfg = self.clone();
        let mut word = BraidWord::identity(self.k());
        for &i in order {
            let (b, next) = cfg.elementary_step(i)?;
            word = b.then(&word)?;
            cfg = next;
        }
        Ok((word, cfg))
    }

    /// Canonical order for moving strand `i` exactly `alpha_i - 1` times:
    /// rounds in which every unfinished strand moves once, the one with the
    /// largest current position first.
    pub fn canonical_order(&self, alpha: &[usize]) -> Result<Vec<usize>> {
        if alpha.len() != self.k() || alpha.contains(&0) {
            return Err(Error::InvalidComposition(format!("{alpha:?} for {} strands", self.k())));
        }
        let mut left: Vec<usize> = alpha.iter().map(|a| a - 1).collect();
        let mut cfg = self.clone();
        let mut order = Vec::new();
        while left.iter().any(|&l| l > 0) {
            let mut round: Vec<usize> = (0..self.k()).filter(|&i| left[i] > 0).collect();
            round.sort_by_key(|&i| std::cmp::Reverse(cfg.v[i]));
            for i in round {
                cfg = cfg.elementary_step(i)?.1;
                left[i] -= 1;
                order.push(i);
            }
        }
        Ok(order)
    }

    /// `B_{s,v,alpha}`, together with the final configuration.
    pub fn special_braid(&self, alpha: &[usize]) -> Result<(BraidWord, PointConfig)> {
        self.run(&self.canonical_order(alpha)?)
    }
}

/// Checks that `order` moves strand `i` exactly `alpha_i - 1` times.
pub fn is_order_for(order: &[usize], alpha: &[usize]) -> bool {
    let mut count = vec![0usize; alpha.len()];
    for &i in order {
        if i >= alpha.len() {
            return false;
        }
        count[i] += 1;
    }
    count.iter().zip(alpha).all(|(&c, &a)| c + 1 == a)
}

/// `b_{m,n}`: one strand from just left of `1 - t` to just left of `t`,
/// as a word in `y_1` (horizontal wall) and `z_1` (vertical wall).
pub fn single_strand_braid(m: usize, n: usize) -> Result<BraidWord> {
    crate::combinat::check_slope(m, n)?;
    let t0 = Rational64::new(m as i64, (m + n) as i64);
    let t = Coord::exact(t0);
    let mut x = Coord::new(Rational64::one() - t0, Rational64::zero(), -Rational64::one());
    let mut gens = Vec::new();
    for _ in 0..m + n - 2 {
        gens.insert(0, if x < t { BraidGen::Z(1) } else { BraidGen::Y(1) });
        x = opnext(x, t)?;
    }
    Ok(BraidWord { k: 1, gens })
}

/// `b^{(a)}_{m,n} = (b_{m,n} y_1 z_1)^{a-1} b_{m,n}`.
pub fn single_strand_family(m: usize, n: usize, a: usize) -> Result<BraidWord> {
    if a == 0 {
        return Err(Error::InvalidArgument("a must be positive".into()));
    }
    let b = single_strand_braid(m, n)?;
    let mut round = b.clone();
    round.gens.extend([BraidGen::Y(1), BraidGen::Z(1)]);
    round.pow(a - 1).then(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64, b: i64) -> Rational64 {
        Rational64::new(a, b)
    }

    #[test]
    fn one_strand_steps() {
        let t = Coord::exact(r(1, 2));
        let cfg = PointConfig::new(t, vec![Coord::exact(r(1, 5))]).unwrap();
        let (w, next) = cfg.elementary_step(0).unwrap();
        assert_eq!(w.gens, vec![BraidGen::Z(1)]);
        assert_eq!(next.v[0], Coord::exact(r(7, 10)));
        let (w, _) = next.elementary_step(0).unwrap();
        assert_eq!(w.gens, vec![BraidGen::YTilde(1)]);
        assert!(PointConfig::new(t, vec![t]).unwrap().elementary_step(0).is_err());
    }

    #[test]
    fn two_strand_step() {
        let t = Coord::exact(r(1, 2));
        let cfg = PointConfig::new(t, vec![Coord::exact(r(1, 5)), Coord::exact(r(7, 10))]).unwrap();
        // 0.7 > t: moves to 0.2, colliding with the other point.
        assert!(matches!(cfg.elementary_step(1), Err(Error::Inadmissible(_))));
        assert!(matches!(cfg.elementary_step(0), Err(Error::Inadmissible(_))));
        let cfg = PointConfig::new(t, vec![Coord::exact(r(1, 5)), Coord::exact(r(3, 5))]).unwrap();
        let (w, next) = cfg.elementary_step(1).unwrap();
        assert_eq!(next.v[1], Coord::exact(r(1, 10)));
        // a = 2, a' = 1: T*_{1↗2} ytilde_2.
        assert_eq!(w.gens, vec![BraidGen::TInv(1), BraidGen::YTilde(2)]);
        let (w, next) = next.elementary_step(0).unwrap();
        assert_eq!(next.v[0], Coord::exact(r(7, 10)));
        // a = 2, a' = 2.
        assert_eq!(w.gens, vec![BraidGen::Z(2)]);
    }

    #[test]
    fn all_ones_is_empty() {
        let t = Coord::exact(r(2, 5));
        let cfg = PointConfig::new(t, vec![Coord::exact(r(1, 7)), Coord::exact(r(3, 7))]).unwrap();
        assert!(cfg.special_braid(&[1, 1]).unwrap().0.is_empty());
    }

    #[test]
    fn single_strand() {
        assert!(single_strand_braid(1, 1).unwrap().is_empty());
        assert_eq!(single_strand_family(1, 1, 3).unwrap().to_string(), "y1 z1 y1 z1");
        for (m, n) in [(1, 2), (2, 1), (2, 3), (3, 5), (4, 3)] {
            let b = single_strand_braid(m, n).unwrap();
            assert_eq!(b.len(), m + n - 2);
            assert_eq!(b.gens.iter().filter(|g| **g == BraidGen::Z(1)).count(), m - 1);
        }
    }

    #[test]
    fn single_strand_matches_star_replication() {
        use crate::actions::Tower;
        use crate::coeffring::CoefRat;
        use crate::vkspace::{act_dplus_star, VElem};
        let tower = Tower::<CoefRat>::new();
        for (m, n) in [(1, 1), (1, 2), (2, 1), (2, 3), (3, 2), (1, 3), (3, 1), (3, 4)] {
            let rho = tower.build(m, n, true).unwrap();
            let b = single_strand_braid(m, n).unwrap();
            let f = VElem::<CoefRat>::one(0, n + 2);
            let lhs = b.evaluate(&act_dplus_star(&f).mul_y(1).neg()).unwrap();
            let rhs = rho.dplus(&f).unwrap();
            let rhs = if m % 2 == 0 { rhs.neg() } else { rhs };
            assert_eq!(lhs, rhs, "({m},{n})");
        }
    }

    #[test]
    fn admissible_orders_agree() {
        use crate::coeffring::CoefRat;
        use crate::vkspace::{act_dplus, VElem};
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let t = Coord::exact(r(3, 8));
        let cfg = PointConfig::new(t, vec![Coord::exact(r(1, 9)), Coord::exact(r(5, 9)), Coord::exact(r(8, 9))]).unwrap();
        let alpha = [3, 2, 3];
        let (want, fin) = cfg.special_braid(&alpha).unwrap();
        let mut f = VElem::<CoefRat>::one(0, 4);
        for _ in 0..3 {
            f = act_dplus(&f);
        }
        let target = want.evaluate(&f).unwrap();
        let mut base: Vec<usize> = (0..3).flat_map(|i| std::iter::repeat_n(i, alpha[i] - 1)).collect();
        let mut tried = 0;
        for _ in 0..200 {
            base.shuffle(&mut rng);
            assert!(is_order_for(&base, &alpha));
            let Ok((w, end)) = cfg.run(&base) else { continue };
            assert_eq!(end, fin);
            assert_eq!(w.evaluate(&f).unwrap(), target, "{base:?}");
            tried += 1;
        }
        assert!(tried > 1);
    }
}
