//! The slope tower: actions `rho_{m,n}` of `A_q` and `rho*_{m,n}` of
//! `A_{q^-1}` for coprime `(m,n)`, built by repeated replication from the
//! two base actions.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_integer::Integer;
use serde::Serialize;

use crate::coeffring::Scalar;
use crate::error::{Error, Result};
use crate::vkspace::{act_dplus, act_dplus_star, derived_first, derived_index, AlgebraKind, Interp, Op, VElem};

pub type Slope = (usize, usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum MediantStep {
    /// Keep the right neighbor: `(L, R) -> (L + R, R)`.
    N,
    /// Keep the left neighbor: `(L, R) -> (L, L + R)`.
    S,
}

/// The Stern-Brocot descent to a slope.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MediantWord {
    pub steps: Vec<MediantStep>,
    /// Mediants visited, ending with the target (empty for the seeds).
    pub chain: Vec<Slope>,
    /// Neighbors whose mediant is the target: `right.0 * left.1 - left.0 * right.1 = 1`.
    pub left: Slope,
    pub right: Slope,
}

impl MediantWord {
    /// Replays the steps from the seed pair `((0,1), (1,0))`.
    pub fn replay(&self) -> (Slope, Slope) {
        let (mut l, mut r) = ((0, 1), (1, 0));
        for s in &self.steps {
            let mid = (l.0 + r.0, l.1 + r.1);
            match s {
                MediantStep::N => l = mid,
                MediantStep::S => r = mid,
            }
        }
        (l, r)
    }
}

/// Finds the neighbor pair whose mediant is `(m, n)`.
pub fn mediant_decompose(m: usize, n: usize) -> Result<MediantWord> {
    if (m, n) == (0, 0) || m.gcd(&n) != 1 {
        return Err(Error::NotCoprime { m: m as u32, n: n as u32 });
    }
    let (mut l, mut r): (Slope, Slope) = ((0, 1), (1, 0));
    let mut word = MediantWord { steps: Vec::new(), chain: Vec::new(), left: l, right: r };
    if (m, n) == (0, 1) || (m, n) == (1, 0) {
        return Ok(word);
    }
    loop {
        let mid = (l.0 + r.0, l.1 + r.1);
        word.chain.push(mid);
        if mid == (m, n) {
            word.left = l;
            word.right = r;
            return Ok(word);
        }
        // Compare slopes n/m and mid.1/mid.0.
        if n * mid.0 > mid.1 * m {
            word.steps.push(MediantStep::S);
            r = mid;
        } else {
            word.steps.push(MediantStep::N);
            l = mid;
        }
    }
}

/// One action of the tower: its algebra kind and raising operator. `T_i`
/// and `d_-` are those of the base action (with `T_i` inverted for
/// `A_{q^-1}`); the commuting family is derived from the raising operator.
#[derive(Clone)]
pub struct ActionHandle<S: Scalar> {
    pub slope: Slope,
    pub kind: AlgebraKind,
    dplus: Op<S>,
}

impl<S: Scalar> fmt::Debug for ActionHandle<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ActionHandle({:?}, {:?})", self.slope, self.kind)
    }
}

impl<S: Scalar> ActionHandle<S> {
    pub fn star(&self) -> bool {
        self.kind == AlgebraKind::AqInv
    }

    pub fn dplus(&self, f: &VElem<S>) -> Result<VElem<S>> {
        (self.dplus)(f)
    }

    pub fn dplus_op(&self) -> Op<S> {
        self.dplus.clone()
    }

    pub fn t(&self, i: usize, f: &VElem<S>) -> Result<VElem<S>> {
        self.kind.t(i, f, false)
    }

    /// The `i`-th commuting element of this action (`y_i`, or `z_i` for the
    /// conjugate base action).
    pub fn y(&self, i: usize, f: &VElem<S>) -> Result<VElem<S>> {
        let dp = &*self.dplus;
        let first = |g: &VElem<S>| derived_first(self.kind, dp, g);
        derived_index(self.kind, &first, i, f)
    }
}

/// `rho_{0,1}`, `rho*_{1,0}` and everything obtained from them.
pub struct Tower<S: Scalar> {
    cache: Mutex<HashMap<(Slope, bool), Arc<ActionHandle<S>>>>,
}

impl<S: Scalar> Default for Tower<S> {
    fn default() -> Self {
        Tower { cache: Mutex::new(HashMap::new()) }
    }
}

impl<S: Scalar> Tower<S> {
    pub fn new() -> Self {
        Self::default()
    }

    /// `rho_{m,n}` (`star = false`) or `rho*_{m,n}` (`star = true`).
    pub fn build(&self, m: usize, n: usize, star: bool) -> Result<Arc<ActionHandle<S>>> {
        if let Some(h) = self.cache.lock().unwrap().get(&((m, n), star)) {
            return Ok(h.clone());
        }
        let word = mediant_decompose(m, n)?;
        let kind = if star { AlgebraKind::AqInv } else { AlgebraKind::Aq };
        let dplus: Op<S> = match ((m, n), star) {
            ((0, 1), false) => Arc::new(|f| Ok(act_dplus(f))),
            ((1, 0), true) => Arc::new(|f| Ok(act_dplus_star(f))),
            // Partners of the seeds through rho = -q^k rho*.
            ((0, 1), true) => {
                let base = self.build(0, 1, false)?;
                Arc::new(move |f| Ok(base.dplus(f)?.scale(&S::q_pow(-(f.k() as i32)).neg())))
            }
            ((1, 0), false) => {
                let base = self.build(1, 0, true)?;
                Arc::new(move |f| Ok(base.dplus(f)?.scale(&S::q_pow(f.k() as i32)).neg()))
            }
            (_, false) => {
                // -(qt)^{-1} z_1 d_+ with z_1 from rho*_R and d_+ from rho_L.
                let left = self.build(word.left.0, word.left.1, false)?;
                let right = self.build(word.right.0, word.right.1, true)?;
                let c = S::monomial(-1, -2, -1);
                Arc::new(move |f| Ok(right.y(1, &left.dplus(f)?)?.scale(&c)))
            }
            (_, true) => {
                // -y_1 d_+^* with y_1 from rho_L and d_+^* from rho*_R.
                let left = self.build(word.left.0, word.left.1, false)?;
                let right = self.build(word.right.0, word.right.1, true)?;
                Arc::new(move |f| Ok(left.y(1, &right.dplus(f)?)?.neg()))
            }
        };
        let h = Arc::new(ActionHandle { slope: (m, n), kind, dplus });
        Ok(self.cache.lock().unwrap().entry(((m, n), star)).or_insert(h).clone())
    }

    /// Interpretation of words with `d_+`, `y_i` from `rho` and `d_+^*`, `z_i`
    /// from `rho_star`.
    pub fn interp(rho: &Arc<ActionHandle<S>>, rho_star: &Arc<ActionHandle<S>>) -> Interp<S> {
        let (a, b, c, d) = (rho.clone(), rho_star.clone(), rho.clone(), rho_star.clone());
        Interp {
            dplus: Arc::new(move |f| a.dplus(f)),
            dplus_star: Arc::new(move |f| b.dplus(f)),
            y: Arc::new(move |i, f| c.y(i, f)),
            z: Arc::new(move |i, f| d.y(i, f)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::CoefRat;
    use crate::symfunc::Partition;
    use crate::vkspace::{intertwining_relations, relation_check, spanning_set};

    #[test]
    fn descent() {
        let w = mediant_decompose(1, 1).unwrap();
        assert_eq!(w.chain, vec![(1, 1)]);
        assert_eq!((w.left, w.right), ((0, 1), (1, 0)));
        let w = mediant_decompose(2, 3).unwrap();
        assert_eq!(w.chain, vec![(1, 1), (1, 2), (2, 3)]);
        assert_eq!((w.left, w.right), ((1, 2), (1, 1)));
        assert_eq!(w.replay(), ((1, 2), (1, 1)));
        assert!(mediant_decompose(0, 1).unwrap().chain.is_empty());
        assert!(mediant_decompose(2, 4).is_err());
        for m in 0..8usize {
            for n in 0..8usize {
                if let Ok(w) = mediant_decompose(m, n) {
                    let (l, r) = (w.left, w.right);
                    assert_eq!(r.0 * l.1 - l.0 * r.1, 1);
                    if !w.chain.is_empty() {
                        assert_eq!((l.0 + r.0, l.1 + r.1), (m, n));
                    }
                }
            }
        }
    }

    #[test]
    fn first_replication_on_one() {
        let tower = Tower::<CoefRat>::new();
        let one = VElem::one(0, 3);
        let y1 = VElem::basis(1, 3, Partition::empty(), vec![1], CoefRat::one());
        assert_eq!(tower.build(1, 1, true).unwrap().dplus(&one).unwrap(), y1.neg());
        assert_eq!(tower.build(1, 1, false).unwrap().dplus(&one).unwrap(), y1);
        let base = tower.build(0, 1, false).unwrap();
        let f = VElem::basis(1, 3, Partition::single(1), vec![1], CoefRat::one());
        assert_eq!(base.dplus(&f).unwrap(), act_dplus(&f));
    }

    #[test]
    fn partner_relation() {
        let tower = Tower::<CoefRat>::new();
        for m in 0..=5usize {
            for n in 0..=5 - m {
                if mediant_decompose(m, n).is_err() {
                    continue;
                }
                let rho = tower.build(m, n, false).unwrap();
                let star = tower.build(m, n, true).unwrap();
                for k in 0..=2 {
                    for (lam, exps) in spanning_set(k, 2) {
                        let f = VElem::basis(k, 2 + 2 * (m + n), lam, exps, CoefRat::one());
                        let a = rho.dplus(&f).unwrap();
                        let b = star.dplus(&f).unwrap().scale(&CoefRat::q_pow(k as i32)).neg();
                        assert_eq!(a, b, "({m},{n}) k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn replication_pairs_intertwine() {
        let tower = Tower::<CoefRat>::new();
        for (m, n) in [(1, 1), (1, 2), (2, 1)] {
            let w = mediant_decompose(m, n).unwrap();
            let left = tower.build(w.left.0, w.left.1, false).unwrap();
            let right = tower.build(w.right.0, w.right.1, true).unwrap();
            let rho = tower.build(m, n, false).unwrap();
            let star = tower.build(m, n, true).unwrap();
            for (a, b) in [(&left, &right), (&rho, &right), (&left, &star)] {
                let interp = Tower::interp(a, b);
                for k in 1..=2 {
                    for rel in intertwining_relations::<CoefRat>(k) {
                        let rep = relation_check(&interp, &rel, 3).unwrap();
                        assert!(rep.passed(), "{:?}/{:?}: {}", a.slope, b.slope, rel.name);
                    }
                }
            }
        }
    }
}
