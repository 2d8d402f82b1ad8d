//! Commutation rules for trains `T_{a↗b}`, `T_{a↘b}` in braid words.

use std::fmt;

use serde::Serialize;

use super::word::{train_down, train_up, BraidGen, BraidWord};
use crate::error::{Error, Result};

/// A factor of a train word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Piece {
    /// `T_{a↗b}`.
    Up(usize, usize),
    /// `T_{a↘b}`.
    Down(usize, usize),
    Gen(BraidGen),
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Piece::Up(a, b) => write!(f, "T[{a}↗{b}]"),
            Piece::Down(a, b) => write!(f, "T[{a}↘{b}]"),
            Piece::Gen(g) => write!(f, "{g}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrainWord {
    pub k: usize,
    pub pieces: Vec<Piece>,
}

impl TrainWord {
    pub fn new(k: usize, pieces: Vec<Piece>) -> Result<Self> {
        let w = TrainWord { k, pieces };
        w.flatten()?;
        Ok(w)
    }

    pub fn flatten(&self) -> Result<BraidWord> {
        let mut gens = Vec::new();
        for p in &self.pieces {
            match *p {
                Piece::Up(a, b) | Piece::Down(a, b) if a == 0 || b == 0 || a > self.k || b > self.k => {
                    return Err(Error::IndexOutOfRange { index: a.max(b), k: self.k });
                }
                Piece::Up(a, b) => gens.extend(train_up(a, b)),
                Piece::Down(a, b) => gens.extend(train_down(a, b)),
                Piece::Gen(g) => gens.push(g),
            }
        }
        BraidWord::new(self.k, gens)
    }
}

impl fmt::Display for TrainWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.pieces.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", v.join(" "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RewriteRule {
    Gluing,
    Collision,
    Overtaking,
    TZ,
    TYTilde,
}

/// `sigma_{a,b}(c)`: `c + 1` for `a <= c < b`, `c - 1` for `a >= c > b`.
pub fn sigma(a: usize, b: usize, c: usize) -> usize {
    if a <= c && c < b {
        c + 1
    } else if a >= c && c > b {
        c - 1
    } else {
        c
    }
}

fn mismatch(rule: RewriteRule, l: Piece, r: Piece) -> Error {
    Error::PatternMismatch(format!("{rule:?} does not apply to {l} {r}"))
}

/// Rewrites the two factors at `site`, `site + 1`.
pub fn rewrite_trains(w: &TrainWord, rule: RewriteRule, site: usize) -> Result<TrainWord> {
    if site + 1 >= w.pieces.len() {
        return Err(Error::PatternMismatch(format!("site {site} out of range")));
    }
    let (l, r) = (w.pieces[site], w.pieces[site + 1]);
    let new: Vec<Piece> = match (rule, l, r) {
        (RewriteRule::Gluing, Piece::Up(a, b), Piece::Up(b2, c)) if b == b2 => vec![Piece::Up(a, c)],
        (RewriteRule::Collision, Piece::Up(a, b), Piece::Down(c, d)) if b != c => {
            let b1 = sigma(d, c, b);
            let c1 = sigma(a, b, c);
            let a1 = sigma(d, c1, a);
            let d1 = sigma(a1, b1, d);
            vec![Piece::Down(c1, d1), Piece::Up(a1, b1)]
        }
        (RewriteRule::Overtaking, Piece::Up(a, b), Piece::Up(c, d)) if d <= a && a < c && d <= b && b < c => {
            vec![Piece::Up(c, d), Piece::Up(sigma(d, c, a), sigma(d, c, b))]
        }
        (RewriteRule::TZ, Piece::Down(a, b), Piece::Gen(BraidGen::Z(b2))) if b == b2 => {
            vec![Piece::Gen(BraidGen::Z(a)), Piece::Up(a, b)]
        }
        (RewriteRule::TYTilde, Piece::Down(a, b), Piece::Gen(BraidGen::YTilde(b2))) if b == b2 => {
            vec![Piece::Gen(BraidGen::YTilde(a)), Piece::Up(a, b)]
        }
        _ => return Err(mismatch(rule, l, r)),
    };
    let mut pieces = w.pieces[..site].to_vec();
    pieces.extend(new);
    pieces.extend_from_slice(&w.pieces[site + 2..]);
    TrainWord::new(w.k, pieces)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::CoefRat;
    use crate::vkspace::{spanning_set, VElem};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn same(a: &TrainWord, b: &TrainWord) -> bool {
        let (fa, fb) = (a.flatten().unwrap(), b.flatten().unwrap());
        spanning_set(a.k, 1).into_iter().all(|(lam, e)| {
            let f = VElem::basis(a.k, 3, lam, e, CoefRat::one());
            fa.evaluate(&f).unwrap() == fb.evaluate(&f).unwrap()
        })
    }

    #[test]
    fn gluing_example() {
        let w = TrainWord::new(5, vec![Piece::Up(1, 3), Piece::Up(3, 5)]).unwrap();
        let g = rewrite_trains(&w, RewriteRule::Gluing, 0).unwrap();
        assert_eq!(g.pieces, vec![Piece::Up(1, 5)]);
        assert!(rewrite_trains(&w, RewriteRule::Collision, 0).is_err());
        assert!(rewrite_trains(&w, RewriteRule::Gluing, 1).is_err());
    }

    #[test]
    fn t_z_example() {
        let w = TrainWord::new(3, vec![Piece::Down(3, 1), Piece::Gen(BraidGen::Z(1))]).unwrap();
        let r = rewrite_trains(&w, RewriteRule::TZ, 0).unwrap();
        assert_eq!(r.pieces, vec![Piece::Gen(BraidGen::Z(3)), Piece::Up(3, 1)]);
        assert!(same(&w, &r));
    }

    #[test]
    fn random_rewrites_preserve_evaluation() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for rule in [RewriteRule::Gluing, RewriteRule::Collision, RewriteRule::Overtaking, RewriteRule::TZ, RewriteRule::TYTilde] {
            let mut done = 0;
            while done < 100 {
                let k = rng.gen_range(1..=4);
                let mut p = || rng.gen_range(1..=k);
                let (a, b, c, d) = (p(), p(), p(), p());
                let pair = match rule {
                    RewriteRule::Gluing => [Piece::Up(a, b), Piece::Up(b, c)],
                    RewriteRule::Collision => [Piece::Up(a, b), Piece::Down(c, d)],
                    RewriteRule::Overtaking => [Piece::Up(a, b), Piece::Up(c, d)],
                    RewriteRule::TZ => [Piece::Down(a, b), Piece::Gen(BraidGen::Z(b))],
                    RewriteRule::TYTilde => [Piece::Down(a, b), Piece::Gen(BraidGen::YTilde(b))],
                };
                let w = TrainWord::new(k, pair.to_vec()).unwrap();
                let Ok(r) = rewrite_trains(&w, rule, 0) else { continue };
                assert!(same(&w, &r), "{rule:?}: {w} -> {r}");
                done += 1;
            }
        }
    }
}
