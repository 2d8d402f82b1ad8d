//! Square Dyck paths with marked corners and their characteristic functions.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::coeffring::Scalar;
use crate::error::{Error, Result};
use crate::symfunc::{partitions, SymFunc};

/// Largest size for which characteristic functions are enumerated.
pub const CHAR_BUDGET: usize = 10;

/// An `(n,n)`-Dyck path given by column heights: column `c` has `heights[c]`
/// North steps before its East step. Marks are corner cells `(column, row)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MarkedSquarePath {
    heights: Vec<usize>,
    marks: BTreeSet<(usize, usize)>,
}

impl MarkedSquarePath {
    pub fn new(heights: Vec<usize>, marks: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let n = heights.len();
        for (c, &h) in heights.iter().enumerate() {
            if h < c + 1 || h > n || (c > 0 && h < heights[c - 1]) {
                return Err(Error::InvalidArgument(format!("heights {heights:?} do not form a Dyck path")));
            }
        }
        let p = MarkedSquarePath { heights, marks: BTreeSet::new() };
        let mut marks_set = BTreeSet::new();
        for cell in marks {
            if !p.is_corner(cell) {
                return Err(Error::InvalidArgument(format!("cell {cell:?} is not a corner")));
            }
            marks_set.insert(cell);
        }
        Ok(MarkedSquarePath { marks: marks_set, ..p })
    }

    /// Parses `1`/`0` steps of a square path.
    pub fn from_bits(s: &str, marks: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut heights = Vec::new();
        let mut h = 0;
        for c in s.chars() {
            match c {
                '1' | 'N' => h += 1,
                '0' | 'E' => heights.push(h),
                _ => return Err(Error::Parse(format!("bad step '{c}'"))),
            }
        }
        if h != heights.len() {
            return Err(Error::InvalidArgument("path is not square".into()));
        }
        Self::new(heights, marks)
    }

    pub fn n(&self) -> usize {
        self.heights.len()
    }

    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    pub fn marks(&self) -> &BTreeSet<(usize, usize)> {
        &self.marks
    }

    /// Cell `(c, r)` lies above the path while `(c, r-1)` and `(c+1, r)` lie below.
    pub fn is_corner(&self, (c, r): (usize, usize)) -> bool {
        c + 1 < self.n() && r == self.heights[c] && r < self.heights[c + 1]
    }

    pub fn corners(&self) -> Vec<(usize, usize)> {
        (0..self.n().saturating_sub(1)).map(|c| (c, self.heights[c])).filter(|&x| self.is_corner(x)).collect()
    }

    /// Cells strictly between the path and the diagonal.
    pub fn area(&self) -> usize {
        self.heights.iter().enumerate().map(|(c, h)| h - c - 1).sum()
    }

    pub fn bits(&self) -> String {
        let mut s = String::new();
        let mut prev = 0;
        for &h in &self.heights {
            s.extend(std::iter::repeat_n('1', h - prev));
            s.push('0');
            prev = h;
        }
        s
    }

    pub fn admissible(&self, w: &[u32]) -> bool {
        self.marks.iter().all(|&(i, j)| w[i] > w[j])
    }

    /// Pairs `i < j` with `w_i > w_j` whose cell lies under the path.
    pub fn inv(&self, w: &[u32]) -> usize {
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..self.heights[i] {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    fn check_budget(&self, limit: usize) -> Result<()> {
        if self.n() > limit {
            return Err(Error::Resource(format!("size {} exceeds enumeration budget {limit}", self.n())));
        }
        Ok(())
    }
}

impl fmt::Display for MarkedSquarePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bits())?;
        if !self.marks.is_empty() {
            let m: Vec<String> = self.marks.iter().map(|(c, r)| format!("({c},{r})")).collect();
            write!(f, " marks {}", m.join(""))?;
        }
        Ok(())
    }
}

fn q_series<S: Scalar>(counts: &[i128]) -> S {
    counts.iter().enumerate().filter(|(_, &c)| c != 0).fold(S::zero(), |acc, (k, &c)| acc.add(&S::q_pow(k as i32).scale_int(c)))
}

/// `chi(pi, S)`: the coefficient of `m_lambda` is the weighted count of
/// admissible words with content `lambda`.
pub fn char_function<S: Scalar>(mp: &MarkedSquarePath) -> Result<SymFunc<S>> {
    mp.check_budget(CHAR_BUDGET)?;
    let n = mp.n();
    let mut terms = Vec::new();
    for lam in partitions(n) {
        let mut counts = vec![0u32; lam.len()];
        for (i, &p) in lam.parts().iter().enumerate() {
            counts[i] = p as u32;
        }
        let mut hist = vec![0i128; n * n / 2 + 1];
        let mut w = Vec::with_capacity(n);
        fn rec(mp: &MarkedSquarePath, counts: &mut [u32], w: &mut Vec<u32>, hist: &mut [i128]) {
            if w.len() == mp.n() {
                if mp.admissible(w) {
                    hist[mp.inv(w)] += 1;
                }
                return;
            }
            for letter in 0..counts.len() {
                if counts[letter] > 0 {
                    counts[letter] -= 1;
                    w.push(letter as u32 + 1);
                    rec(mp, counts, w, hist);
                    w.pop();
                    counts[letter] += 1;
                }
            }
        }
        rec(mp, &mut counts, &mut w, &mut hist);
        let c: S = q_series(&hist);
        if !c.is_zero() {
            terms.push((lam, c));
        }
    }
    Ok(SymFunc::from_terms(n, terms))
}

/// `chi(pi, S)` by summing over all words in `{1..n}^n`, aggregated with a
/// symmetry check. Limited to `n <= 6`.
pub fn char_function_words<S: Scalar>(mp: &MarkedSquarePath) -> Result<SymFunc<S>> {
    mp.check_budget(6)?;
    let n = mp.n();
    if n == 0 {
        return Ok(SymFunc::one(0));
    }
    let total = (n as u64).pow(n as u32);
    let mut words = Vec::new();
    for code in 0..total {
        let mut c = code;
        let w: Vec<u32> = (0..n)
            .map(|_| {
                let d = (c % n as u64) as u32 + 1;
                c /= n as u64;
                d
            })
            .collect();
        if mp.admissible(&w) {
            let k = mp.inv(&w);
            words.push((w, S::q_pow(k as i32)));
        }
    }
    SymFunc::from_word_multiset(n, &words)
}

/// Marks every corner.
pub fn fully_marked(heights: Vec<usize>) -> Result<MarkedSquarePath> {
    let p = MarkedSquarePath::new(heights, [])?;
    let c = p.corners();
    MarkedSquarePath::new(p.heights.clone(), c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::CoefRat;
    use crate::symfunc::Partition;

    fn m(v: &[u8]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn single_cell() {
        let p = MarkedSquarePath::from_bits("10", []).unwrap();
        assert_eq!(char_function::<CoefRat>(&p).unwrap(), SymFunc::h(1, 1));
    }

    #[test]
    fn marked_corner_gives_e2() {
        let p = MarkedSquarePath::from_bits("1010", [(0, 1)]).unwrap();
        assert_eq!(char_function::<CoefRat>(&p).unwrap(), SymFunc::e(2, 2));
        assert!(MarkedSquarePath::from_bits("1100", [(0, 2)]).is_err());
    }

    #[test]
    fn unmarked_two_rows() {
        let p = MarkedSquarePath::from_bits("1100", []).unwrap();
        let chi = char_function::<CoefRat>(&p).unwrap();
        assert_eq!(chi.coeff(&m(&[2])), CoefRat::one());
        assert_eq!(chi.coeff(&m(&[1, 1])), CoefRat::one().add(&CoefRat::q()));
        let free = MarkedSquarePath::from_bits("1010", []).unwrap();
        assert_eq!(char_function::<CoefRat>(&free).unwrap(), SymFunc::h(2, 1).mul(&SymFunc::h(2, 1)));
    }

    #[test]
    fn enumerations_agree() {
        for bits in ["111000", "110100", "101100", "110010", "101010", "11010100", "11100100"] {
            let base = MarkedSquarePath::from_bits(bits, []).unwrap();
            let full = fully_marked(base.heights().to_vec()).unwrap();
            for p in [base, full] {
                let a = char_function::<CoefRat>(&p).unwrap();
                let b = char_function_words::<CoefRat>(&p).unwrap();
                assert_eq!(a, b, "{p}");
            }
        }
    }

    #[test]
    fn budget() {
        let big = MarkedSquarePath::new((1..=11).collect(), []).unwrap();
        assert!(matches!(char_function::<CoefRat>(&big), Err(Error::Resource(_))));
    }
}
