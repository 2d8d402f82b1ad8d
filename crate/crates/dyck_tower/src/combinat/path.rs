//! Rational Dyck paths, the reading order and path statistics.

use std::collections::HashMap;
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use super::marked::MarkedSquarePath;
use super::slope::SlopeValue;
use crate::error::{Error, Result};

pub type Point = (i64, i64);

/// A lattice path from `(0,0)` to `(m,n)` weakly above `y = (n/m) x`.
/// `steps[i]` is `true` for a North step.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    m: usize,
    n: usize,
    steps: Vec<bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Statistics {
    pub area: usize,
    pub dinv: usize,
    pub maxtdinv: usize,
}

fn above(m: usize, n: usize, (x, y): Point) -> bool {
    y * m as i64 >= x * n as i64
}

impl DyckPath {
    pub fn new(m: usize, n: usize, steps: Vec<bool>) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidArgument("path dimensions must be positive".into()));
        }
        if steps.len() != m + n || steps.iter().filter(|&&b| b).count() != n {
            return Err(Error::InvalidArgument(format!("step sequence does not end at ({m},{n})")));
        }
        let p = DyckPath { m, n, steps };
        if let Some(pt) = p.points().into_iter().find(|&pt| !above(m, n, pt)) {
            return Err(Error::InvalidArgument(format!("path passes below the diagonal at {pt:?}")));
        }
        Ok(p)
    }

    /// Parses a `1`/`0` (North/East) string; the endpoint is read off the bits.
    pub fn from_bits(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .filter(|c| !matches!(c, ',' | ' '))
            .map(|c| match c {
                '1' | 'N' => Ok(true),
                '0' | 'E' => Ok(false),
                _ => Err(Error::Parse(format!("bad step '{c}'"))),
            })
            .collect::<Result<Vec<_>>>()?;
        let n = steps.iter().filter(|&&b| b).count();
        Self::new(steps.len() - n, n, steps)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn steps(&self) -> &[bool] {
        &self.steps
    }

    pub fn bits(&self) -> String {
        self.steps.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }

    pub fn value(&self, pt: Point) -> SlopeValue {
        SlopeValue::of_point(self.m, self.n, pt.0, pt.1)
    }

    /// Lattice points visited, starting at the origin.
    pub fn points(&self) -> Vec<Point> {
        let mut out = vec![(0, 0)];
        let (mut x, mut y) = (0, 0);
        for &s in &self.steps {
            if s {
                y += 1
            } else {
                x += 1
            }
            out.push((x, y));
        }
        out
    }

    /// Start points of North steps, in path order.
    pub fn north_starts(&self) -> Vec<Point> {
        let pts = self.points();
        self.steps.iter().enumerate().filter(|(_, &s)| s).map(|(i, _)| pts[i]).collect()
    }

    /// Start points of East steps, in path order.
    pub fn east_starts(&self) -> Vec<Point> {
        let pts = self.points();
        self.steps.iter().enumerate().filter(|(_, &s)| !s).map(|(i, _)| pts[i]).collect()
    }

    /// Lowest height of the path on the vertical line `x`.
    pub fn low_height(&self, x: i64) -> i64 {
        if x == 0 {
            return 0;
        }
        self.east_starts()[x as usize - 1].1
    }

    /// Highest height of the path on the vertical line `x`.
    pub fn high_height(&self, x: i64) -> i64 {
        if x as usize == self.m {
            return self.n as i64;
        }
        self.east_starts()[x as usize].1
    }

    pub fn on_path(&self, (x, y): Point) -> bool {
        (0..=self.m as i64).contains(&x) && y >= self.low_height(x) && y <= self.high_height(x)
    }

    pub fn strictly_below(&self, (x, y): Point) -> bool {
        (0..=self.m as i64).contains(&x) && y >= 0 && y < self.low_height(x)
    }

    pub fn gcd(&self) -> usize {
        self.m.gcd(&self.n)
    }

    /// Points of the path on the line `y = (n/m) x`, origin included.
    pub fn touch_points(&self) -> Vec<Point> {
        self.points().into_iter().filter(|&(x, y)| y * self.m as i64 == x * self.n as i64).collect()
    }

    /// Gaps between consecutive diagonal touches in units of `(m/g, n/g)`.
    pub fn touch_composition(&self) -> Vec<usize> {
        let m1 = (self.m / self.gcd()) as i64;
        let t = self.touch_points();
        t.windows(2).map(|w| ((w[1].0 - w[0].0) / m1) as usize).collect()
    }

    /// Points strictly between the path and the line `y = s_- x`.
    pub fn area(&self) -> usize {
        let mut count = 0;
        for x in 1..=self.m as i64 {
            for y in 0..self.low_height(x) {
                if self.value((x, y)).is_positive() {
                    count += 1;
                }
            }
        }
        count
    }

    /// dinv through the arm/leg inequality `a/(l+1) <= m/n < (a+1)/l`.
    pub fn dinv(&self) -> usize {
        let (m, n) = (self.m as i64, self.n as i64);
        let mut count = 0;
        for &(xi, yi) in &self.east_starts() {
            for &(xj, yj) in &self.north_starts() {
                if xj <= xi {
                    continue;
                }
                let (a, l) = (xj - xi - 1, yj - yi);
                if a * n <= m * (l + 1) && m * l < n * (a + 1) {
                    count += 1;
                }
            }
        }
        count
    }

    /// dinv as the number of (East, North) pairs, East to the left, met by a
    /// common line of slope `s_-`.
    pub fn dinv_geometric(&self) -> usize {
        let one = SlopeValue { r: 1.into(), e: 0 };
        let plus = |a: SlopeValue, b: SlopeValue| SlopeValue { r: a.r + b.r, e: a.e + b.e };
        let mut count = 0;
        for &(xi, yi) in &self.east_starts() {
            let (hi_lo, hi_hi) = (self.value((xi + 1, yi)), self.value((xi, yi)));
            for &(xj, yj) in &self.north_starts() {
                if xj <= xi {
                    continue;
                }
                let lo = self.value((xj, yj));
                let hi = plus(lo, one);
                if lo <= hi_hi && hi_lo <= hi {
                    count += 1;
                }
            }
        }
        count
    }

    /// The attack graph `pi'` with the marking by consecutive North steps.
    pub fn attack_structure(&self) -> MarkedSquarePath {
        let rank = rank_map(self.m, self.n);
        let norths = self.north_starts();
        let mut order: Vec<usize> = (0..norths.len()).collect();
        order.sort_by_key(|&i| rank[&norths[i]]);
        let mut pos = vec![0; norths.len()];
        for (p, &i) in order.iter().enumerate() {
            pos[i] = p;
        }
        let heights: Vec<usize> = order
            .iter()
            .map(|&i| {
                let (x, y) = norths[i];
                let top = rank[&(x, y + 1)];
                norths.iter().filter(|pt| rank[pt] < top).count()
            })
            .collect();
        let mut marks = Vec::new();
        for i in 0..norths.len().saturating_sub(1) {
            let (x, y) = norths[i];
            if norths[i + 1] == (x, y + 1) {
                marks.push((pos[i], pos[i + 1]));
            }
        }
        MarkedSquarePath::new(heights, marks).expect("attack graph is a marked Dyck path")
    }

    /// Pairs `(i, j)` of North steps (path-order indices) with `i` attacking `j`.
    pub fn attacks(&self) -> Vec<(usize, usize)> {
        let rank = rank_map(self.m, self.n);
        let norths = self.north_starts();
        let mut out = Vec::new();
        for (i, &(x, y)) in norths.iter().enumerate() {
            let (lo, hi) = (rank[&(x, y)], rank[&(x, y + 1)]);
            for (j, pt) in norths.iter().enumerate() {
                if lo < rank[pt] && rank[pt] < hi {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Labels of North steps (path order) that decrease along every pair of
    /// consecutive North steps.
    pub fn is_word_parking(&self, w: &[u32]) -> bool {
        let norths = self.north_starts();
        (0..norths.len().saturating_sub(1))
            .all(|i| norths[i + 1] != (norths[i].0, norths[i].1 + 1) || w[i] > w[i + 1])
    }

    pub fn tdinv(&self, w: &[u32]) -> usize {
        self.attacks().into_iter().filter(|&(i, j)| w[i] > w[j]).count()
    }

    pub fn maxtdinv(&self) -> usize {
        self.attack_structure().area()
    }

    pub fn statistics(&self) -> Statistics {
        Statistics { area: self.area(), dinv: self.dinv(), maxtdinv: self.maxtdinv() }
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bits())
    }
}

/// Lattice points of `[0,m] x [0,n]` weakly above the diagonal, sorted by
/// their value `y - s_- x`.
pub fn reading_order(m: usize, n: usize) -> Vec<Point> {
    let mut pts: Vec<Point> = (0..=m as i64)
        .flat_map(|x| (0..=n as i64).map(move |y| (x, y)))
        .filter(|&pt| above(m, n, pt))
        .collect();
    pts.sort_by_key(|&(x, y)| SlopeValue::of_point(m, n, x, y));
    pts
}

fn rank_map(m: usize, n: usize) -> HashMap<Point, usize> {
    reading_order(m, n).into_iter().enumerate().map(|(i, p)| (p, i)).collect()
}

/// Checks that `alpha` is a composition of `g`.
pub fn check_composition(alpha: &[usize], g: usize) -> Result<()> {
    if alpha.contains(&0) || alpha.iter().sum::<usize>() != g {
        return Err(Error::InvalidComposition(format!("{alpha:?} is not a composition of {g}")));
    }
    Ok(())
}

/// All `(m,n)`-Dyck paths, optionally only those with touch composition `alpha`.
pub fn enumerate_paths(m: usize, n: usize, alpha: Option<&[usize]>) -> Result<Vec<DyckPath>> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument("path dimensions must be positive".into()));
    }
    if let Some(a) = alpha {
        check_composition(a, m.gcd(&n))?;
    }
    fn rec(m: usize, n: usize, x: usize, y: usize, cur: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
        if x == m && y == n {
            out.push(cur.clone());
            return;
        }
        if y < n {
            cur.push(true);
            rec(m, n, x, y + 1, cur, out);
            cur.pop();
        }
        if x < m && above(m, n, (x as i64 + 1, y as i64)) {
            cur.push(false);
            rec(m, n, x + 1, y, cur, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    rec(m, n, 0, 0, &mut Vec::with_capacity(m + n), &mut raw);
    let paths = raw.into_iter().map(|s| DyckPath { m, n, steps: s });
    Ok(match alpha {
        None => paths.collect(),
        Some(a) => paths.filter(|p| p.touch_composition() == a).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig() -> DyckPath {
        DyckPath::from_bits("1100011001010000").unwrap()
    }

    #[test]
    fn small_enumerations() {
        let p11 = enumerate_paths(1, 1, None).unwrap();
        assert_eq!(p11.len(), 1);
        assert_eq!(p11[0].bits(), "10");
        let p22: Vec<String> = enumerate_paths(2, 2, None).unwrap().iter().map(|p| p.bits()).collect();
        assert_eq!(p22, vec!["1100", "1010"]);
        assert!(enumerate_paths(2, 2, Some(&[1, 2])).is_err());
        // Catalan numbers for square paths.
        assert_eq!(enumerate_paths(4, 4, None).unwrap().len(), 14);
        // Rational Catalan number (3+5-1)!/(3!5!) for coprime (3,5).
        assert_eq!(enumerate_paths(3, 5, None).unwrap().len(), 7);
    }

    #[test]
    fn large_example_path() {
        let p = fig();
        assert_eq!((p.m(), p.n()), (10, 6));
        assert!(enumerate_paths(10, 6, None).unwrap().contains(&p));
        assert_eq!(p.touch_composition(), vec![2]);
        assert_eq!(p.area(), 6);
        assert_eq!(p.maxtdinv(), 9);
        let rank = rank_map(10, 6);
        assert_eq!(rank[&(0, 0)], 0);
        assert_eq!(rank[&(5, 3)], 1);
        assert_eq!(rank[&(3, 2)], 3);
        let labels: Vec<usize> = p.north_starts().iter().map(|pt| rank[pt]).collect();
        let mut sorted = labels.clone();
        sorted.sort();
        assert_eq!(sorted, vec![0, 3, 11, 12, 13, 16]);
        let a = p.attack_structure();
        assert_eq!(a.heights(), &[2, 4, 6, 6, 6, 6]);
        assert_eq!(a.marks().iter().copied().collect::<Vec<_>>(), vec![(0, 2), (1, 4)]);
        // (1,1) is an interior point of the region.
        assert!(p.strictly_below((1, 1)) && p.value((1, 1)).is_positive());
    }

    #[test]
    fn square_reading_order() {
        let r = reading_order(2, 2);
        assert_eq!(&r[..3], &[(0, 0), (1, 1), (2, 2)]);
    }

    #[test]
    fn touches() {
        assert_eq!(DyckPath::from_bits("1010").unwrap().touch_composition(), vec![1, 1]);
        assert_eq!(DyckPath::from_bits("1100").unwrap().touch_composition(), vec![2]);
    }

    #[test]
    fn trivial_statistics() {
        let p = DyckPath::from_bits("10").unwrap();
        assert_eq!(p.statistics(), Statistics { area: 0, dinv: 0, maxtdinv: 0 });
        assert!(DyckPath::from_bits("01").is_err());
    }

    #[test]
    fn maxtdinv_is_the_maximum() {
        for m in 1..=4 {
            for n in 1..=4 {
                for p in enumerate_paths(m, n, None).unwrap() {
                    let mut best = 0;
                    for code in 0..(n as u32).pow(n as u32) {
                        let w: Vec<u32> = (0..n as u32).map(|i| code / (n as u32).pow(i) % n as u32).collect();
                        if p.is_word_parking(&w) {
                            best = best.max(p.tdinv(&w));
                        }
                    }
                    assert_eq!(best, p.maxtdinv(), "{p}");
                }
            }
        }
    }

    #[test]
    fn dinv_implementations_agree() {
        for m in 1..=5 {
            for n in 1..=5 {
                for p in enumerate_paths(m, n, None).unwrap() {
                    assert_eq!(p.dinv(), p.dinv_geometric(), "{p} ({m},{n})");
                }
            }
        }
    }
}
