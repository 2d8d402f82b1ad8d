//! Admissible colorings and the dynamic program over them.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::events::{apply_rule, event_sequence, EventKind};
use crate::coeffring::Scalar;
use crate::combinat::{check_composition, DyckPath, Point, SlopeValue};
use crate::error::{Error, Result};
use crate::vkspace::VElem;

/// One colored interval: its left end lies on the vertical line `x`, its
/// right end on the horizontal line `y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Interval {
    pub x: i64,
    pub y: i64,
}

/// Intervals ordered from left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Coloring {
    pub intervals: Vec<Interval>,
}

impl Coloring {
    pub fn empty() -> Self {
        Coloring::default()
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// The coloring left at the end of the sweep by paths with touch
    /// composition `alpha`.
    pub fn of_composition(m1: usize, n1: usize, alpha: &[usize]) -> Self {
        let mut intervals = Vec::new();
        let mut acc = 0;
        for &a in alpha {
            let x = (m1 * acc) as i64;
            acc += a;
            intervals.push(Interval { x, y: (n1 * acc) as i64 });
        }
        Coloring { intervals }
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.intervals.iter().map(|i| format!("[x={},y={}]", i.x, i.y)).collect();
        write!(f, "{{{}}}", v.join(" "))
    }
}

/// A contribution to a coloring below a lattice point from one above it;
/// `event` is `None` when the point lies outside the region.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Transition {
    pub point: Point,
    pub event: Option<(EventKind, usize)>,
    pub from: Coloring,
    pub to: Coloring,
}

/// How the lattice point `pt` on the current line sits relative to `c`.
fn classify(c: &Coloring, (x0, y0): Point) -> Vec<(Option<(EventKind, usize)>, Coloring)> {
    let iv = &c.intervals;
    let k = iv.len();
    if let Some(i) = (0..k.saturating_sub(1)).find(|&i| iv[i].y == y0 && iv[i + 1].x == x0) {
        let mut out = iv.clone();
        out[i] = Interval { x: iv[i].x, y: iv[i + 1].y };
        out.remove(i + 1);
        return vec![(Some((EventKind::B, 0)), Coloring { intervals: out })];
    }
    if let Some(i) = iv.iter().position(|v| v.x == x0) {
        return vec![(Some((EventKind::C, k - i - 1)), c.clone())];
    }
    if let Some(i) = iv.iter().position(|v| v.y == y0) {
        return vec![(Some((EventKind::D, k - i - 1)), c.clone())];
    }
    if iv.iter().any(|v| v.x < x0 && v.y > y0) {
        return vec![(Some((EventKind::E, 0)), c.clone())];
    }
    let pos = iv.iter().position(|v| v.x > x0).unwrap_or(k);
    let mut grown = iv.clone();
    grown.insert(pos, Interval { x: x0, y: y0 });
    vec![(Some((EventKind::A, 0)), Coloring { intervals: grown }), (None, c.clone())]
}

/// The values after one lattice point of the sweep.
#[derive(Clone, Debug)]
pub struct DpStratum<S: Scalar> {
    pub point: Point,
    pub values: BTreeMap<Coloring, VElem<S>>,
    pub transitions: Vec<Transition>,
}

#[derive(Clone, Debug)]
pub struct DpResult<S: Scalar> {
    pub m: usize,
    pub n: usize,
    /// Every stratum in sweep order, when requested.
    pub strata: Vec<DpStratum<S>>,
    /// Values at the final line just above the diagonal, restricted to the
    /// colorings `c_alpha` that paths can reach.
    pub last: BTreeMap<Coloring, VElem<S>>,
}

/// Lattice points strictly above the diagonal in sweep order.
pub fn sweep_points(m: usize, n: usize) -> Vec<Point> {
    let (mi, ni) = (m as i64, n as i64);
    let mut pts: Vec<Point> =
        (0..=mi).flat_map(|x| (0..=ni).map(move |y| (x, y))).filter(|&(x, y)| y * mi > x * ni).collect();
    pts.sort_by_key(|&(x, y)| std::cmp::Reverse(SlopeValue::of_point(m, n, x, y)));
    pts
}

/// Runs the coloring recursion from the empty coloring down to the line
/// just above the diagonal.
pub fn recursion_dp<S: Scalar>(m: usize, n: usize, keep_strata: bool) -> Result<DpResult<S>> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument("dimensions must be positive".into()));
    }
    let mut cur: BTreeMap<Coloring, VElem<S>> = BTreeMap::new();
    cur.insert(Coloring::empty(), VElem::one(0, n));
    let mut strata = Vec::new();
    for pt in sweep_points(m, n) {
        let updates: Vec<Result<Vec<(Transition, VElem<S>)>>> = cur
            .par_iter()
            .map(|(c, f)| {
                classify(c, pt)
                    .into_iter()
                    .map(|(event, to)| {
                        let g = match event {
                            Some((kind, a)) => apply_rule(kind, a, f)?,
                            None => f.clone(),
                        };
                        Ok((Transition { point: pt, event, from: c.clone(), to }, g))
                    })
                    .collect()
            })
            .collect();
        let mut next: BTreeMap<Coloring, VElem<S>> = BTreeMap::new();
        let mut transitions = Vec::new();
        for u in updates {
            for (tr, g) in u? {
                match next.get_mut(&tr.to) {
                    Some(acc) => acc.add_assign(&g),
                    None => {
                        next.insert(tr.to.clone(), g);
                    }
                }
                if keep_strata {
                    transitions.push(tr);
                }
            }
        }
        if keep_strata {
            strata.push(DpStratum { point: pt, values: next.clone(), transitions });
        }
        cur = next;
    }
    let g = num_integer::gcd(m, n);
    let finals: Vec<Coloring> =
        crate::symfunc::compositions(g).iter().map(|a| Coloring::of_composition(m / g, n / g, a)).collect();
    cur.retain(|c, _| finals.contains(c));
    Ok(DpResult { m, n, strata, last: cur })
}

/// The per-path sweep stopped just above the diagonal, with the coloring it
/// reaches there.
pub fn truncated_sweep<S: Scalar>(p: &DyckPath) -> Result<(Coloring, VElem<S>)> {
    let mut phi = VElem::one(0, p.n());
    for ev in event_sequence(p) {
        if p.value(ev.point).r <= 0.into() {
            break;
        }
        phi = apply_rule(ev.kind, ev.a, &phi)?;
    }
    let g = p.gcd();
    Ok((Coloring::of_composition(p.m() / g, p.n() / g, &p.touch_composition()), phi))
}

/// Checks that `alpha` is a composition of `g` and returns `c_alpha`.
pub fn composition_coloring(m1: usize, n1: usize, g: usize, alpha: &[usize]) -> Result<Coloring> {
    check_composition(alpha, g)?;
    Ok(Coloring::of_composition(m1, n1, alpha))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::CoefRat;
    use crate::combinat::enumerate_paths;

    #[test]
    fn unit_square() {
        let dp = recursion_dp::<CoefRat>(1, 1, false).unwrap();
        assert_eq!(dp.last.len(), 1);
        let (c, v) = dp.last.iter().next().unwrap();
        assert_eq!(*c, Coloring::of_composition(1, 1, &[1]));
        assert_eq!(*v, VElem::basis(1, 1, Default::default(), vec![1], CoefRat::from_int(-1)));
    }

    #[test]
    fn two_by_two_colorings() {
        let dp = recursion_dp::<CoefRat>(2, 2, false).unwrap();
        let keys: Vec<Coloring> = dp.last.keys().cloned().collect();
        let mut want = vec![Coloring::of_composition(1, 1, &[1, 1]), Coloring::of_composition(1, 1, &[2])];
        want.sort();
        assert_eq!(keys, want);
    }

    #[test]
    fn dp_matches_grouped_paths() {
        for (m, n) in [(3, 2), (2, 3), (2, 4), (3, 3)] {
            let dp = recursion_dp::<CoefRat>(m, n, false).unwrap();
            let mut grouped: BTreeMap<Coloring, VElem<CoefRat>> = BTreeMap::new();
            for p in enumerate_paths(m, n, None).unwrap() {
                let (c, v) = truncated_sweep::<CoefRat>(&p).unwrap();
                match grouped.get_mut(&c) {
                    Some(acc) => acc.add_assign(&v),
                    None => {
                        grouped.insert(c, v);
                    }
                }
            }
            assert_eq!(dp.last, grouped, "({m},{n})");
        }
    }
}
