//! The per-path sweep: a line of slope `s_-` moves down through the region
//! between a path and the diagonal, applying an operator at every lattice
//! point it crosses.

use std::fmt;

use serde::Serialize;

use crate::coeffring::Scalar;
use crate::combinat::{DyckPath, Point};
use crate::error::Result;
use crate::symfunc::SymFunc;
use crate::vkspace::{act_dminus, act_dplus, VElem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum EventKind {
    /// North step followed by an East step: `d_+`.
    A,
    /// East step followed by a North step, or the origin: `d_-`.
    B,
    /// Inside a vertical run: `q^-a (d_- d_+ - d_+ d_-)/(q-1)`.
    C,
    /// Inside a horizontal run: multiplication by `q^a`.
    D,
    /// Strictly inside the region: multiplication by `t`.
    E,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SweepEvent {
    pub point: Point,
    pub kind: EventKind,
    /// Vertical path steps met by the line to the right of the event (C, D).
    pub a: usize,
}

impl fmt::Display for SweepEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            EventKind::C | EventKind::D => write!(f, "{:?}:{:?}(a={})", self.point, self.kind, self.a),
            _ => write!(f, "{:?}:{:?}", self.point, self.kind),
        }
    }
}

/// Events of `p` in sweep order (descending value of `y - s_- x`).
pub fn event_sequence(p: &DyckPath) -> Vec<SweepEvent> {
    let (m, n) = (p.m() as i64, p.n() as i64);
    let steps = p.steps();
    let pts = p.points();
    let norths = p.north_starts();
    let index: std::collections::HashMap<Point, usize> = pts.iter().enumerate().map(|(i, &q)| (q, i)).collect();
    let mut cand: Vec<Point> = (0..=m)
        .flat_map(|x| (0..=n).map(move |y| (x, y)))
        .filter(|&pt| pt != (m, n) && pt.1 * m >= pt.0 * n && (p.on_path(pt) || p.strictly_below(pt)))
        .collect();
    cand.sort_by_key(|&pt| std::cmp::Reverse(p.value(pt)));
    cand.into_iter()
        .map(|pt| {
            let kind = match index.get(&pt) {
                None => EventKind::E,
                Some(0) => EventKind::B,
                Some(&i) => match (steps[i - 1], steps[i]) {
                    (true, false) => EventKind::A,
                    (false, true) => EventKind::B,
                    (true, true) => EventKind::C,
                    (false, false) => EventKind::D,
                },
            };
            let a = if matches!(kind, EventKind::C | EventKind::D) {
                let v = p.value(pt);
                norths.iter().filter(|&&(x, y)| x > pt.0 && p.value((x, y)) < v && v < p.value((x, y + 1))).count()
            } else {
                0
            };
            SweepEvent { point: pt, kind, a }
        })
        .collect()
}

/// `(d_- d_+ - d_+ d_-)/(q-1)`, the operator of a marked corner.
pub fn corner_op<S: Scalar>(f: &VElem<S>) -> Result<VElem<S>> {
    let x = act_dminus(&act_dplus(f))?;
    let y = act_dplus(&act_dminus(f)?);
    x.sub(&y).div_scalar(&S::q().sub(&S::one()))
}

/// Applies the operator of one event kind.
pub fn apply_rule<S: Scalar>(kind: EventKind, a: usize, f: &VElem<S>) -> Result<VElem<S>> {
    match kind {
        EventKind::A => Ok(act_dplus(f)),
        EventKind::B => act_dminus(f),
        EventKind::C => Ok(corner_op(f)?.scale(&S::q_pow(-(a as i32)))),
        EventKind::D => Ok(f.scale(&S::q_pow(a as i32))),
        EventKind::E => Ok(f.scale(&S::t())),
    }
}

/// Folds all events of `p` over `1 in V_0`.
pub fn sweep_path<S: Scalar>(p: &DyckPath) -> Result<SymFunc<S>> {
    let mut phi = VElem::one(0, p.n());
    for ev in event_sequence(p) {
        phi = apply_rule(ev.kind, ev.a, &phi)?;
    }
    Ok(phi.to_sym())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::CoefRat;

    fn kinds(bits: &str) -> Vec<(Point, EventKind, usize)> {
        event_sequence(&DyckPath::from_bits(bits).unwrap()).iter().map(|e| (e.point, e.kind, e.a)).collect()
    }

    #[test]
    fn small_traces() {
        assert_eq!(kinds("10"), vec![((0, 1), EventKind::A, 0), ((0, 0), EventKind::B, 0)]);
        assert_eq!(
            kinds("110"),
            vec![((0, 2), EventKind::A, 0), ((0, 1), EventKind::C, 0), ((0, 0), EventKind::B, 0)]
        );
        let fig = event_sequence(&DyckPath::from_bits("1100011001010000").unwrap());
        assert_eq!(fig.iter().find(|e| e.point == (1, 1)).unwrap().kind, EventKind::E);
    }

    #[test]
    fn small_values() {
        let ne = sweep_path::<CoefRat>(&DyckPath::from_bits("10").unwrap()).unwrap();
        assert_eq!(ne, SymFunc::e(1, 1));
        let nne = sweep_path::<CoefRat>(&DyckPath::from_bits("110").unwrap()).unwrap();
        assert_eq!(nne, SymFunc::e(2, 2));
    }
}
