use std::fmt;

use num_rational::Rational64;
use serde::Serialize;

/// A quantity `r + e*eps` with `eps` a positive infinitesimal, compared
/// lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SlopeValue {
    pub r: Rational64,
    pub e: i64,
}

impl SlopeValue {
    pub const ZERO: SlopeValue = SlopeValue { r: Rational64::new_raw(0, 1), e: 0 };

    /// `y - s_- x` for the slope `s = n/m` tilted down by `eps`.
    pub fn of_point(m: usize, n: usize, x: i64, y: i64) -> Self {
        SlopeValue { r: Rational64::from_integer(y) - Rational64::new(n as i64 * x, m as i64), e: x }
    }

    pub fn is_positive(&self) -> bool {
        *self > Self::ZERO
    }
}

impl fmt::Display for SlopeValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}e", self.r, self.e)
    }
}

impl Serialize for SlopeValue {
    fn serialize<Se: serde::Serializer>(&self, s: Se) -> Result<Se::Ok, Se::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic() {
        let a = SlopeValue::of_point(2, 2, 1, 1);
        let b = SlopeValue::of_point(2, 2, 2, 2);
        let c = SlopeValue::of_point(2, 2, 0, 1);
        assert!(SlopeValue::ZERO < a && a < b && b < c);
        assert!(SlopeValue::of_point(10, 6, 5, 3) < SlopeValue::of_point(10, 6, 3, 2));
    }
}
