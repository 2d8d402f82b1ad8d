use std::fmt;

use serde::{Deserialize, Serialize};

/// Integer partition with parts stored in weakly decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Partition(Vec<u8>);

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<u8>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn single(n: u8) -> Self {
        Self::new(vec![n])
    }

    pub fn parts(&self) -> &[u8] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Distinct parts with multiplicities, largest part first.
    pub fn multiplicities(&self) -> Vec<(u8, usize)> {
        let mut out: Vec<(u8, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, c)) if *q == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// All pairs `(nu, rest)` with `nu` a sub-multiset of the parts.
    pub fn splits(&self) -> Vec<(Partition, Partition)> {
        let mults = self.multiplicities();
        let mut out = Vec::new();
        let mut choice = vec![0usize; mults.len()];
        loop {
            let mut nu = Vec::new();
            let mut rest = Vec::new();
            for (i, &(p, m)) in mults.iter().enumerate() {
                nu.extend(std::iter::repeat_n(p, choice[i]));
                rest.extend(std::iter::repeat_n(p, m - choice[i]));
            }
            out.push((Partition(nu), Partition(rest)));
            let mut i = 0;
            loop {
                if i == mults.len() {
                    return out;
                }
                if choice[i] < mults[i].1 {
                    choice[i] += 1;
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
        }
    }

    /// Union of the parts of two partitions.
    pub fn join(&self, o: &Partition) -> Partition {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        Partition::new(v)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Partitions of `n` in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, cur: &mut Vec<u8>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=max.min(n)).rev() {
            cur.push(p as u8);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Compositions of `n` (ordered, positive parts) in lexicographic order.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(compositions(4).len(), 8);
    }

    #[test]
    fn splits_of_repeated_parts() {
        let l = Partition::new(vec![1, 2, 1]);
        assert_eq!(l.parts(), &[2, 1, 1]);
        let s = l.splits();
        assert_eq!(s.len(), 6);
        assert!(s.iter().all(|(a, b)| a.join(b) == l));
    }
}
