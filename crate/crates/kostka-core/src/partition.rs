//! Partitions: weakly decreasing sequences of positive integers.

use crate::error::Error;
use crate::Result;
use serde::{Deserialize, Serialize};
use std::fmt;

/// An integer partition. Parts are stored weakly decreasing with no trailing
/// zeros, so two equal partitions always compare equal structurally.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Build a partition from parts that must already be weakly decreasing.
    /// Trailing zeros are trimmed; interior zeros are rejected.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Build a partition by sorting a multiset of sizes; zeros are dropped.
    pub fn from_multiset(parts: impl Into<Vec<usize>>) -> Self {
        let mut parts = parts.into();
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// The empty partition.
    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of (nonzero) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The i-th part (0-indexed), with zero beyond the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Transpose: column lengths become row lengths.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Cellwise containment: self fits inside `outer`.
    pub fn contained_in(&self, outer: &Partition) -> bool {
        self.parts
            .iter()
            .enumerate()
            .all(|(i, &p)| p <= outer.part(i))
    }

    /// Dominance: every prefix sum of `self` is at least the matching prefix
    /// sum of `other`. Partitions of different sizes are incomparable.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let rows = self.len().max(other.len());
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..rows {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// The statistic n(μ) = Σ (i-1) μ_i.
    pub fn n_stat(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// Cells (row, col), 0-indexed, row-major.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p).map(move |j| (i, j)))
    }

    /// All partitions of `n`, in descending lexicographic order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        fn rec(remaining: usize, max: usize, stack: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: stack.clone() });
                return;
            }
            for next in (1..=remaining.min(max)).rev() {
                stack.push(next);
                rec(remaining - next, next, stack, out);
                stack.pop();
            }
        }
        rec(n, n.max(1), &mut stack, &mut out);
        out
    }

    /// Parse a comma-separated list of parts, e.g. `5,4,3,3,2,1`. An empty
    /// string denotes the empty partition.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Vec<usize> = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {tok:?}")))
            })
            .collect::<Result<_>>()?;
        Partition::new(parts)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[5, 4, 3, 3, 2, 1]).conjugate(), p(&[6, 5, 4, 2, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[6, 6, 3, 3]).conjugate(), p(&[4, 4, 4, 2, 2, 2]));
    }

    #[test]
    fn conjugate_is_involutive_and_size_preserving() {
        for n in 0..=9 {
            for q in Partition::all_of(n) {
                assert_eq!(q.conjugate().conjugate(), q);
                assert_eq!(q.conjugate().size(), q.size());
            }
        }
    }

    #[test]
    fn dominance_examples() {
        assert!(p(&[3, 1]).dominates(&p(&[2, 2])));
        assert!(!p(&[2, 2]).dominates(&p(&[3, 1])));
        assert!(p(&[1, 1, 1]).dominates(&p(&[1, 1, 1])));
        // different sizes are incomparable
        assert!(!p(&[3]).dominates(&p(&[2])));
    }

    #[test]
    fn dominance_is_a_partial_order() {
        for n in 1..=8 {
            let all = Partition::all_of(n);
            for a in &all {
                assert!(a.dominates(a));
                for b in &all {
                    if a.dominates(b) && b.dominates(a) {
                        assert_eq!(a, b);
                    }
                    for c in &all {
                        if a.dominates(b) && b.dominates(c) {
                            assert!(a.dominates(c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn invalid_parts_rejected() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0]).unwrap(), p(&[2, 1]));
    }

    #[test]
    fn partition_counts() {
        // 1, 1, 2, 3, 5, 7, 11, 15, 22, 30
        let counts: Vec<usize> = (0..10).map(|n| Partition::all_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
    }

    #[test]
    fn n_stat_values() {
        assert_eq!(p(&[2, 1]).n_stat(), 1);
        assert_eq!(p(&[1, 1, 1]).n_stat(), 3);
        assert_eq!(p(&[1, 1, 1, 1]).n_stat(), 6);
    }

    #[test]
    fn parse_round_trip() {
        assert_eq!(Partition::parse("5,4,3,3,2,1").unwrap(), p(&[5, 4, 3, 3, 2, 1]));
        assert_eq!(Partition::parse("").unwrap(), Partition::empty());
        assert!(Partition::parse("3,4").is_err());
        assert!(Partition::parse("a,b").is_err());
    }
}
