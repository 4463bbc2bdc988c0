//! Integer partitions and constrained enumeration.

use std::fmt;

use crate::error::PartitionError;

/// Smallest part, with ∞ for the empty partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Smallest {
    Part(u32),
    Infinity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn of(k: u32) -> Parity {
        if k.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// A weakly decreasing list of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Sorts the parts into descending order; zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.contains(&0) {
            return Err(PartitionError::ZeroPart);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// Wrap parts already in descending order.
    pub(crate) fn from_desc(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]) && !parts.contains(&0));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// |π|
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// #(π)
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// l(π), zero for the empty partition.
    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// s(π)
    pub fn smallest(&self) -> Smallest {
        self.parts.last().map_or(Smallest::Infinity, |&p| Smallest::Part(p))
    }

    pub fn multiplicity(&self, k: u32) -> usize {
        self.parts.iter().filter(|&&p| p == k).count()
    }

    /// ν(π): number of occurrences of the smallest part (0 when empty).
    pub fn nu(&self) -> usize {
        match self.smallest() {
            Smallest::Part(s) => self.multiplicity(s),
            Smallest::Infinity => 0,
        }
    }

    /// n_o(π)
    pub fn num_odd(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 1).count()
    }

    /// n_e(π)
    pub fn num_even(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 0).count()
    }

    pub fn is_distinct(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn has_repeated_odd(&self) -> bool {
        self.parts.windows(2).any(|w| w[0] == w[1] && w[0] % 2 == 1)
    }

    /// Distinct part sizes in descending order.
    pub fn distinct_sizes(&self) -> Vec<u32> {
        let mut v = self.parts.clone();
        v.dedup();
        v
    }

    /// Number of parts `>= k`.
    pub fn count_at_least(&self, k: u32) -> usize {
        self.parts.iter().filter(|&&p| p >= k).count()
    }

    /// Multiset union.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut v = self.parts.clone();
        v.extend_from_slice(&other.parts);
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts: v }
    }
}

impl fmt::Display for Partition {
    /// Parts joined by `+`, or `--` for the empty partition.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "--");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Restrictions on the partitions produced by [`for_each_partition`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PartitionConstraints {
    /// Every part is at least this (default 1).
    pub min_part: Option<u32>,
    pub max_part: Option<u32>,
    pub distinct: bool,
    /// No odd part repeated.
    pub distinct_odd_parts: bool,
    pub parts_parity: Option<Parity>,
    pub smallest_parity: Option<Parity>,
    /// Every part strictly greater than this value must be odd.
    pub odd_above: Option<u32>,
}

impl PartitionConstraints {
    fn allows(&self, p: u32) -> bool {
        if let Some(par) = self.parts_parity {
            if Parity::of(p) != par {
                return false;
            }
        }
        if let Some(x) = self.odd_above {
            if p > x && p.is_multiple_of(2) {
                return false;
            }
        }
        true
    }

    /// Whether `p` satisfies every constraint (used as a shared membership predicate).
    pub fn admits(&self, p: &Partition) -> bool {
        let min = self.min_part.unwrap_or(1);
        let parts = p.parts();
        if parts.iter().any(|&x| x < min || !self.allows(x)) {
            return false;
        }
        if let Some(mx) = self.max_part {
            if p.largest() > mx {
                return false;
            }
        }
        if self.distinct && !p.is_distinct() {
            return false;
        }
        if self.distinct_odd_parts && p.has_repeated_odd() {
            return false;
        }
        if let Some(par) = self.smallest_parity {
            match p.smallest() {
                Smallest::Part(s) if Parity::of(s) == par => {}
                _ => return false,
            }
        }
        true
    }
}

/// Visit every partition of `n` satisfying `c`, in lexicographically descending order.
pub fn for_each_partition(n: u32, c: &PartitionConstraints, mut f: impl FnMut(&[u32])) {
    let mut stack = Vec::new();
    let max = c.max_part.unwrap_or(n).min(n);
    walk(n, max, c.min_part.unwrap_or(1).max(1), c, &mut stack, &mut f);
}

fn walk(rem: u32, max: u32, min: u32, c: &PartitionConstraints, stack: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
    if rem == 0 {
        if let Some(par) = c.smallest_parity {
            match stack.last() {
                Some(&s) if Parity::of(s) == par => {}
                _ => return,
            }
        }
        f(stack);
        return;
    }
    let hi = max.min(rem);
    if hi < min {
        return;
    }
    for p in (min..=hi).rev() {
        if !c.allows(p) {
            continue;
        }
        let next = if c.distinct || (c.distinct_odd_parts && p % 2 == 1) { p - 1 } else { p };
        stack.push(p);
        walk(rem - p, next, min, c, stack, f);
        stack.pop();
    }
}

/// All partitions of `n` satisfying `c`, lexicographically descending.
pub fn enumerate_partitions(n: u32, c: &PartitionConstraints) -> Vec<Partition> {
    let mut out = Vec::new();
    for_each_partition(n, c, |p| out.push(Partition::from_desc(p.to_vec())));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strs(v: &[Partition]) -> Vec<String> {
        v.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn partitions_of_four() {
        let v = enumerate_partitions(4, &PartitionConstraints::default());
        assert_eq!(strs(&v), ["4", "3+1", "2+2", "2+1+1", "1+1+1+1"]);
    }

    #[test]
    fn empty_partition_of_zero() {
        let v = enumerate_partitions(0, &PartitionConstraints::default());
        assert_eq!(v, vec![Partition::empty()]);
        assert_eq!(v[0].smallest(), Smallest::Infinity);
        assert_eq!(v[0].to_string(), "--");
        assert_eq!(v[0].nu(), 0);
    }

    #[test]
    fn distinct_odd_smallest_even_six() {
        let c = PartitionConstraints {
            distinct_odd_parts: true,
            smallest_parity: Some(Parity::Even),
            ..Default::default()
        };
        assert_eq!(strs(&enumerate_partitions(6, &c)), ["6", "4+2", "2+2+2"]);
    }

    #[test]
    fn contradictory_constraints_are_empty() {
        let c = PartitionConstraints { parts_parity: Some(Parity::Even), ..Default::default() };
        assert!(enumerate_partitions(5, &c).is_empty());
        let c = PartitionConstraints { min_part: Some(4), max_part: Some(3), ..Default::default() };
        assert!(enumerate_partitions(7, &c).is_empty());
    }

    #[test]
    fn counts_match_known_values() {
        let p = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &pn) in p.iter().enumerate() {
            assert_eq!(enumerate_partitions(n as u32, &PartitionConstraints::default()).len(), pn);
        }
        let d = PartitionConstraints { distinct: true, ..Default::default() };
        assert_eq!(enumerate_partitions(10, &d).len(), 10);
    }

    #[test]
    fn every_enumerated_partition_is_admitted() {
        let c = PartitionConstraints { min_part: Some(3), odd_above: Some(6), ..Default::default() };
        let all = enumerate_partitions(20, &PartitionConstraints::default());
        let chosen = enumerate_partitions(20, &c);
        let filtered: Vec<_> = all.into_iter().filter(|p| c.admits(p)).collect();
        assert_eq!(chosen, filtered);
    }

    #[test]
    fn basic_counts() {
        let p = Partition::new(vec![1, 5, 2, 1]).unwrap();
        assert_eq!(p.to_string(), "5+2+1+1");
        assert_eq!(p.nu(), 2);
        assert_eq!(p.num_odd(), 3);
        assert_eq!(p.largest(), 5);
        assert!(p.has_repeated_odd());
        assert!(Partition::new(vec![0, 2]).is_err());
    }
}
