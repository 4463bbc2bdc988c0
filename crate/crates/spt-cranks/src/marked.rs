//! Marked overpartitions (π, j) and the spt-crank.

use std::fmt;

use partition_enum::{for_each_overpartition, Overpartition, OverpartitionConstraints, Parity, Partition, Smallest};

use crate::bijection::k_partition;
use crate::error::{CrankError, Result};

/// An overpartition with non-overlined smallest part and a mark 1 ≤ j ≤ ν(π).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkedOverpartition {
    pi: Overpartition,
    j: usize,
}

impl MarkedOverpartition {
    pub fn new(pi: Overpartition, j: usize) -> Result<Self> {
        if pi.smallest() == Smallest::Infinity || pi.smallest_overlined() {
            return Err(CrankError::NotMember("marked overpartitions"));
        }
        let nu = pi.parts().nu();
        if j == 0 || j > nu {
            return Err(CrankError::InvalidMark { j, nu });
        }
        Ok(MarkedOverpartition { pi, j })
    }

    pub fn overpartition(&self) -> &Overpartition {
        &self.pi
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn size(&self) -> u64 {
        self.pi.size()
    }

    /// Non-overlined parts.
    pub fn pi1(&self) -> Partition {
        self.pi.non_overlined()
    }

    /// Overlined parts.
    pub fn pi2(&self) -> Partition {
        self.pi.overlined_parts()
    }

    /// s(π) = s(π1).
    pub fn s(&self) -> u32 {
        match self.pi.smallest() {
            Smallest::Part(s) => s,
            Smallest::Infinity => unreachable!("validated on construction"),
        }
    }

    /// k(π2, s(π1)).
    pub fn k_pi2(&self) -> u64 {
        k_partition(&self.pi2(), self.s()).expect("overlined parts exceed the smallest part")
    }

    /// k̄ = ν(π1) − j + k(π2, s(π1)).
    pub fn kbar(&self) -> u64 {
        (self.pi1().nu() - self.j) as u64 + self.k_pi2()
    }

    pub fn sptcrank(&self) -> i64 {
        let k = self.kbar();
        let pi1 = self.pi1();
        if k > 0 {
            pi1.count_at_least(self.s() + k as u32) as i64 - k as i64
        } else {
            pi1.num_parts() as i64 - 1
        }
    }
}

impl fmt::Display for MarkedOverpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.pi, self.j)
    }
}

/// Visit the marked overpartitions of `n` with optional smallest-part parity,
/// ordered by overpartition and then by mark.
pub fn for_each_marked(n: u32, parity: Option<Parity>, mut f: impl FnMut(&MarkedOverpartition)) {
    let c = OverpartitionConstraints { smallest_not_overlined: true, smallest_parity: parity };
    for_each_overpartition(n, &c, |o| {
        for j in 1..=o.parts().nu() {
            f(&MarkedOverpartition { pi: o.clone(), j });
        }
    });
}

pub fn enumerate_marked(n: u32, parity: Option<Parity>) -> Vec<MarkedOverpartition> {
    let mut out = Vec::new();
    for_each_marked(n, parity, |m| out.push(m.clone()));
    out
}

/// Class sizes of sptcrank mod t over the marked overpartitions of `n`.
pub fn sptcrank_classes(n: u32, parity: Option<Parity>, t: u32) -> Vec<u64> {
    let mut out = vec![0u64; t as usize];
    for_each_marked(n, parity, |m| out[m.sptcrank().rem_euclid(t as i64) as usize] += 1);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mop(parts: &[u32], over: &[u32], j: usize) -> MarkedOverpartition {
        let o = Overpartition::new(Partition::new(parts.to_vec()).unwrap(), over.to_vec()).unwrap();
        MarkedOverpartition::new(o, j).unwrap()
    }

    #[test]
    fn worked_values() {
        let m = mop(&[2, 1, 1, 1], &[2], 2);
        assert_eq!((m.kbar(), m.sptcrank()), (1, -1));
        let m = mop(&[1, 1, 1], &[], 3);
        assert_eq!((m.kbar(), m.sptcrank()), (0, 2));
        let m = mop(&[8], &[], 1);
        assert_eq!((m.kbar(), m.sptcrank()), (0, 0));
        let m = mop(&[6, 2], &[6], 1);
        assert_eq!((m.k_pi2(), m.kbar(), m.sptcrank()), (2, 2, -2));
    }

    #[test]
    fn invalid_marks() {
        let o = Overpartition::new(Partition::new(vec![2, 1]).unwrap(), vec![]).unwrap();
        assert!(matches!(MarkedOverpartition::new(o.clone(), 2), Err(CrankError::InvalidMark { .. })));
        assert!(MarkedOverpartition::new(o, 0).is_err());
        let o = Overpartition::new(Partition::new(vec![2, 1]).unwrap(), vec![1]).unwrap();
        assert!(MarkedOverpartition::new(o, 1).is_err());
    }

    #[test]
    fn class_examples() {
        assert_eq!(sptcrank_classes(3, None, 3), vec![2, 2, 2]);
        assert_eq!(sptcrank_classes(8, Some(Parity::Even), 5), vec![3; 5]);
        let mut c = sptcrank_classes(5, Some(Parity::Odd), 4);
        c.sort();
        assert_eq!(c, vec![4, 4, 6, 6]);
    }
}
