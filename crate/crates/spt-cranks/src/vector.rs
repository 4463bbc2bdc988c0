//! Weighted vector partitions (π1, π2, π3, π4) with π1, π4 into distinct parts.

use std::fmt;
use std::str::FromStr;

use partition_enum::{enumerate_partitions, Family, Parity, Partition, PartitionConstraints, Smallest};

use crate::error::{CrankError, Result};

/// The four weighted families and, for the first three, their partition-pair analogues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SptFamily {
    SBar,
    SBar1,
    SBar2,
    S2Bar,
}

impl SptFamily {
    pub const ALL: [SptFamily; 4] = [SptFamily::SBar, SptFamily::SBar1, SptFamily::SBar2, SptFamily::S2Bar];

    pub fn name(self) -> &'static str {
        match self {
            SptFamily::SBar => "sbar",
            SptFamily::SBar1 => "sbar1",
            SptFamily::SBar2 => "sbar2",
            SptFamily::S2Bar => "s2bar",
        }
    }

    /// Required parity of the smallest part of π1 (or λ1).
    pub fn smallest_parity(self) -> Option<Parity> {
        match self {
            SptFamily::SBar => None,
            SptFamily::SBar1 => Some(Parity::Odd),
            SptFamily::SBar2 | SptFamily::S2Bar => Some(Parity::Even),
        }
    }

    pub fn table_family(self) -> Family {
        match self {
            SptFamily::SBar => Family::SBar,
            SptFamily::SBar1 => Family::SBar1,
            SptFamily::SBar2 => Family::SBar2,
            SptFamily::S2Bar => Family::S2Bar,
        }
    }

    pub fn from_table_family(f: Family) -> Option<SptFamily> {
        SptFamily::ALL.into_iter().find(|s| s.table_family() == f)
    }
}

impl fmt::Display for SptFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SptFamily {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        SptFamily::ALL.into_iter().find(|v| v.name() == s).ok_or_else(|| format!("unknown family `{s}`"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VectorPartition {
    pub pi1: Partition,
    pub pi2: Partition,
    pub pi3: Partition,
    pub pi4: Partition,
}

impl VectorPartition {
    pub fn size(&self) -> u64 {
        self.pi1.size() + self.pi2.size() + self.pi3.size() + self.pi4.size()
    }

    /// ω = (−1)^{#(π1)−1}
    pub fn weight(&self) -> i64 {
        if self.pi1.num_parts() % 2 == 1 {
            1
        } else {
            -1
        }
    }

    /// #(π2) − #(π3)
    pub fn crank(&self) -> i64 {
        self.pi2.num_parts() as i64 - self.pi3.num_parts() as i64
    }

    /// Membership in `family`.
    pub fn is_member(&self, family: SptFamily) -> bool {
        let s = match self.pi1.smallest() {
            Smallest::Part(s) => s,
            Smallest::Infinity => return false,
        };
        let c = components(family, s);
        c.iter().zip([&self.pi1, &self.pi2, &self.pi3, &self.pi4]).all(|(c, p)| c.admits(p))
    }
}

impl fmt::Display for VectorPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}, {}]", self.pi1, self.pi2, self.pi3, self.pi4)
    }
}

/// Constraints on (π1, π2, π3, π4) when s(π1) = s.
fn components(family: SptFamily, s: u32) -> [PartitionConstraints; 4] {
    let even = (family == SptFamily::S2Bar).then_some(Parity::Even);
    let odd = (family == SptFamily::S2Bar).then_some(Parity::Odd);
    let pi1 = PartitionConstraints {
        min_part: Some(s),
        distinct: true,
        parts_parity: even,
        smallest_parity: family.smallest_parity(),
        ..Default::default()
    };
    let mid = PartitionConstraints { min_part: Some(s), parts_parity: even, ..Default::default() };
    let pi4 = PartitionConstraints { min_part: Some(s + 1), distinct: true, parts_parity: odd, ..Default::default() };
    [pi1, mid.clone(), mid, pi4]
}

/// A vector partition with its weight and crank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedVector {
    pub vector: VectorPartition,
    pub weight: i64,
    pub crank: i64,
}

/// Every vector partition of `n` in `family`.
///
/// Ordered by s(π1), then by the sizes of the four components, then
/// lexicographically descending within each component.
pub fn enumerate_vector_partitions(n: u32, family: SptFamily) -> Vec<WeightedVector> {
    let mut out = Vec::new();
    for s in 1..=n {
        if family.smallest_parity().is_some_and(|p| Parity::of(s) != p) {
            continue;
        }
        let c = components(family, s);
        // π1 must contain s itself.
        let firsts: Vec<Partition> = (s..=n)
            .flat_map(|a| enumerate_partitions(a, &c[0]))
            .filter(|p| p.smallest() == Smallest::Part(s))
            .collect();
        for p1 in &firsts {
            let r1 = n - p1.size() as u32;
            for b in 0..=r1 {
                let twos = enumerate_partitions(b, &c[1]);
                for c3 in 0..=r1 - b {
                    let threes = enumerate_partitions(c3, &c[2]);
                    let fours = enumerate_partitions(r1 - b - c3, &c[3]);
                    for p2 in &twos {
                        for p3 in &threes {
                            for p4 in &fours {
                                let vector = VectorPartition {
                                    pi1: p1.clone(),
                                    pi2: p2.clone(),
                                    pi3: p3.clone(),
                                    pi4: p4.clone(),
                                };
                                debug_assert!(vector.is_member(family));
                                out.push(WeightedVector { weight: vector.weight(), crank: vector.crank(), vector });
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Build a vector partition from part lists, checking membership.
pub fn vector_partition(parts: [Vec<u32>; 4], family: SptFamily) -> Result<VectorPartition> {
    let [a, b, c, d] = parts;
    let v = VectorPartition {
        pi1: Partition::new(a)?,
        pi2: Partition::new(b)?,
        pi3: Partition::new(c)?,
        pi4: Partition::new(d)?,
    };
    if v.is_member(family) {
        Ok(v)
    } else {
        Err(CrankError::NotMember(family.name()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lines(n: u32, f: SptFamily) -> Vec<String> {
        let mut v: Vec<String> = enumerate_vector_partitions(n, f)
            .iter()
            .map(|w| format!("{} {} {}", w.vector, w.weight, w.crank))
            .collect();
        v.sort();
        v
    }

    #[test]
    fn sbar_three() {
        let mut want = vec![
            "[1, --, --, 2] 1 0",
            "[1, --, 1+1, --] 1 -2",
            "[1, --, 2, --] 1 -1",
            "[1, 1, 1, --] 1 0",
            "[1, 1+1, --, --] 1 2",
            "[1, 2, --, --] 1 1",
            "[2+1, --, --, --] -1 0",
            "[3, --, --, --] 1 0",
        ];
        want.sort();
        assert_eq!(lines(3, SptFamily::SBar), want);
    }

    #[test]
    fn sbar2_four_and_s2bar_six() {
        assert_eq!(lines(4, SptFamily::SBar2).len(), 3);
        let v = enumerate_vector_partitions(6, SptFamily::S2Bar);
        assert_eq!(v.len(), 7);
        assert_eq!(v.iter().map(|w| w.weight).sum::<i64>(), 5);
    }

    #[test]
    fn membership_rejects() {
        assert!(vector_partition([vec![2], vec![1], vec![], vec![]], SptFamily::SBar).is_err());
        assert!(vector_partition([vec![1], vec![], vec![], vec![1]], SptFamily::SBar).is_err());
        assert!(vector_partition([vec![], vec![1], vec![], vec![]], SptFamily::SBar).is_err());
        assert!(vector_partition([vec![1], vec![], vec![], vec![]], SptFamily::SBar2).is_err());
        assert!(vector_partition([vec![2], vec![], vec![], vec![4]], SptFamily::S2Bar).is_err());
        assert!(vector_partition([vec![2], vec![], vec![], vec![3]], SptFamily::S2Bar).is_ok());
    }
}
