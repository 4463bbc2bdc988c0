//! SP̄ partition pairs (λ1, λ2) and their crank.

use std::fmt;

use partition_enum::{enumerate_partitions, for_each_partition, Parity, Partition, PartitionConstraints, Smallest};

use crate::error::{CrankError, Result};
use crate::vector::SptFamily;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionPair {
    pub lambda1: Partition,
    pub lambda2: Partition,
}

impl PartitionPair {
    pub fn new(lambda1: Partition, lambda2: Partition) -> Self {
        PartitionPair { lambda1, lambda2 }
    }

    pub fn size(&self) -> u64 {
        self.lambda1.size() + self.lambda2.size()
    }

    fn s(&self) -> Option<u32> {
        match self.lambda1.smallest() {
            Smallest::Part(s) => Some(s),
            Smallest::Infinity => None,
        }
    }

    /// Membership in SP̄ (`SBar`), SP̄₁ (`SBar1`) or SP̄₂ (`SBar2`).
    pub fn is_member(&self, family: SptFamily) -> Result<bool> {
        if family == SptFamily::S2Bar {
            return Err(CrankError::NoPairModel(family.name()));
        }
        let Some(s) = self.s() else { return Ok(false) };
        if family.smallest_parity().is_some_and(|p| Parity::of(s) != p) {
            return Ok(false);
        }
        Ok(second_component(s).admits(&self.lambda2))
    }

    fn require(&self) -> Result<u32> {
        if self.is_member(SptFamily::SBar)? {
            Ok(self.s().expect("member has a smallest part"))
        } else {
            Err(CrankError::NotMember("SP̄"))
        }
    }
}

impl fmt::Display for PartitionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lambda1, self.lambda2)
    }
}

/// λ2 has parts ≥ s, and those ≥ 2s+1 are odd.
fn second_component(s: u32) -> PartitionConstraints {
    PartitionConstraints { min_part: Some(s), odd_above: Some(2 * s), ..Default::default() }
}

/// Number of parts j of λ2 with s(λ1) ≤ j ≤ 2s(λ1) − 1.
pub fn k_vec(pair: &PartitionPair) -> Result<u64> {
    let s = pair.require()?;
    Ok(pair.lambda2.parts().iter().filter(|&&j| j >= s && j < 2 * s).count() as u64)
}

/// crank̄(λ1, λ2).
pub fn crank_bar(pair: &PartitionPair) -> Result<i64> {
    let k = k_vec(pair)?;
    let s = pair.s().expect("checked");
    Ok(if k > 0 {
        pair.lambda1.count_at_least(s + k as u32) as i64 - k as i64
    } else {
        pair.lambda1.num_parts() as i64 - 1
    })
}

/// All pairs of size `n` in the family, ordered by s(λ1), then |λ1| descending,
/// then lexicographically descending in λ1 and λ2.
pub fn enumerate_sp_pairs(n: u32, family: SptFamily) -> Result<Vec<PartitionPair>> {
    if family == SptFamily::S2Bar {
        return Err(CrankError::NoPairModel(family.name()));
    }
    let mut out = Vec::new();
    for s in 1..=n {
        if family.smallest_parity().is_some_and(|p| Parity::of(s) != p) {
            continue;
        }
        let c1 = PartitionConstraints { min_part: Some(s), ..Default::default() };
        let c2 = second_component(s);
        for a in (s..=n).rev() {
            let seconds = enumerate_partitions(n - a, &c2);
            for_each_partition(a, &c1, |l1| {
                if l1.last() != Some(&s) {
                    return;
                }
                let l1 = Partition::new(l1.to_vec()).expect("positive parts");
                for l2 in &seconds {
                    out.push(PartitionPair::new(l1.clone(), l2.clone()));
                }
            });
        }
    }
    Ok(out)
}
