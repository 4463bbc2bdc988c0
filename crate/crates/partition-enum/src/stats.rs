//! Rank and crank statistics.

use crate::error::PartitionError;
use crate::overpartition::Overpartition;
use crate::partition::Partition;

/// Dyson's rank: largest part minus number of parts (0 for the empty partition).
pub fn rank(p: &Partition) -> i64 {
    p.largest() as i64 - p.num_parts() as i64
}

/// Andrews–Garvan crank.
///
/// With no ones this is the largest part; otherwise the number of parts larger
/// than the number of ones, minus the number of ones. The empty partition gets 0
/// and the partition `1` gets −1; the crank generating function instead assigns
/// `z⁻¹ − 1 + z` to n = 1.
pub fn crank(p: &Partition) -> i64 {
    let ones = p.multiplicity(1) as i64;
    if ones == 0 {
        p.largest() as i64
    } else {
        p.parts().iter().filter(|&&x| x as i64 > ones).count() as i64 - ones
    }
}

/// Dyson rank of an overpartition: largest part minus number of parts.
pub fn dyson_rank(o: &Overpartition) -> i64 {
    rank(o.parts())
}

/// M₂-rank ⌈l(π)/2⌉ − #(π), for partitions without repeated odd parts.
pub fn m2_rank(p: &Partition) -> Result<i64, PartitionError> {
    if p.has_repeated_odd() {
        return Err(PartitionError::RepeatedOddParts);
    }
    Ok(p.largest().div_ceil(2) as i64 - p.num_parts() as i64)
}

/// Residual crank: the crank of the non-overlined parts.
pub fn residual_crank(o: &Overpartition) -> i64 {
    crank(&o.non_overlined())
}

/// The M2 residual crank: crank of the even parts halved.
pub fn m2_residual_crank(p: &Partition) -> Result<i64, PartitionError> {
    if p.has_repeated_odd() {
        return Err(PartitionError::RepeatedOddParts);
    }
    Ok(crank(&halved_evens(p)))
}

pub(crate) fn halved_evens(p: &Partition) -> Partition {
    Partition::from_desc(p.parts().iter().filter(|&&x| x % 2 == 0).map(|&x| x / 2).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Statistic {
    Rank,
    Crank,
    DysonRank,
    M2Rank,
}

#[derive(Clone, Copy, Debug)]
pub enum StatObject<'a> {
    Partition(&'a Partition),
    Overpartition(&'a Overpartition),
}

/// Evaluate `which` on `obj`.
///
/// Rank, crank and M₂-rank apply to partitions; the Dyson rank applies to
/// overpartitions, and the crank of an overpartition is its residual crank.
pub fn statistic(obj: StatObject<'_>, which: Statistic) -> Result<i64, PartitionError> {
    match (obj, which) {
        (StatObject::Partition(p), Statistic::Rank) => Ok(rank(p)),
        (StatObject::Partition(p), Statistic::Crank) => Ok(crank(p)),
        (StatObject::Partition(p), Statistic::M2Rank) => m2_rank(p),
        (StatObject::Overpartition(o), Statistic::DysonRank) => Ok(dyson_rank(o)),
        (StatObject::Overpartition(o), Statistic::Crank) => Ok(residual_crank(o)),
        (StatObject::Partition(_), Statistic::DysonRank) => Err(PartitionError::NotApplicable("dyson_rank")),
        (StatObject::Overpartition(_), Statistic::Rank) => Err(PartitionError::NotApplicable("rank")),
        (StatObject::Overpartition(_), Statistic::M2Rank) => Err(PartitionError::NotApplicable("m2_rank")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn definitions() {
        assert_eq!(rank(&p(&[5, 2, 1])), 2);
        assert_eq!(crank(&p(&[4, 2])), 4);
        assert_eq!(crank(&p(&[4, 2, 1])), 1);
        assert_eq!(crank(&p(&[1, 1, 1])), -3);
        assert_eq!(crank(&p(&[1])), -1);
        assert_eq!(crank(&Partition::empty()), 0);
        assert_eq!(m2_rank(&p(&[5, 4, 2])), Ok(0));
        assert_eq!(m2_rank(&p(&[3, 3])), Err(PartitionError::RepeatedOddParts));
    }

    #[test]
    fn empty_overpartition_rank_zero() {
        let o = Overpartition::new(Partition::empty(), vec![]).unwrap();
        assert_eq!(dyson_rank(&o), 0);
    }

    #[test]
    fn statistic_dispatch() {
        let q = p(&[3, 1]);
        let o = Overpartition::new(q.clone(), vec![3]).unwrap();
        assert_eq!(statistic(StatObject::Partition(&q), Statistic::Rank), Ok(1));
        assert_eq!(statistic(StatObject::Overpartition(&o), Statistic::DysonRank), Ok(1));
        assert_eq!(statistic(StatObject::Overpartition(&o), Statistic::Crank), Ok(-1));
        assert!(statistic(StatObject::Partition(&q), Statistic::DysonRank).is_err());
    }

    #[test]
    fn m2_residual_crank_halves_evens() {
        assert_eq!(m2_residual_crank(&p(&[8, 3, 2])), Ok(crank(&p(&[4, 1]))));
    }
}
