//! Exact statistic tables c(m,n) for the rank, crank and spt-crank families.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use series_core::par::{map_range, Exec};
use series_core::{QSeries, ZLaurentSeries};

use crate::error::PartitionError;
use crate::gf;
use crate::overpartition::{for_each_overpartition, OverpartitionConstraints};
use crate::partition::{for_each_partition, Partition, PartitionConstraints};
use crate::stats::{crank, m2_residual_crank, residual_crank};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Dyson rank of overpartitions.
    NBar,
    /// Residual crank of overpartitions.
    MBar,
    /// M₂-rank of partitions without repeated odd parts.
    N2,
    /// M2 residual crank.
    M2,
    /// Rank of partitions.
    N,
    /// Crank of partitions.
    M,
    SBar,
    SBar1,
    SBar2,
    S2Bar,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::NBar,
        Family::MBar,
        Family::N2,
        Family::M2,
        Family::N,
        Family::M,
        Family::SBar,
        Family::SBar1,
        Family::SBar2,
        Family::S2Bar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::NBar => "nbar",
            Family::MBar => "mbar",
            Family::N2 => "n2",
            Family::M2 => "m2",
            Family::N => "n",
            Family::M => "m",
            Family::SBar => "nsbar",
            Family::SBar1 => "nsbar1",
            Family::SBar2 => "nsbar2",
            Family::S2Bar => "ns2bar",
        }
    }

    pub fn is_rank(self) -> bool {
        matches!(self, Family::NBar | Family::N2 | Family::N)
    }

    pub fn is_crank(self) -> bool {
        matches!(self, Family::MBar | Family::M2 | Family::M)
    }

    /// Weighted vector-partition families, tabulated by `spt-cranks`.
    pub fn is_spt_crank(self) -> bool {
        !self.is_rank() && !self.is_crank()
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Family::ALL.into_iter().find(|v| v.name() == s).ok_or_else(|| format!("unknown family `{s}`"))
    }
}

/// c(m,n) for 0 ≤ n ≤ max_n, |m| ≤ n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoVarTable {
    family: Family,
    series: ZLaurentSeries,
}

impl TwoVarTable {
    pub fn new(family: Family, series: ZLaurentSeries) -> Self {
        TwoVarTable { family, series }
    }

    /// Assemble from per-n rows stored on `-n..=n`.
    pub fn from_rows(family: Family, rows: Vec<Vec<BigInt>>) -> Result<Self, PartitionError> {
        Ok(TwoVarTable { family, series: ZLaurentSeries::from_rows(rows)? })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn max_n(&self) -> usize {
        self.series.trunc()
    }

    pub fn get(&self, m: i64, n: usize) -> BigInt {
        self.series.get(m, n)
    }

    pub fn series(&self) -> &ZLaurentSeries {
        &self.series
    }

    pub fn into_series(self) -> ZLaurentSeries {
        self.series
    }

    pub fn row_sum(&self, n: usize) -> BigInt {
        self.series.row_sum(n)
    }

    /// Σ_{m ≡ k (mod t)} c(m,n).
    pub fn class_sum(&self, k: u32, t: u32, n: usize) -> BigInt {
        assert!(k < t, "class index out of range");
        let t = t as i64;
        let n_i = n as i64;
        (-n_i..=n_i).filter(|m| m.rem_euclid(t) == k as i64).map(|m| self.get(m, n)).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..=self.max_n()).all(|n| {
            let r = self.series.row(n);
            r.iter().eq(r.iter().rev())
        })
    }

    /// Σ_m c(m,n) ζ_t^m.
    pub fn specialize(&self, t: u32) -> QSeries {
        self.series.specialize(t).expect("rows are complete")
    }

    /// Every (m, n, c(m,n)) with n ascending, then m ascending.
    pub fn entries(&self) -> impl Iterator<Item = (i64, usize, &BigInt)> + '_ {
        (0..=self.max_n())
            .flat_map(move |n| self.series.row(n).iter().enumerate().map(move |(i, c)| (i as i64 - n as i64, n, c)))
    }
}

fn rows_to_table(family: Family, rows: Vec<Vec<BigInt>>) -> TwoVarTable {
    TwoVarTable::from_rows(family, rows).expect("rows have width 2n+1")
}

fn rank_row(family: Family, n: usize) -> Vec<BigInt> {
    let mut row = vec![0u64; 2 * n + 1];
    let c = match family {
        Family::N2 => PartitionConstraints { distinct_odd_parts: true, ..Default::default() },
        _ => PartitionConstraints::default(),
    };
    for_each_partition(n as u32, &c, |parts| {
        let l = parts.first().copied().unwrap_or(0) as i64;
        let k = parts.len() as i64;
        let (m, w) = match family {
            Family::NBar => {
                let d = 1 + parts.windows(2).filter(|w| w[0] != w[1]).count();
                (l - k, if parts.is_empty() { 1 } else { 1u64 << d })
            }
            Family::N2 => ((l + 1) / 2 - k, 1),
            _ => (l - k, 1),
        };
        row[(m + n as i64) as usize] += w;
    });
    row.into_iter().map(BigInt::from).collect()
}

/// Table of a rank or crank family.
///
/// Rank families are tabulated by enumeration. Crank families come from their
/// product generating functions, which differ from the combinatorial cranks
/// at a few exceptional objects (see [`crank_exceptions`]).
pub fn stat_table(family: Family, max_n: usize) -> Result<TwoVarTable, PartitionError> {
    stat_table_with(family, max_n, Exec::default())
}

pub fn stat_table_with(family: Family, max_n: usize, exec: Exec) -> Result<TwoVarTable, PartitionError> {
    if family.is_rank() {
        let rows = map_range(exec, 0..max_n + 1, |n| rank_row(family, n));
        Ok(rows_to_table(family, rows))
    } else {
        series_table(family, max_n)
    }
}

/// Table of a rank or crank family expanded from its generating function.
pub fn series_table(family: Family, max_n: usize) -> Result<TwoVarTable, PartitionError> {
    let s = match family {
        Family::NBar => gf::dyson_rank_laurent(max_n),
        Family::N2 => gf::m2_rank_laurent(max_n),
        Family::N => gf::rank_laurent(max_n),
        Family::MBar => gf::residual_crank_laurent(max_n),
        Family::M2 => gf::m2_crank_laurent(max_n),
        Family::M => gf::crank_laurent(max_n),
        f => return Err(PartitionError::UnsupportedFamily(f.name().to_string())),
    };
    Ok(TwoVarTable::new(family, s))
}

/// Number of objects of size `n` whose combinatorial crank the series does not follow.
///
/// For M̄ these are the overpartitions whose non-overlined part is the single
/// part 1; for M2 the partitions whose even parts are a single 2; for M the
/// partition `1` itself. Each such object contributes z⁻¹ − 1 + z to the series
/// instead of z⁻¹.
pub fn crank_exceptions(family: Family, n: usize) -> Result<u64, PartitionError> {
    let distinct = PartitionConstraints { distinct: true, ..Default::default() };
    let odd_distinct = PartitionConstraints {
        distinct: true,
        parts_parity: Some(crate::partition::Parity::Odd),
        ..Default::default()
    };
    let count = |m: usize, c: &PartitionConstraints| {
        let mut k = 0;
        for_each_partition(m as u32, c, |_| k += 1);
        k
    };
    match family {
        Family::MBar => Ok(if n >= 1 { count(n - 1, &distinct) } else { 0 }),
        Family::M2 => Ok(if n >= 2 { count(n - 2, &odd_distinct) } else { 0 }),
        Family::M => Ok(u64::from(n == 1)),
        f => Err(PartitionError::UnsupportedFamily(f.name().to_string())),
    }
}

fn is_exceptional(family: Family, p: &Partition) -> bool {
    match family {
        Family::M2 => p.parts().iter().filter(|&&x| x % 2 == 0).eq([2].iter()),
        _ => p.parts() == [1],
    }
}

/// Crank row `n` by enumeration, skipping the exceptional objects.
pub fn crank_row_enumerated(family: Family, n: usize) -> Result<Vec<BigInt>, PartitionError> {
    let mut row = vec![BigInt::zero(); 2 * n + 1];
    let mut bump = |m: i64| row[(m + n as i64) as usize] += 1;
    match family {
        Family::MBar => for_each_overpartition(n as u32, &OverpartitionConstraints::default(), |o| {
            if !is_exceptional(family, &o.non_overlined()) {
                bump(residual_crank(o));
            }
        }),
        Family::M2 => {
            let c = PartitionConstraints { distinct_odd_parts: true, ..Default::default() };
            for_each_partition(n as u32, &c, |parts| {
                let p = Partition::new(parts.to_vec()).expect("positive parts");
                if !is_exceptional(family, &p) {
                    bump(m2_residual_crank(&p).expect("no repeated odd parts"));
                }
            })
        }
        Family::M => for_each_partition(n as u32, &PartitionConstraints::default(), |parts| {
            let p = Partition::new(parts.to_vec()).expect("positive parts");
            if !is_exceptional(family, &p) {
                bump(crank(&p));
            }
        }),
        f => return Err(PartitionError::UnsupportedFamily(f.name().to_string())),
    }
    Ok(row)
}

/// First `n ≤ max_n` where series − enumeration ≠ exceptions·(z⁻¹ − 1 + z), if any.
pub fn crank_cross_check(family: Family, max_n: usize) -> Result<Option<usize>, PartitionError> {
    let tab = series_table(family, max_n)?;
    for n in 0..=max_n {
        let enumerated = crank_row_enumerated(family, n)?;
        let e = BigInt::from(crank_exceptions(family, n)?);
        let ok = (-(n as i64)..=n as i64).all(|m| {
            let want = match m {
                0 => -e.clone(),
                1 | -1 => e.clone(),
                _ => BigInt::zero(),
            };
            tab.get(m, n) - &enumerated[(m + n as i64) as usize] == want
        });
        if !ok {
            return Ok(Some(n));
        }
    }
    Ok(None)
}
