//! Smallest-parts counts by enumeration.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use series_core::par::{map_range, Exec};

use crate::partition::{for_each_partition, PartitionConstraints};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SptVariant {
    /// Smallest parts over ordinary partitions.
    Spt,
    /// Over overpartitions whose smallest part is not overlined.
    SptBar,
    /// As `SptBar`, smallest part odd.
    SptBar1,
    /// As `SptBar`, smallest part even.
    SptBar2,
    /// Over partitions without repeated odd parts and with even smallest part.
    M2Spt,
}

impl SptVariant {
    pub const ALL: [SptVariant; 5] =
        [SptVariant::Spt, SptVariant::SptBar, SptVariant::SptBar1, SptVariant::SptBar2, SptVariant::M2Spt];

    pub fn name(self) -> &'static str {
        match self {
            SptVariant::Spt => "spt",
            SptVariant::SptBar => "sptbar",
            SptVariant::SptBar1 => "sptbar1",
            SptVariant::SptBar2 => "sptbar2",
            SptVariant::M2Spt => "m2spt",
        }
    }
}

impl fmt::Display for SptVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SptVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        SptVariant::ALL.into_iter().find(|v| v.name() == s).ok_or_else(|| format!("unknown spt variant `{s}`"))
    }
}

/// All five counts at `n`, in the order of [`SptVariant::ALL`].
///
/// One walk over the partitions of `n`: an overpartition with plain smallest
/// part is a partition with `d` distinct sizes and one of `2^{d-1}` overline choices.
pub fn spt_counts(n: u32) -> [u64; 5] {
    let mut out = [0u64; 5];
    for_each_partition(n, &PartitionConstraints::default(), |parts| {
        let Some(&s) = parts.last() else { return };
        let nu = parts.iter().rev().take_while(|&&p| p == s).count() as u64;
        let mut d = 1;
        let mut repeated_odd = false;
        for w in parts.windows(2) {
            if w[0] != w[1] {
                d += 1;
            } else if w[0] % 2 == 1 {
                repeated_odd = true;
            }
        }
        let bar = nu << (d - 1);
        out[0] += nu;
        out[1] += bar;
        if s % 2 == 1 {
            out[2] += bar;
        } else {
            out[3] += bar;
            if !repeated_odd {
                out[4] += nu;
            }
        }
    });
    out
}

/// The smallest-parts count of `variant` at `n`.
pub fn spt_count(n: u32, variant: SptVariant) -> BigInt {
    let i = SptVariant::ALL.iter().position(|&v| v == variant).expect("listed");
    BigInt::from(spt_counts(n)[i])
}

/// `spt_counts(n)` for `0 ≤ n ≤ n_max`.
pub fn spt_count_table(n_max: u32, exec: Exec) -> Vec<[u64; 5]> {
    map_range(exec, 0..n_max as usize + 1, |n| spt_counts(n as u32))
}
