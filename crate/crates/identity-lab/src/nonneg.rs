//! Sign scans of the weighted spt-crank tables.

use num_bigint::BigInt;
use num_traits::Signed;
use partition_enum::Family;
use spt_cranks::s2bar_summand;

use crate::error::Result;
use crate::lab::Lab;
use crate::report::{Value, Witness};

/// First negative entry, by smallest n then |m|.
pub fn check_nonneg(family: Family, max_n: usize, lab: &Lab) -> Result<Option<Witness>> {
    let table = lab.table(family, max_n)?;
    Ok((0..=max_n).find_map(|n| {
        let mut ms: Vec<i64> = (-(n as i64)..=n as i64).collect();
        ms.sort_by_key(|m| (m.unsigned_abs(), *m));
        ms.into_iter()
            .find(|&m| table.get(m, n).is_negative())
            .map(|m| Witness::new(n, Some(m), Value::Text(">= 0".into()), table.get(m, n)))
    }))
}

/// The q^10 coefficient of the k = 2 summand of S2̄ is z⁻¹ − 1 + z.
pub fn check_summand_counterexample() -> Option<Witness> {
    let s = s2bar_summand(2, 10);
    (-10i64..=10).find_map(|m| {
        let want = BigInt::from(match m {
            0 => -1,
            1 | -1 => 1,
            _ => 0,
        });
        let got = s.get(m, 10);
        (got != want).then(|| Witness::new(10, Some(m), want, got))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use series_core::Exec;

    #[test]
    fn nonnegative_small() {
        let lab = Lab::new(Exec::Sequential);
        for f in [Family::SBar, Family::SBar1, Family::SBar2, Family::S2Bar] {
            assert_eq!(check_nonneg(f, 20, &lab).unwrap(), None, "{f}");
        }
        assert_eq!(check_summand_counterexample(), None);
    }
}
