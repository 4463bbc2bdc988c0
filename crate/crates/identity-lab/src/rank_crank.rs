//! Rank minus crank: (1−z)(1−z⁻¹)·S(z,q) against differences of rank and crank tables.

use num_bigint::BigInt;
use num_traits::Zero;
use partition_enum::gf::overpartition_gf;
use partition_enum::Family;
use series_core::{lambert_sum_laurent, LambertSchedule, ZLaurentSeries};

use crate::error::Result;
use crate::lab::Lab;
use crate::report::{earliest, laurent_witness, Value, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankCrank {
    /// Δ²N_S̄ = N̄ − M̄
    SBar,
    /// Δ²N_S2̄ = N2 − M2
    S2Bar,
    /// 2Δ²N_S̄₂ = N̄ − 2M̄ + ε
    SBar2,
    /// 2Δ²N_S̄₁ = N̄ − ε
    SBar1,
}

/// ε(z,q) = (−q;q)/(q;q)·(1 + 2Σ (1−z)(1−z⁻¹)(−1)^n q^n/((1−zq^n)(1−z⁻¹q^n))).
pub fn extra_series_laurent(trunc: usize) -> Result<ZLaurentSeries> {
    let l = lambert_sum_laurent(&LambertSchedule::extra_series(), trunc)?;
    let inner = ZLaurentSeries::one(trunc).add(&l.scale(&BigInt::from(2)));
    let base = overpartition_gf(trunc).to_integers().expect("integer series");
    Ok(inner.mul_q_series(&base))
}

/// First coefficient of `s` that is odd.
fn odd_witness(s: &ZLaurentSeries) -> Option<Witness> {
    let two = BigInt::from(2);
    (0..=s.trunc()).find_map(|n| {
        let mut ms: Vec<i64> = (-(n as i64)..=n as i64).collect();
        ms.sort_by_key(|m| (m.unsigned_abs(), *m));
        ms.into_iter()
            .find(|&m| !(s.get(m, n) % &two).is_zero())
            .map(|m| Witness::new(n, Some(m), Value::Text("even".into()), s.get(m, n)))
    })
}

/// Compare both sides for all |m| ≤ n ≤ max_n.
pub fn check_rank_crank(which: RankCrank, max_n: usize, lab: &Lab) -> Result<Option<Witness>> {
    let two = BigInt::from(2);
    let nbar = || lab.series(Family::NBar, max_n);
    let mbar = || lab.series(Family::MBar, max_n);
    let (lhs, rhs, parity) = match which {
        RankCrank::SBar => (lab.series(Family::SBar, max_n)?.stencil()?, nbar()?.sub(&mbar()?), None),
        RankCrank::S2Bar => {
            let r = lab.series(Family::N2, max_n)?.sub(&lab.series(Family::M2, max_n)?);
            (lab.series(Family::S2Bar, max_n)?.stencil()?, r, None)
        }
        RankCrank::SBar2 => {
            let eps = extra_series_laurent(max_n)?;
            let n = nbar()?;
            let r = n.sub(&mbar()?.scale(&two)).add(&eps);
            (lab.series(Family::SBar2, max_n)?.stencil()?.scale(&two), r, Some(n.add(&eps)))
        }
        RankCrank::SBar1 => {
            let eps = extra_series_laurent(max_n)?;
            let r = nbar()?.sub(&eps);
            (lab.series(Family::SBar1, max_n)?.stencil()?.scale(&two), r.clone(), Some(r))
        }
    };
    let w = laurent_witness(&rhs, &lhs);
    Ok(earliest(w, parity.as_ref().and_then(odd_witness)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use series_core::Exec;

    #[test]
    fn first_row_by_hand() {
        let lab = Lab::new(Exec::Sequential);
        let s = lab.series(Family::SBar, 1).unwrap();
        let lhs = 2 * s.get(0, 1) - 2 * s.get(1, 1);
        let rhs = lab.series(Family::NBar, 1).unwrap().get(0, 1) - lab.series(Family::MBar, 1).unwrap().get(0, 1);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn all_four_hold_small() {
        let lab = Lab::new(Exec::Sequential);
        for w in [RankCrank::SBar, RankCrank::S2Bar, RankCrank::SBar2, RankCrank::SBar1] {
            assert_eq!(check_rank_crank(w, 20, &lab).unwrap(), None, "{w:?}");
        }
    }

    #[test]
    fn extra_series_specializes_to_lambert() {
        let e = extra_series_laurent(15).unwrap();
        assert_eq!(e.get(0, 0), BigInt::from(1));
        for n in 0..=15 {
            let total: BigInt = (-(n as i64)..=n as i64).map(|m| e.get(m, n)).sum();
            assert_eq!(total, overpartition_gf(15).to_integers().unwrap()[n]);
        }
    }
}
