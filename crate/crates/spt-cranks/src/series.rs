//! Tables N_S̄(m,n) and friends, from the two-variable generating functions.

use num_bigint::BigInt;
use partition_enum::TwoVarTable;
use series_core::par::{map_reduce, Exec};
use series_core::{eta_quotient, CycInt, Poch, QSeries, ZLaurentSeries};

use crate::error::Result;
use crate::pairs::{crank_bar, enumerate_sp_pairs};
use crate::vector::{enumerate_vector_partitions, SptFamily};

/// Indices s of the summands contributing to `family`, with the q-step of the poles.
fn summands(family: SptFamily, trunc: usize) -> (Vec<usize>, usize) {
    match family {
        SptFamily::SBar => ((1..=trunc).collect(), 1),
        SptFamily::SBar1 => ((1..=trunc).step_by(2).collect(), 1),
        SptFamily::SBar2 => ((2..=trunc).step_by(2).collect(), 1),
        SptFamily::S2Bar => ((2..=trunc).step_by(2).collect(), 2),
    }
}

/// The integer numerator of summand `s`, without the q^s prefactor.
fn numerator(family: SptFamily, s: usize, trunc: usize) -> QSeries {
    let factors: Vec<Poch> = match family {
        SptFamily::S2Bar => vec![Poch::new(s + 2, 2, 1), Poch::neg(s + 1, 2, 1)],
        _ => vec![Poch::new(2 * s + 2, 2, 1)],
    };
    eta_quotient(&factors, trunc).expect("valid factors")
}

/// Summand `s` as a two-variable series: q^s·numerator/((zq^s;q^d)(z⁻¹q^s;q^d)).
pub fn summand_laurent(family: SptFamily, s: usize, trunc: usize) -> ZLaurentSeries {
    let (_, step) = summands(family, trunc);
    let num = numerator(family, s, trunc).to_integers().expect("integer series");
    let mut r = ZLaurentSeries::from_q_series(&num).shift_q(s);
    for k in (s..=trunc).step_by(step) {
        r.div_binomial(1, k);
        r.div_binomial(-1, k);
    }
    r
}

/// The S2̄ summand with index `n` (the term with q^{2n} in front).
pub fn s2bar_summand(n: usize, trunc: usize) -> ZLaurentSeries {
    summand_laurent(SptFamily::S2Bar, 2 * n, trunc)
}

/// Σ_m N_F(m,n) z^m q^n, summing the summands in parallel.
pub fn nsb_series(family: SptFamily, max_n: usize, exec: Exec) -> ZLaurentSeries {
    let (idx, _) = summands(family, max_n);
    map_reduce(
        exec,
        0..idx.len(),
        ZLaurentSeries::zero(max_n),
        |i| summand_laurent(family, idx[i], max_n),
        |a, b| a.add(&b),
    )
}

pub fn nsb_table(family: SptFamily, max_n: usize) -> TwoVarTable {
    nsb_table_with(family, max_n, Exec::default())
}

pub fn nsb_table_with(family: SptFamily, max_n: usize, exec: Exec) -> TwoVarTable {
    TwoVarTable::new(family.table_family(), nsb_series(family, max_n, exec))
}

/// Weighted count of vector partitions; only practical for small `max_n`.
pub fn nsb_table_enumerated(family: SptFamily, max_n: usize) -> TwoVarTable {
    let mut s = ZLaurentSeries::zero(max_n);
    for n in 1..=max_n {
        for w in enumerate_vector_partitions(n as u32, family) {
            s.add_at(w.crank, n, &BigInt::from(w.weight)).expect("|crank| ≤ n");
        }
    }
    TwoVarTable::new(family.table_family(), s)
}

/// Count of SP̄-family pairs by crank̄.
pub fn sp_crank_table(family: SptFamily, max_n: usize) -> Result<TwoVarTable> {
    let mut s = ZLaurentSeries::zero(max_n);
    for n in 1..=max_n {
        for p in enumerate_sp_pairs(n as u32, family)? {
            s.add_at(crank_bar(&p)?, n, &BigInt::from(1)).expect("|crank| ≤ n");
        }
    }
    Ok(TwoVarTable::new(family.table_family(), s))
}

/// Σ_n Σ_m N_F(m,n) ζ^m q^n built directly in ℤ[ζ_t].
pub fn nsb_at_root(family: SptFamily, zeta: &CycInt, trunc: usize) -> QSeries {
    let t = zeta.order();
    let sigma = zeta + &zeta.root_inverse().expect("a root of unity");
    let (idx, step) = summands(family, trunc);
    let mut total = QSeries::zero(t, trunc);
    for s in idx {
        let mut r = numerator(family, s, trunc).lift(t).shift(s);
        for k in (s..=trunc).step_by(step) {
            r.div_quadratic(&sigma, k);
        }
        total = total.add(&r).expect("same ring");
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use partition_enum::gf::spt_generating_function;
    use partition_enum::SptVariant;

    #[test]
    fn gf_matches_enumeration() {
        for f in SptFamily::ALL {
            assert_eq!(nsb_table(f, 9), nsb_table_enumerated(f, 9), "{f}");
        }
    }

    #[test]
    fn row_sums_are_spt_counts() {
        let pairs = [
            (SptFamily::SBar, SptVariant::SptBar),
            (SptFamily::SBar1, SptVariant::SptBar1),
            (SptFamily::SBar2, SptVariant::SptBar2),
            (SptFamily::S2Bar, SptVariant::M2Spt),
        ];
        for (f, v) in pairs {
            let t = nsb_table(f, 20);
            let g = spt_generating_function(v, 20).to_integers().unwrap();
            for n in 0..=20 {
                assert_eq!(t.row_sum(n), g[n], "{f} at {n}");
            }
        }
    }

    #[test]
    fn pair_model_matches() {
        for f in [SptFamily::SBar, SptFamily::SBar1, SptFamily::SBar2] {
            assert_eq!(sp_crank_table(f, 10).unwrap(), nsb_table(f, 10), "{f}");
        }
    }

    #[test]
    fn worked_classes() {
        let t = nsb_table(SptFamily::SBar, 8);
        assert!((0..3).all(|k| t.class_sum(k, 3, 3) == BigInt::from(2)));
        let t = nsb_table(SptFamily::SBar1, 5);
        assert!((0..5).all(|k| t.class_sum(k, 5, 5) == BigInt::from(4)));
        let t = nsb_table(SptFamily::SBar2, 8);
        assert!((0..5).all(|k| t.class_sum(k, 5, 8) == BigInt::from(3)));
    }

    #[test]
    fn s2bar_summand_goes_negative() {
        let s = s2bar_summand(2, 10);
        assert_eq!(s.get(0, 10), BigInt::from(-1));
        assert_eq!(s.get(1, 10), BigInt::from(1));
        assert_eq!(s.get(-1, 10), BigInt::from(1));
        assert!((2..=10).all(|m| s.get(m, 10) == BigInt::from(0) && s.get(-m, 10) == BigInt::from(0)));
    }

    #[test]
    fn at_root_matches_table() {
        for f in SptFamily::ALL {
            for t in [3u32, 4, 5] {
                let z = CycInt::zeta_pow(t, 1);
                assert_eq!(nsb_at_root(f, &z, 20), nsb_table(f, 20).specialize(t), "{f} at {t}");
            }
        }
    }

    #[test]
    fn sequential_equals_parallel() {
        assert_eq!(
            nsb_table_with(SptFamily::SBar, 15, Exec::Sequential),
            nsb_table_with(SptFamily::SBar, 15, Exec::Parallel)
        );
    }
}
