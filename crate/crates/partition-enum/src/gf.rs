//! Generating functions for the spt counts and the rank/crank families.
//!
//! Rank families have two forms: the Eulerian sum and the Lambert series
//! obtained from it by Watson's transformation. Both are built here so they can
//! be compared. Crank families are defined by their infinite products.

use num_bigint::BigInt;
use series_core::{
    eta_quotient, lambert_sum, lambert_sum_laurent, CycInt, LambertSchedule, Poch, QSeries, ZLaurentSeries,
};

use crate::spt::SptVariant;

fn one() -> CycInt {
    CycInt::one(1)
}

fn minus_one() -> CycInt {
    CycInt::from_int(1, -1)
}

/// (−q;q)_∞/(q;q)_∞, the overpartition generating function.
pub fn overpartition_gf(trunc: usize) -> QSeries {
    eta_quotient(&[Poch::neg(1, 1, 1), Poch::eta(1, -1)], trunc).expect("valid factors")
}

/// The single-variable generating function of an spt variant, over ℤ.
pub fn spt_generating_function(variant: SptVariant, trunc: usize) -> QSeries {
    let mut total = QSeries::zero(1, trunc);
    let mut add_term = |r: &QSeries, s: usize| {
        let mut term = r.clone();
        term.div_one_minus(&one(), s);
        term.div_one_minus(&one(), s);
        total = total.add(&term.shift(s)).expect("same ring");
    };
    match variant {
        SptVariant::Spt => {
            // r = 1/(q^{s+1};q)_∞
            let mut r = QSeries::one(1, trunc);
            for s in (1..=trunc).rev() {
                add_term(&r, s);
                r.div_one_minus(&one(), s);
            }
        }
        SptVariant::SptBar | SptVariant::SptBar1 | SptVariant::SptBar2 => {
            // r = (−q^{s+1};q)_∞/(q^{s+1};q)_∞
            let mut r = QSeries::one(1, trunc);
            for s in (1..=trunc).rev() {
                let keep = match variant {
                    SptVariant::SptBar1 => s % 2 == 1,
                    SptVariant::SptBar2 => s % 2 == 0,
                    _ => true,
                };
                if keep {
                    add_term(&r, s);
                }
                r.mul_one_minus(&minus_one(), s);
                r.div_one_minus(&one(), s);
            }
        }
        SptVariant::M2Spt => {
            // r = (−q^{2n+1};q²)_∞/(q^{2n+2};q²)_∞
            let mut r = QSeries::one(1, trunc);
            for n in (1..=trunc / 2).rev() {
                add_term(&r, 2 * n);
                r.mul_one_minus(&minus_one(), 2 * n - 1);
                r.div_one_minus(&one(), 2 * n);
            }
        }
    }
    total
}

fn quad_trace(zeta: &CycInt) -> CycInt {
    let inv = zeta.root_inverse().expect("a root of unity");
    zeta + &inv
}

/// Overpartition rank Σ N̄(m,n) ζ^m q^n from the Eulerian sum
/// Σ (−1;q)_n q^{n(n+1)/2}/((ζq;q)_n(ζ⁻¹q;q)_n).
pub fn dyson_rank_at_root(zeta: &CycInt, trunc: usize) -> QSeries {
    let t = zeta.order();
    let s = quad_trace(zeta);
    let mut total = QSeries::one(t, trunc);
    let mut term = QSeries::one(t, trunc);
    let mut n = 1;
    while n * (n + 1) / 2 <= trunc {
        term = term.shift(n);
        if n == 1 {
            term = term.scale_int(2);
        } else {
            term.mul_one_minus(&CycInt::from_int(t, -1), n - 1);
        }
        term.div_quadratic(&s, n);
        total = total.add(&term).expect("same ring");
        n += 1;
    }
    total
}

/// Overpartition rank from the Lambert form (−q;q)/(q;q)·(1 + 2Σ …).
pub fn dyson_rank_lambert_at_root(zeta: &CycInt, trunc: usize) -> QSeries {
    let t = zeta.order();
    let l = lambert_sum(zeta, &LambertSchedule::dyson_rank(), trunc).expect("valid schedule");
    let inner = QSeries::one(t, trunc).add(&l.scale_int(2)).expect("same ring");
    overpartition_gf(trunc).lift(t).mul(&inner).expect("same ring")
}

/// M₂-rank Σ N2(m,n) ζ^m q^n from the Eulerian sum Σ q^{n²}(−q;q²)_n/((ζq²;q²)_n(ζ⁻¹q²;q²)_n).
pub fn m2_rank_at_root(zeta: &CycInt, trunc: usize) -> QSeries {
    let t = zeta.order();
    let s = quad_trace(zeta);
    let mut total = QSeries::one(t, trunc);
    let mut term = QSeries::one(t, trunc);
    let mut n = 1;
    while n * n <= trunc {
        term = term.shift(2 * n - 1);
        term.mul_one_minus(&CycInt::from_int(t, -1), 2 * n - 1);
        term.div_quadratic(&s, 2 * n);
        total = total.add(&term).expect("same ring");
        n += 1;
    }
    total
}

/// (−q;q²)_∞/(q²;q²)_∞
pub fn m2_base(trunc: usize) -> QSeries {
    eta_quotient(&[Poch::neg(1, 2, 1), Poch::eta(2, -1)], trunc).expect("valid factors")
}

/// M₂-rank from the Lambert form (−q;q²)/(q²;q²)·(1 + Σ (1+q^{2n}) …).
pub fn m2_rank_lambert_at_root(zeta: &CycInt, trunc: usize) -> QSeries {
    let t = zeta.order();
    let l = lambert_sum(zeta, &LambertSchedule::m2_rank(), trunc).expect("valid schedule");
    let inner = QSeries::one(t, trunc).add(&l).expect("same ring");
    m2_base(trunc).lift(t).mul(&inner).expect("same ring")
}

/// Residual crank Σ M̄(m,n) ζ^m q^n = (−q;q)(q;q)/((ζq;q)(ζ⁻¹q;q)).
pub fn residual_crank_at_root(zeta: &CycInt, trunc: usize) -> QSeries {
    let s = quad_trace(zeta);
    let mut r = eta_quotient(&[Poch::eta(2, 1)], trunc).expect("valid factors").lift(zeta.order());
    for k in 1..=trunc {
        r.div_quadratic(&s, k);
    }
    r
}

/// M2 crank Σ M2(m,n) ζ^m q^n = (−q;q²)(q²;q²)/((ζq²;q²)(ζ⁻¹q²;q²)).
pub fn m2_crank_at_root(zeta: &CycInt, trunc: usize) -> QSeries {
    let s = quad_trace(zeta);
    let mut r = eta_quotient(&[Poch::neg(1, 2, 1), Poch::eta(2, 1)], trunc).expect("valid factors").lift(zeta.order());
    for k in (2..=trunc).step_by(2) {
        r.div_quadratic(&s, k);
    }
    r
}

fn ints(s: &QSeries) -> Vec<BigInt> {
    s.to_integers().expect("integer series")
}

/// Σ N̄(m,n) z^m q^n from the Eulerian sum.
pub fn dyson_rank_laurent(trunc: usize) -> ZLaurentSeries {
    let mut total = ZLaurentSeries::one(trunc);
    let mut term = ZLaurentSeries::one(trunc);
    let mut n = 1;
    while n * (n + 1) / 2 <= trunc {
        term = term.shift_q(n);
        if n == 1 {
            term = term.scale(&BigInt::from(2));
        } else {
            term.mul_binomial(-1, 0, n - 1);
        }
        term.div_binomial(1, n);
        term.div_binomial(-1, n);
        total = total.add(&term);
        n += 1;
    }
    total
}

/// Σ N̄(m,n) z^m q^n from the Lambert form.
pub fn dyson_rank_lambert_laurent(trunc: usize) -> ZLaurentSeries {
    let l = lambert_sum_laurent(&LambertSchedule::dyson_rank(), trunc).expect("valid schedule");
    let inner = ZLaurentSeries::one(trunc).add(&l.scale(&BigInt::from(2)));
    inner.mul_q_series(&ints(&overpartition_gf(trunc)))
}

/// Σ N2(m,n) z^m q^n from the Eulerian sum.
pub fn m2_rank_laurent(trunc: usize) -> ZLaurentSeries {
    let mut total = ZLaurentSeries::one(trunc);
    let mut term = ZLaurentSeries::one(trunc);
    let mut n = 1;
    while n * n <= trunc {
        term = term.shift_q(2 * n - 1);
        term.mul_binomial(-1, 0, 2 * n - 1);
        term.div_binomial(1, 2 * n);
        term.div_binomial(-1, 2 * n);
        total = total.add(&term);
        n += 1;
    }
    total
}

/// Σ N2(m,n) z^m q^n from the Lambert form.
pub fn m2_rank_lambert_laurent(trunc: usize) -> ZLaurentSeries {
    let l = lambert_sum_laurent(&LambertSchedule::m2_rank(), trunc).expect("valid schedule");
    ZLaurentSeries::one(trunc).add(&l).mul_q_series(&ints(&m2_base(trunc)))
}

/// Σ N(m,n) z^m q^n = Σ q^{n²}/((zq;q)_n(z⁻¹q;q)_n).
pub fn rank_laurent(trunc: usize) -> ZLaurentSeries {
    let mut total = ZLaurentSeries::one(trunc);
    let mut term = ZLaurentSeries::one(trunc);
    let mut n = 1;
    while n * n <= trunc {
        term = term.shift_q(2 * n - 1);
        term.div_binomial(1, n);
        term.div_binomial(-1, n);
        total = total.add(&term);
        n += 1;
    }
    total
}

fn divide_crank_poles(base: &QSeries, step: usize, trunc: usize) -> ZLaurentSeries {
    let mut r = ZLaurentSeries::from_q_series(&ints(base));
    for k in (step..=trunc).step_by(step) {
        r.div_binomial(1, k);
        r.div_binomial(-1, k);
    }
    r
}

/// Σ M̄(m,n) z^m q^n = (−q;q)(q;q)/((zq;q)(z⁻¹q;q)).
pub fn residual_crank_laurent(trunc: usize) -> ZLaurentSeries {
    let base = eta_quotient(&[Poch::eta(2, 1)], trunc).expect("valid factors");
    divide_crank_poles(&base, 1, trunc)
}

/// Σ M2(m,n) z^m q^n = (−q;q²)(q²;q²)/((zq²;q²)(z⁻¹q²;q²)).
pub fn m2_crank_laurent(trunc: usize) -> ZLaurentSeries {
    let base = eta_quotient(&[Poch::neg(1, 2, 1), Poch::eta(2, 1)], trunc).expect("valid factors");
    divide_crank_poles(&base, 2, trunc)
}

/// Σ M(m,n) z^m q^n = (q;q)/((zq;q)(z⁻¹q;q)).
pub fn crank_laurent(trunc: usize) -> ZLaurentSeries {
    let base = eta_quotient(&[Poch::eta(1, 1)], trunc).expect("valid factors");
    divide_crank_poles(&base, 1, trunc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use series_core::small_ints;

    #[test]
    fn spt_series_first_terms() {
        // spt: 1, 3, 5, 10, 14 for n = 1..5
        let s = small_ints(&spt_generating_function(SptVariant::Spt, 5));
        assert_eq!(&s[1..], &[1, 3, 5, 10, 14]);
        let b = small_ints(&spt_generating_function(SptVariant::SptBar, 4));
        assert_eq!(b[3], 6);
        assert_eq!(b[4], 13);
        assert_eq!(small_ints(&spt_generating_function(SptVariant::SptBar1, 5))[4..], [10, 20]);
        assert_eq!(small_ints(&spt_generating_function(SptVariant::SptBar2, 8))[8], 15);
        assert_eq!(small_ints(&spt_generating_function(SptVariant::M2Spt, 6))[6], 5);
    }

    #[test]
    fn crank_of_one_from_series() {
        let m = crank_laurent(3);
        assert_eq!(m.get(0, 1), BigInt::from(-1));
        assert_eq!(m.get(1, 1), BigInt::from(1));
        assert_eq!(m.get(-1, 1), BigInt::from(1));
        assert_eq!(m.get(0, 0), BigInt::from(1));
    }

    #[test]
    fn residual_crank_rows_count_overpartitions() {
        let m = residual_crank_laurent(10);
        let pbar = small_ints(&overpartition_gf(10));
        for n in 0..=10 {
            assert_eq!(m.row_sum(n), BigInt::from(pbar[n]));
        }
        assert_eq!(pbar[4], 14);
    }

    #[test]
    fn watson_forms_agree_symbolically() {
        assert_eq!(dyson_rank_laurent(30), dyson_rank_lambert_laurent(30));
        assert_eq!(m2_rank_laurent(30), m2_rank_lambert_laurent(30));
    }

    #[test]
    fn at_root_matches_specialized_laurent() {
        for t in [3u32, 4, 5, 7] {
            let z = CycInt::zeta_pow(t, 1);
            assert_eq!(dyson_rank_at_root(&z, 25), dyson_rank_laurent(25).specialize(t).unwrap());
            assert_eq!(m2_rank_at_root(&z, 25), m2_rank_laurent(25).specialize(t).unwrap());
            assert_eq!(residual_crank_at_root(&z, 25), residual_crank_laurent(25).specialize(t).unwrap());
            assert_eq!(m2_crank_at_root(&z, 25), m2_crank_laurent(25).specialize(t).unwrap());
        }
    }
}
