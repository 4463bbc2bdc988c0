//! Lambert-type sums with the quadratic poles `(1 − ζq^g)(1 − ζ⁻¹q^g)`.
//!
//! Each builder sums
//!
//! ```text
//! Σ_{n≥1} sign(n) (1−ζ)(1−ζ⁻¹) q^{a(n)} [1 + q^{h(n)}] / ((1 − ζq^{g(n)})(1 − ζ⁻¹q^{g(n)}))
//! ```
//!
//! either at a concrete root of unity or with `ζ` kept symbolic as `z`.

use num_bigint::BigInt;

use crate::cyclotomic::CycInt;
use crate::error::{Result, SeriesError};
use crate::laurent::ZLaurentSeries;
use crate::qseries::QSeries;

/// Exponent and sign schedule of a Lambert sum.
#[derive(Clone, Copy, Debug)]
pub struct LambertSchedule {
    /// a(n): must be strictly increasing.
    pub numer_exp: fn(u64) -> u64,
    /// g(n) ≥ 1.
    pub pole_exp: fn(u64) -> u64,
    /// ±1
    pub sign: fn(u64) -> i8,
    /// h(n) for an extra numerator factor `(1 + q^{h(n)})`.
    pub extra: Option<fn(u64) -> u64>,
}

fn alternating(n: u64) -> i8 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl LambertSchedule {
    /// a(n) = n² + n, g(n) = n, sign (−1)^n: the overpartition rank series.
    pub fn dyson_rank() -> Self {
        LambertSchedule { numer_exp: |n| n * n + n, pole_exp: |n| n, sign: alternating, extra: None }
    }

    /// a(n) = 2n² + n, g(n) = 2n, extra (1 + q^{2n}), sign (−1)^n: the M₂-rank series.
    pub fn m2_rank() -> Self {
        LambertSchedule { numer_exp: |n| 2 * n * n + n, pole_exp: |n| 2 * n, sign: alternating, extra: Some(|n| 2 * n) }
    }

    /// a(n) = n, g(n) = n, sign (−1)^n.
    pub fn extra_series() -> Self {
        LambertSchedule { numer_exp: |n| n, pole_exp: |n| n, sign: alternating, extra: None }
    }

    /// Visit every placed term as `(sign, base exponent, pole exponent)` with base ≤ trunc.
    fn for_each_term(&self, trunc: usize, mut f: impl FnMut(i8, usize, usize)) -> Result<()> {
        let mut prev: Option<u64> = None;
        let mut n = 1u64;
        loop {
            let a = (self.numer_exp)(n);
            if let Some(p) = prev {
                if a <= p {
                    return Err(SeriesError::NonIncreasingSchedule(n));
                }
            }
            if a > trunc as u64 {
                return Ok(());
            }
            prev = Some(a);
            let g = (self.pole_exp)(n);
            if g == 0 {
                return Err(SeriesError::InvalidPole(n));
            }
            let sign = (self.sign)(n);
            f(sign, a as usize, g as usize);
            if let Some(h) = self.extra {
                let b = a + h(n);
                if b <= trunc as u64 {
                    f(sign, b as usize, g as usize);
                }
            }
            n += 1;
        }
    }
}

/// Evaluate the Lambert sum at the concrete root `zeta` (an element of ℤ[ζ_t]).
pub fn lambert_sum(zeta: &CycInt, schedule: &LambertSchedule, trunc: usize) -> Result<QSeries> {
    let t = zeta.order();
    let zeta_inv = zeta.root_inverse().unwrap_or_else(|| panic!("lambert_sum expects a root of unity, got {zeta}"));
    let s = zeta + &zeta_inv;
    // coefficient of x^K in (1−ζ)(1−ζ⁻¹)/((1−ζx)(1−ζ⁻¹x)) is (2 − s)·U_K with U_K = s·U_{K−1} − U_{K−2}
    let two_minus_s = &CycInt::from_int(t, 2) - &s;
    let mut u = Vec::with_capacity(trunc + 1);
    u.push(CycInt::one(t));
    if trunc >= 1 {
        u.push(s.clone());
    }
    for k in 2..=trunc {
        let mut next = &u[k - 1] * &s;
        next -= &u[k - 2];
        u.push(next);
    }
    let c: Vec<CycInt> = u.iter().map(|x| x * &two_minus_s).collect();
    let mut out = QSeries::zero(t, trunc);
    schedule.for_each_term(trunc, |sign, a, g| {
        for (k, ck) in c.iter().enumerate() {
            let e = a + g * k;
            if e > trunc {
                break;
            }
            if sign > 0 {
                *out.coeff_mut(e) += ck;
            } else {
                *out.coeff_mut(e) -= ck;
            }
        }
    })?;
    Ok(out)
}

/// The Lambert sum with `ζ` replaced by the formal variable `z`.
pub fn lambert_sum_laurent(schedule: &LambertSchedule, trunc: usize) -> Result<ZLaurentSeries> {
    let mut out = ZLaurentSeries::zero(trunc);
    schedule.for_each_term(trunc, |sign, a, g| {
        let mut k = 0usize;
        while a + g * k <= trunc {
            let e = a + g * k;
            // (2 − z − z⁻¹)·Σ_{|m|≤k, m≡k (2)} z^m, supported on |m| ≤ k+1 ≤ e
            let kk = k as i64;
            for m in -(kk + 1)..=(kk + 1) {
                let on = |m: i64| m.abs() <= kk && (m - kk) % 2 == 0;
                let v = 2 * on(m) as i64 - on(m - 1) as i64 - on(m + 1) as i64;
                if v != 0 {
                    out.add_at(m, e, &BigInt::from(v * sign as i64)).expect("bound |m| <= k+1 <= e");
                }
            }
            k += 1;
        }
    })?;
    Ok(out)
}
