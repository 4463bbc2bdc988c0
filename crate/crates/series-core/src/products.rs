//! Pochhammer products, eta quotients and theta functions.

use num_bigint::BigInt;

use crate::cyclotomic::CycInt;
use crate::error::{Result, SeriesError};
use crate::qseries::QSeries;

fn check_args(shift: usize, step: usize) -> Result<()> {
    if shift == 0 {
        return Err(SeriesError::InvalidShift(shift));
    }
    if step == 0 {
        return Err(SeriesError::InvalidStep);
    }
    Ok(())
}

/// (c·q^s; q^d)_∞ = ∏_{k≥0} (1 − c q^{s+kd}) to order `trunc`, over ℤ[ζ_t] with `t = c.order()`.
pub fn poch_inf(scalar: &CycInt, shift: usize, step: usize, trunc: usize) -> Result<QSeries> {
    check_args(shift, step)?;
    let mut s = QSeries::one(scalar.order(), trunc);
    if !scalar.is_zero() {
        for e in (shift..=trunc).step_by(step) {
            s.mul_one_minus(scalar, e);
        }
    }
    Ok(s)
}

/// 1/(c·q^s; q^d)_∞ to order `trunc`.
pub fn poch_inf_inv(scalar: &CycInt, shift: usize, step: usize, trunc: usize) -> Result<QSeries> {
    check_args(shift, step)?;
    let mut s = QSeries::one(scalar.order(), trunc);
    if !scalar.is_zero() {
        for e in (shift..=trunc).step_by(step) {
            s.div_one_minus(scalar, e);
        }
    }
    Ok(s)
}

/// One factor `(±q^shift; q^step)_∞^power` of an eta quotient.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Poch {
    /// `true` for `(−q^shift; q^step)_∞`.
    pub neg: bool,
    pub shift: usize,
    pub step: usize,
    pub power: i32,
}

impl Poch {
    /// `(q^shift; q^step)_∞^power`
    pub const fn new(shift: usize, step: usize, power: i32) -> Self {
        Poch { neg: false, shift, step, power }
    }

    /// `(−q^shift; q^step)_∞^power`
    pub const fn neg(shift: usize, step: usize, power: i32) -> Self {
        Poch { neg: true, shift, step, power }
    }

    /// `(q^k; q^k)_∞^power`
    pub const fn eta(k: usize, power: i32) -> Self {
        Poch::new(k, k, power)
    }
}

/// Expand ∏ factors over ℤ to order `trunc`.
pub fn eta_quotient(factors: &[Poch], trunc: usize) -> Result<QSeries> {
    let mut s = QSeries::one(1, trunc);
    for f in factors {
        check_args(f.shift, f.step)?;
        let c = CycInt::from_int(1, if f.neg { -1 } else { 1 });
        for _ in 0..f.power.unsigned_abs() {
            for e in (f.shift..=trunc).step_by(f.step) {
                if f.power > 0 {
                    s.mul_one_minus(&c, e);
                } else {
                    s.div_one_minus(&c, e);
                }
            }
        }
    }
    Ok(s)
}

/// φ(±q) = Σ_{k∈ℤ} (±1)^k q^{k²} from the sum definition.
pub fn theta_phi(t: u32, sign: i8, trunc: usize) -> QSeries {
    assert!(sign == 1 || sign == -1);
    let mut s = QSeries::one(t, trunc);
    let mut k = 1usize;
    while k * k <= trunc {
        let c = if sign < 0 && k % 2 == 1 { -2 } else { 2 };
        *s.coeff_mut(k * k) = CycInt::from_int(t, c);
        k += 1;
    }
    s
}

/// φ(±q) from the product side: φ(q) = (−q;q²)²(q²;q²), φ(−q) = (q;q²)²(q²;q²).
pub fn theta_phi_product(t: u32, sign: i8, trunc: usize) -> QSeries {
    assert!(sign == 1 || sign == -1);
    let odd = if sign > 0 { Poch::neg(1, 2, 2) } else { Poch::new(1, 2, 2) };
    eta_quotient(&[odd, Poch::eta(2, 1)], trunc).expect("valid factors").lift(t)
}

/// Ramanujan's f(q^a, q^b) = Σ_{k∈ℤ} q^{a·k(k+1)/2 + b·k(k−1)/2} from the sum definition.
pub fn theta_f(t: u32, a_exp: usize, b_exp: usize, trunc: usize) -> QSeries {
    assert!(a_exp + b_exp >= 1, "theta_f needs a_exp + b_exp >= 1");
    let mut raw = vec![BigInt::from(0); trunc + 1];
    let exp = |k: i64| -> Option<usize> {
        let e =
            (a_exp as i128) * (k as i128) * (k as i128 + 1) / 2 + (b_exp as i128) * (k as i128) * (k as i128 - 1) / 2;
        usize::try_from(e).ok().filter(|&e| e <= trunc)
    };
    for dir in [1i64, -1] {
        let mut k = if dir > 0 { 0 } else { -1 };
        // exponents are convex in k, so stop once they pass trunc moving away from the vertex
        let mut misses = 0;
        while misses < 2 {
            match exp(k) {
                Some(e) => {
                    raw[e] += 1;
                    misses = 0;
                }
                None => misses += 1,
            }
            k += dir;
        }
    }
    QSeries::from_bigints(t, raw)
}

/// f(q^a, q^b) from the Jacobi triple product (−q^a;q^{a+b})(−q^b;q^{a+b})(q^{a+b};q^{a+b}).
pub fn theta_f_product(t: u32, a_exp: usize, b_exp: usize, trunc: usize) -> Result<QSeries> {
    let ab = a_exp + b_exp;
    Ok(eta_quotient(&[Poch::neg(a_exp, ab, 1), Poch::neg(b_exp, ab, 1), Poch::eta(ab, 1)], trunc)?.lift(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::small_ints;

    #[test]
    fn euler_pentagonal() {
        let s = poch_inf(&CycInt::one(1), 1, 1, 7).unwrap();
        assert_eq!(small_ints(&s), vec![1, -1, -1, 0, 0, 1, 0, 1]);
    }

    #[test]
    fn distinct_parts_of_six() {
        let s = poch_inf(&CycInt::from_int(1, -1), 1, 1, 6).unwrap();
        assert_eq!(small_ints(&s)[6], 4);
    }

    #[test]
    fn zero_scalar_gives_one() {
        let s = poch_inf(&CycInt::zero(5), 1, 1, 6).unwrap();
        assert_eq!(s, QSeries::one(5, 6));
    }

    #[test]
    fn partition_numbers() {
        let s = poch_inf_inv(&CycInt::one(1), 1, 1, 10).unwrap();
        assert_eq!(small_ints(&s)[5], 7);
        let s2 = poch_inf_inv(&CycInt::one(1), 2, 2, 10).unwrap();
        assert_eq!(small_ints(&s2)[4], 2);
    }

    #[test]
    fn shift_zero_rejected() {
        assert_eq!(poch_inf(&CycInt::one(1), 0, 1, 5), Err(SeriesError::InvalidShift(0)));
        assert_eq!(poch_inf_inv(&CycInt::one(1), 0, 1, 5), Err(SeriesError::InvalidShift(0)));
        assert_eq!(poch_inf(&CycInt::one(1), 1, 0, 5), Err(SeriesError::InvalidStep));
    }

    #[test]
    fn phi_sum_form() {
        assert_eq!(small_ints(&theta_phi(1, 1, 9)), vec![1, 2, 0, 0, 2, 0, 0, 0, 0, 2]);
    }

    #[test]
    fn phi_sum_equals_product() {
        for sign in [1, -1] {
            assert_eq!(theta_phi(1, sign, 80), theta_phi_product(1, sign, 80));
        }
    }

    #[test]
    fn phi_minus_q_times_ratio_is_one() {
        let n = 60;
        let ratio = eta_quotient(&[Poch::neg(1, 1, 1), Poch::eta(1, -1)], n).unwrap();
        let p = theta_phi(1, -1, n).mul(&ratio).unwrap();
        assert_eq!(p, QSeries::one(1, n));
    }

    #[test]
    fn f_qq_is_phi() {
        assert_eq!(theta_f(1, 1, 1, 50), theta_phi(1, 1, 50));
    }

    #[test]
    fn f_sum_equals_product() {
        for (a, b) in [(1, 2), (3, 15), (2, 5), (1, 1), (4, 4)] {
            assert_eq!(theta_f(1, a, b, 90), theta_f_product(1, a, b, 90).unwrap(), "f(q^{a},q^{b})");
        }
    }

    #[test]
    fn eta_quotient_inverse() {
        let f = [Poch::new(2, 5, 2), Poch::neg(3, 10, -1)];
        let inv = [Poch::new(2, 5, -2), Poch::neg(3, 10, 1)];
        let p = eta_quotient(&f, 40).unwrap().mul(&eta_quotient(&inv, 40).unwrap()).unwrap();
        assert_eq!(p, QSeries::one(1, 40));
    }
}
