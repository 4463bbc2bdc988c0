//! Exact arithmetic in the cyclotomic integers ℤ[ζ_t].
//!
//! An element is stored as its canonical representative modulo the `t`-th
//! cyclotomic polynomial Φ_t, i.e. a coefficient vector of length `deg Φ_t`
//! in the power basis `1, ζ, …, ζ^{deg-1}`.
//!
//! - `t = 1` degenerates to the rational integers (ζ = 1).
//! - `t = 2` is also ℤ, with ζ = −1.
//! - `t = 4` is the Gaussian integers, ζ = i.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Largest supported root-of-unity order.
pub const MAX_ORDER: u32 = 1024;

struct Ring {
    deg: usize,
    /// `powers[k]` holds x^k mod Φ_t for 0 ≤ k < t.
    powers: Vec<Vec<i64>>,
}

static RINGS: [OnceLock<Ring>; MAX_ORDER as usize + 1] = [const { OnceLock::new() }; MAX_ORDER as usize + 1];

/// Coefficients (lowest degree first) of the `t`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(t: u32) -> Vec<i64> {
    assert!(t >= 1, "cyclotomic order must be positive");
    // x^t - 1 divided by Φ_d for every proper divisor d of t.
    let mut num = vec![0i64; t as usize + 1];
    num[0] = -1;
    num[t as usize] = 1;
    for d in 1..t {
        if t.is_multiple_of(d) {
            num = div_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quo = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn];
        quo[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quo
}

fn ring(t: u32) -> &'static Ring {
    assert!((1..=MAX_ORDER).contains(&t), "root-of-unity order {t} outside 1..={MAX_ORDER}");
    RINGS[t as usize].get_or_init(|| {
        let phi = cyclotomic_polynomial(t);
        let deg = phi.len() - 1;
        let mut powers = Vec::with_capacity(t as usize);
        let mut cur = vec![0i64; deg];
        cur[0] = 1;
        for _ in 0..t {
            powers.push(cur.clone());
            // multiply by x and reduce the overflow with x^deg = -Σ phi_i x^i
            let top = cur[deg - 1];
            for i in (1..deg).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for i in 0..deg {
                    cur[i] = cur[i]
                        .checked_sub(top.checked_mul(phi[i]).expect("reduction overflow"))
                        .expect("reduction overflow");
                }
            }
        }
        Ring { deg, powers }
    })
}

/// Degree of Φ_t, i.e. Euler's totient of `t`.
pub fn cyclotomic_degree(t: u32) -> usize {
    ring(t).deg
}

/// Canonical reduction of an integer polynomial in ζ_t.
///
/// `raw[k]` is the coefficient of ζ^k; any length is accepted.
pub fn cyc_reduce(t: u32, raw: &[i64]) -> CycInt {
    let raw: Vec<BigInt> = raw.iter().map(|&c| BigInt::from(c)).collect();
    CycInt::from_raw(t, &raw)
}

/// An exact element of ℤ[ζ_t] in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CycInt {
    order: u32,
    coeffs: Vec<BigInt>,
}

impl CycInt {
    pub fn zero(t: u32) -> Self {
        CycInt { order: t, coeffs: vec![BigInt::zero(); ring(t).deg] }
    }

    pub fn one(t: u32) -> Self {
        Self::from_int(t, 1)
    }

    pub fn from_int(t: u32, c: impl Into<BigInt>) -> Self {
        let mut z = Self::zero(t);
        z.coeffs[0] = c.into();
        z
    }

    /// ζ_t^k for any integer `k`.
    pub fn zeta_pow(t: u32, k: i64) -> Self {
        let r = ring(t);
        let e = k.rem_euclid(t as i64) as usize;
        CycInt { order: t, coeffs: r.powers[e].iter().map(|&c| BigInt::from(c)).collect() }
    }

    /// Σ c·ζ^e over the given `(c, e)` terms; exponents may be negative.
    pub fn from_terms(t: u32, terms: &[(i64, i64)]) -> Self {
        let mut raw = vec![BigInt::zero(); t as usize];
        for &(c, e) in terms {
            raw[e.rem_euclid(t as i64) as usize] += c;
        }
        Self::from_raw(t, &raw)
    }

    /// Reduce an arbitrary-length coefficient vector in powers of ζ_t.
    pub fn from_raw(t: u32, raw: &[BigInt]) -> Self {
        let r = ring(t);
        let mut out = vec![BigInt::zero(); r.deg];
        for (k, c) in raw.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < r.deg {
                out[k] += c;
            } else {
                for (o, &p) in out.iter_mut().zip(&r.powers[k % t as usize]) {
                    if p != 0 {
                        *o += c * p;
                    }
                }
            }
        }
        CycInt { order: t, coeffs: out }
    }

    /// Build from a canonical coefficient vector; panics on a length mismatch.
    pub fn from_coeffs(t: u32, coeffs: Vec<BigInt>) -> Self {
        assert_eq!(coeffs.len(), ring(t).deg, "coefficient vector has wrong length");
        CycInt { order: t, coeffs }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational integer this element equals, if it lies in ℤ.
    pub fn as_integer(&self) -> Option<&BigInt> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Re-embed an integer (order 1 or 2 element, or any element lying in ℤ) into ℤ[ζ_t].
    pub fn lift(&self, t: u32) -> Self {
        let c = self.as_integer().expect("only rational integers can be lifted");
        Self::from_int(t, c.clone())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        CycInt { order: self.order, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Multiply by ζ^k.
    pub fn mul_zeta_pow(&self, k: i64) -> Self {
        let t = self.order as i64;
        let e = k.rem_euclid(t) as usize;
        if e == 0 {
            return self.clone();
        }
        let mut raw = vec![BigInt::zero(); self.coeffs.len() + e];
        for (i, c) in self.coeffs.iter().enumerate() {
            raw[i + e] = c.clone();
        }
        Self::from_raw(self.order, &raw)
    }

    /// If `self` is a power ζ^k, return ζ^{-k}.
    pub fn root_inverse(&self) -> Option<CycInt> {
        let t = self.order as i64;
        (0..t).find(|&k| CycInt::zeta_pow(self.order, k) == *self).map(|k| CycInt::zeta_pow(self.order, -k))
    }

    /// self += a·b, with a fast path when either factor is a rational integer.
    pub fn add_mul(&mut self, a: &CycInt, b: &CycInt) {
        self.check(a);
        self.check(b);
        if let Some(c) = b.as_integer() {
            add_scaled(&mut self.coeffs, &a.coeffs, c);
        } else if let Some(c) = a.as_integer() {
            add_scaled(&mut self.coeffs, &b.coeffs, c);
        } else {
            let p = a * b;
            *self += &p;
        }
    }

    /// self -= a·b.
    pub fn sub_mul(&mut self, a: &CycInt, b: &CycInt) {
        self.check(a);
        self.check(b);
        if let Some(c) = b.as_integer() {
            add_scaled(&mut self.coeffs, &a.coeffs, &-c);
        } else if let Some(c) = a.as_integer() {
            add_scaled(&mut self.coeffs, &b.coeffs, &-c);
        } else {
            let p = a * b;
            *self -= &p;
        }
    }

    fn check(&self, other: &CycInt) {
        assert_eq!(self.order, other.order, "cyclotomic order mismatch");
    }
}

fn add_scaled(acc: &mut [BigInt], src: &[BigInt], c: &BigInt) {
    if c.is_zero() {
        return;
    }
    if c.is_one() {
        for (a, s) in acc.iter_mut().zip(src) {
            *a += s;
        }
    } else if (-c).is_one() {
        for (a, s) in acc.iter_mut().zip(src) {
            *a -= s;
        }
    } else {
        for (a, s) in acc.iter_mut().zip(src) {
            if !s.is_zero() {
                *a += s * c;
            }
        }
    }
}

impl AddAssign<&CycInt> for CycInt {
    fn add_assign(&mut self, rhs: &CycInt) {
        self.check(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl SubAssign<&CycInt> for CycInt {
    fn sub_assign(&mut self, rhs: &CycInt) {
        self.check(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}

impl Add for &CycInt {
    type Output = CycInt;
    fn add(self, rhs: &CycInt) -> CycInt {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &CycInt {
    type Output = CycInt;
    fn sub(self, rhs: &CycInt) -> CycInt {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        CycInt { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &CycInt {
    type Output = CycInt;
    fn mul(self, rhs: &CycInt) -> CycInt {
        self.check(rhs);
        if let Some(c) = rhs.as_integer() {
            return self.scale(c);
        }
        if let Some(c) = self.as_integer() {
            return rhs.scale(c);
        }
        let d = self.coeffs.len();
        let mut raw = vec![BigInt::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        CycInt::from_raw(self.order, &raw)
    }
}

impl fmt::Display for CycInt {
    /// Renders as a ζ-polynomial, e.g. `-1 - ζ^2 - ζ^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            match k {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "ζ")?,
                1 => write!(f, "{mag}ζ")?,
                _ if unit => write!(f, "ζ^{k}")?,
                _ => write!(f, "{mag}ζ^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(z: &CycInt) -> Vec<i64> {
        z.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_degree(13), 12);
        assert_eq!(cyclotomic_degree(200), 80);
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(ints(&cyc_reduce(3, &[0, 0, 1])), vec![-1, -1]);
        assert_eq!(ints(&cyc_reduce(4, &[0, 0, 1])), vec![-1, 0]);
        assert!(cyc_reduce(5, &[1, 1, 1, 1, 1]).is_zero());
    }

    #[test]
    fn zeta_has_order_t() {
        for t in 1..=30 {
            let z = CycInt::zeta_pow(t, 1);
            let mut p = CycInt::one(t);
            for _ in 0..t {
                p = &p * &z;
            }
            assert_eq!(p, CycInt::one(t), "t = {t}");
        }
    }

    #[test]
    fn trivial_orders_are_integers() {
        assert_eq!(CycInt::zeta_pow(1, 7), CycInt::one(1));
        assert_eq!(CycInt::zeta_pow(2, 1), CycInt::from_int(2, -1));
    }

    #[test]
    fn display_renders_polynomial() {
        let s = CycInt::from_terms(5, &[(1, 1), (1, -1)]);
        assert_eq!(s.to_string(), "-1 - ζ^2 - ζ^3");
        assert_eq!(CycInt::zero(5).to_string(), "0");
        assert_eq!(CycInt::from_terms(3, &[(2, 1)]).to_string(), "2ζ");
    }

    #[test]
    fn mul_zeta_pow_matches_mul() {
        let a = CycInt::from_terms(7, &[(3, 0), (-2, 4), (5, 5)]);
        for k in -8..8 {
            assert_eq!(a.mul_zeta_pow(k), &a * &CycInt::zeta_pow(7, k));
        }
    }
}
